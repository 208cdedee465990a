"""Spectra and b-polynomial roots for weighted-homogeneous germs.

For f weighted homogeneous of degree 1 with an isolated critical point
and variable weights a_1, ..., a_n, the product

    prod_i (t^{a_i} - t) / (1 - t^{a_i})

is a polynomial in fractional powers of t with positive integer
coefficients (Yano's expansion). Writing it as sum q_alpha t^alpha, the
reduced b-polynomial is prod over {alpha : q_alpha != 0} of (s + alpha)
and the full one carries an extra factor (s + 1).

Everything is computed in the substituted variable u = t^(1/L) with L
the common denominator of the weights, as exact integer coefficient
arrays; division failures raise instead of rounding.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

from .errors import DomainError, ExactnessError
from .lct import lct_monomial_sum
from .pairs import ResolutionData
from .rational import ONE, Rat, fmt, rat


@dataclass(frozen=True)
class SpectrumPoly:
    """Finite exponent spectrum: coeffs maps k to the multiplicity of
    the exponent k/L. All multiplicities are positive integers."""

    L: int
    coeffs: dict

    def exponents(self) -> tuple:
        return tuple(sorted(Rat(k, self.L) for k in self.coeffs))

    def multiplicity_of(self, alpha) -> int:
        alpha = rat(alpha)
        k = alpha * self.L
        if k.denominator != 1:
            return 0
        return self.coeffs.get(int(k), 0)

    @property
    def total_mass(self) -> int:
        return sum(self.coeffs.values())

    def to_pairs(self) -> list:
        """Serialization: ("k/L" reduced, multiplicity), ascending."""
        return [(fmt(Rat(k, self.L)), self.coeffs[k]) for k in sorted(self.coeffs)]


@dataclass(frozen=True)
class BPolyRoots:
    roots: tuple  # negative rationals, sorted descending
    reduced: bool


def _mul_shifted_difference(p: list, k: int, L: int) -> list:
    """Multiply an integer coefficient array by (u^k - u^L), k < L."""
    out = [0] * (len(p) + L)
    for i, c in enumerate(p):
        if c:
            out[i + k] += c
            out[i + L] -= c
    return out


def _divide_by_one_minus_power(p: list, k: int) -> list:
    """Exact division by (1 - u^k); remainder raises ExactnessError."""
    q = [0] * len(p)
    for j in range(len(p)):
        q[j] = p[j] + (q[j - k] if j >= k else 0)
    for j in range(len(p) - k, len(p)):
        if j >= 0 and q[j] != 0:
            raise ExactnessError("division by (1 - u^k) left a remainder")
    return q[: max(len(p) - k, 0)]


def yano_spectrum(weights) -> SpectrumPoly:
    """Expand the weight product into its exponent spectrum.

    Weights must lie in (0, 1/2], as forced by degree-1 weighted
    homogeneity with an isolated critical point. A failed division or
    a nonpositive coefficient means the hypotheses do not hold for the
    supplied weights.
    """
    ws = tuple(rat(a) for a in weights)
    if not ws:
        raise DomainError("need at least one weight")
    for a in ws:
        if not 0 < a <= Rat(1, 2):
            raise DomainError(f"weight {fmt(a)} outside (0, 1/2]")
    n = len(ws)
    L = math.lcm(*(a.denominator for a in ws))
    ks = []
    for a in ws:
        num = a.numerator * L
        ks.append(int(num // a.denominator))

    # numerator: prod (u^{k_i} - u^L); denominator: prod (1 - u^{k_i})
    p = [1]
    for k in ks:
        p = _mul_shifted_difference(p, k, int(L))
    for k in ks:
        p = _divide_by_one_minus_power(p, k)

    coeffs = {}
    for j, c in enumerate(p):
        if c == 0:
            continue
        if c < 0:
            raise ExactnessError("negative spectrum coefficient: invalid weight data")
        if not 0 < j < n * L:
            raise ExactnessError("spectrum exponent outside the open window (0, n)")
        coeffs[j] = c
    if not coeffs:
        raise ExactnessError("empty spectrum: invalid weight data")
    return SpectrumPoly(L=int(L), coeffs=coeffs)


def reduced_bpoly(spectrum: SpectrumPoly) -> BPolyRoots:
    """Roots {-alpha : q_alpha != 0}, each distinct exponent once."""
    if not spectrum.coeffs:
        raise DomainError("empty spectrum")
    roots = tuple(sorted((-Rat(k, spectrum.L) for k in spectrum.coeffs), reverse=True))
    return BPolyRoots(roots=roots, reduced=True)


def largest_root_full(b: BPolyRoots):
    """Largest root of the full b-polynomial (s+1) * reduced part."""
    if b.reduced:
        top = max(b.roots, default=-ONE)
        return top if top > -1 else -ONE
    if not b.roots:
        raise DomainError("a full b-polynomial always has the root -1")
    return max(b.roots)


def check_lct_relation(b_exponents) -> bool:
    """Largest full root against the negated threshold, exactly.

    For f = sum x_i^{m_i} the threshold is min(1, sum 1/m_i) and the
    largest root of the full b-polynomial must be its negative.
    """
    ms = tuple(b_exponents)
    if any((not isinstance(m, numbers.Integral)) or m < 2 for m in ms):
        raise DomainError("exponents must be integers >= 2")
    spectrum = yano_spectrum([Rat(1, int(m)) for m in ms])
    largest = largest_root_full(reduced_bpoly(spectrum))
    threshold = lct_monomial_sum(ms).value
    return largest == -threshold


def candidate_roots(res: ResolutionData, e_max: int) -> frozenset:
    """All values -(a_i + e)/b_i for 0 <= e <= e_max.

    Every root of the b-polynomial has this shape for some divisor on
    a fixed log resolution; the strict transform contributes via the
    convention a = 0, b = 1 when included in the entries.
    """
    if not isinstance(e_max, numbers.Integral) or e_max < 0:
        raise DomainError("e_max must be a nonnegative integer")
    out = set()
    for entry in res.entries:
        if entry.b <= 0:
            raise DomainError("candidate roots need positive pullback multiplicities")
        for e in range(int(e_max) + 1):
            out.add(-(entry.a + e) / entry.b)
    return frozenset(out)
