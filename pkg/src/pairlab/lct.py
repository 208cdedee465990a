"""Closed forms, bounds, and combination rules for log canonical
thresholds of hypersurface germs at the origin.

Every routine returns exact rationals. Results carry the method that
produced them plus an optional certificate (typically a weight vector),
and an ``exact`` flag: closed forms are exact on their stated domain,
while bound-type routes mark themselves accordingly.
"""

from __future__ import annotations

import enum
import numbers
from dataclasses import dataclass

from .errors import DomainError, UnitAtOriginError, ZeroPolynomialError
from .pairs import ResolutionData, lct_from_resolution
from .poly import SparsePoly, validate_weights
from .rational import ONE, Rat, ZERO, rat, rat_floor


class Method(enum.Enum):
    MONOMIAL_SUM = "MONOMIAL_SUM"
    PRODUCT_FORM = "PRODUCT_FORM"
    WEIGHTED_HOMOG = "WEIGHTED_HOMOG"
    PLANE_BRANCH = "PLANE_BRANCH"
    RESOLUTION = "RESOLUTION"
    NEWTON_BOUND = "NEWTON_BOUND"
    DIRECT_SUM = "DIRECT_SUM"


@dataclass(frozen=True)
class ThresholdResult:
    value: object  # Rat or POS_INF
    method: Method
    certificate: tuple | None = None
    exact: bool = True


@dataclass(frozen=True)
class BoundInterval:
    lower: Rat
    upper: Rat

    def __post_init__(self):
        if self.lower > self.upper:
            raise DomainError("empty bound interval")


def _cap_one(v):
    return v if v < 1 else ONE


def lct_monomial_sum(exponents) -> ThresholdResult:
    """Threshold of x_1^{b_1} + ... + x_n^{b_n}: min(1, sum 1/b_i)."""
    bs = tuple(exponents)
    if not bs:
        raise DomainError("need at least one exponent")
    if any((not isinstance(b, numbers.Integral)) or b < 1 for b in bs):
        raise DomainError("exponents must be positive integers")
    weights = tuple(Rat(1, int(b)) for b in bs)
    return ThresholdResult(
        value=_cap_one(sum(weights, ZERO)),
        method=Method.MONOMIAL_SUM,
        certificate=weights,
    )


def lct_product_form(a, b) -> ThresholdResult:
    """Threshold of prod x_i^{a_i} * (x_1^{b_1} + ... + x_n^{b_n}).

    Closed form min over i of b_i / (a_i b_i + ... ) below; requires
    every a_i >= 1 (with a_i = 0 throughout, use lct_monomial_sum).
    """
    a = tuple(a)
    b = tuple(b)
    if len(a) != len(b) or not a:
        raise DomainError("a and b must be nonempty and of equal length")
    if any((not isinstance(x, numbers.Integral)) or x < 1 for x in b):
        raise DomainError("b entries must be positive integers")
    if any((not isinstance(x, numbers.Integral)) or x < 1 for x in a):
        raise DomainError("a entries must be positive integers; for a_i = 0 use lct_monomial_sum")
    s = sum((Rat(1, int(x)) for x in b), ZERO)
    t = sum((Rat(int(ai), int(bi)) for ai, bi in zip(a, b)), ZERO)
    # Two vertex families realize the optimum of the attached weight
    # problem: the barycentric weight w_i = 1/(b_i (1 + t)) with every
    # constraint tight, and axis weights 1/a_i picked up where some
    # coordinates carry weight zero. Their minimum is the threshold.
    barycentric = s / (1 + t)
    axis = min(Rat(1, int(ai)) for ai in a)
    return ThresholdResult(
        value=_cap_one(min(barycentric, axis)),
        method=Method.PRODUCT_FORM,
        certificate=None,
    )


def lct_weighted_homogeneous(f: SparsePoly, w, nondegenerate: bool = False) -> ThresholdResult:
    """min(1, sum(w)/w(f)) for strictly positive weights.

    Exact when the caller asserts the weighted-homogeneous leading part
    has no singularity away from the coordinate subspaces (the
    ``nondegenerate`` flag); otherwise an upper bound.
    """
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial has no threshold data")
    ws = validate_weights(w, f.n, positive=True)
    wf = f.weighted_multiplicity(ws)
    if wf <= 0:
        raise UnitAtOriginError("polynomial does not vanish at the origin")
    value = _cap_one(sum(ws, ZERO) / wf)
    return ThresholdResult(
        value=value,
        method=Method.WEIGHTED_HOMOG,
        certificate=ws,
        exact=bool(nondegenerate),
    )


def lct_plane_branch(m: int, n: int) -> ThresholdResult:
    """Threshold 1/m + 1/n of the branch x^m + y^n, 2 <= m < n."""
    if not (isinstance(m, numbers.Integral) and isinstance(n, numbers.Integral)):
        raise DomainError("branch data must be integers")
    if m < 2 or n <= m:
        raise DomainError("branch data requires m >= 2 and n > m")
    return ThresholdResult(
        value=Rat(1, int(m)) + Rat(1, int(n)),
        method=Method.PLANE_BRANCH,
        certificate=(Rat(1, int(m)), Rat(1, int(n))),
    )


def lct_resolution(res: ResolutionData) -> ThresholdResult:
    """Wrap the resolution-data minimum as an engine result."""
    value = lct_from_resolution(res)
    return ThresholdResult(value=value, method=Method.RESOLUTION, certificate=None)


def lct_tangent_cone_bounds(f: SparsePoly, tc_lc: bool = False):
    """Bounds from the multiplicity d at the origin.

    Always 1/d <= lct <= min(1, n/d). When the caller asserts the
    projectivized tangent cone is a log canonical pair (``tc_lc``), the
    upper end is attained and a ThresholdResult is returned instead.
    """
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial has no threshold data")
    if f.constant_term != 0:
        raise UnitAtOriginError("polynomial does not vanish at the origin")
    d = f.multiplicity()
    upper = _cap_one(Rat(f.n, d))
    if tc_lc:
        # n/d is the uniform-weight bound, attained in this case.
        uniform = (Rat(1, d),) * f.n
        return ThresholdResult(value=upper, method=Method.WEIGHTED_HOMOG, certificate=uniform)
    return BoundInterval(lower=Rat(1, d), upper=upper)


def lct_direct_sum(c1, c2) -> ThresholdResult:
    """Threshold of f(x) + g(y) in disjoint variables: min(1, c1 + c2)."""
    c1, c2 = rat(c1), rat(c2)
    for c in (c1, c2):
        if not 0 < c <= 1:
            raise DomainError("summand thresholds must lie in (0, 1]")
    return ThresholdResult(value=_cap_one(c1 + c2), method=Method.DIRECT_SUM, certificate=None)


def lct_power(c0, k: int):
    """Threshold of f^k from the threshold of f: c0 / k."""
    c0 = rat(c0)
    if not 0 < c0 <= 1:
        raise DomainError("threshold must lie in (0, 1]")
    if not isinstance(k, numbers.Integral) or k < 1:
        raise DomainError("power must be a positive integer")
    return c0 / int(k)


def check_combination_inequalities(c_f, c_g, c_sum, c_prod) -> bool:
    """Subadditivity checks for thresholds of f, g, f+g and f*g:

        c(f+g) <= c(f) + c(g)      c(f*g) <= min(c(f), c(g))

    Both can be equalities (monomials realize the product one), so
    neither inequality can be sharpened.
    """
    c_f, c_g, c_sum, c_prod = rat(c_f), rat(c_g), rat(c_sum), rat(c_prod)
    for c in (c_f, c_g, c_sum, c_prod):
        if not 0 < c <= 1:
            raise DomainError("thresholds must lie in (0, 1]")
    return c_sum <= c_f + c_g and c_prod <= c_f and c_prod <= c_g


def truncation_bound(n: int, d: int) -> Rat:
    """Threshold distortion cap n/(d+1) for degree-d truncation in n
    variables: |lct(f) - lct(f truncated at d)| never exceeds it."""
    if not isinstance(n, numbers.Integral) or n < 1:
        raise DomainError("need a positive variable count")
    if not isinstance(d, numbers.Integral) or d < 1:
        raise DomainError("need a positive truncation degree")
    return Rat(int(n), int(d) + 1)


def quasiadjunction_psi(c0, m: int) -> int:
    """floor(m * (c0 + 1)) for a threshold c0 in (0, 1] and m >= 1."""
    c0 = rat(c0)
    if not 0 < c0 <= 1:
        raise DomainError("threshold must lie in (0, 1]")
    if not isinstance(m, numbers.Integral) or m < 1:
        raise DomainError("m must be a positive integer")
    return rat_floor(int(m) * (c0 + 1))
