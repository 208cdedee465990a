"""Weight-vector linear programs attached to a polynomial's support.

For f vanishing at the origin, every nonnegative weight vector w gives
the bound  lct <= (sum of w_i) / (weighted multiplicity of f at w).
Normalizing the weighted multiplicity to 1 turns the best such bound
into a linear program over the support:

    minimize  w_1 + ... + w_n
    subject   <w, m> >= 1  for every support exponent m,  w >= 0.

Two independent solvers are kept side by side on purpose: the simplex
path (:func:`lp_minimize`) and a brute-force vertex enumerator
(:func:`vertex_enum_oracle`) used to cross-check it. Do not merge them.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError, UnitAtOriginError, ZeroPolynomialError
from .poly import SparsePoly
from .rational import ONE, Rat, ZERO, rat
from .simplex import simplex_min_geq, solve_square_system

EXACT_IF_NONDEGENERATE = "EXACT_IF_NONDEGENERATE"
UPPER_BOUND_ONLY = "UPPER_BOUND_ONLY"


@dataclass(frozen=True)
class WeightLP:
    """Support constraints for the weight LP. Vectors must be nonzero."""

    n: int
    constraints: tuple

    def __post_init__(self):
        if not isinstance(self.n, numbers.Integral) or self.n < 1:
            raise DomainError("number of variables must be a positive integer")
        rows = tuple(tuple(int(e) for e in m) for m in self.constraints)
        if not rows:
            raise DomainError("empty support")
        for m in rows:
            if len(m) != self.n:
                raise DomainError(f"support vector {m} has wrong length for n={self.n}")
            if any(e < 0 for e in m):
                raise DomainError(f"negative exponent in support vector {m}")
            if all(e == 0 for e in m):
                raise UnitAtOriginError("zero support vector: the weight problem is infeasible")
        object.__setattr__(self, "constraints", rows)


@dataclass(frozen=True)
class LPResult:
    value: Rat
    w: tuple
    active: frozenset  # indices of constraints tight at the optimum


@dataclass(frozen=True)
class NewtonBound:
    bound: Rat
    certificate: tuple
    exactness: str = EXACT_IF_NONDEGENERATE


def weight_lp_from_poly(f: SparsePoly) -> WeightLP:
    if f.is_zero:
        raise ZeroPolynomialError("no weight problem for the zero polynomial")
    if f.constant_term != 0:
        raise UnitAtOriginError("unit at the origin: no weight problem")
    return WeightLP(f.n, f.sorted_support())


def _active_set(lp: WeightLP, w) -> frozenset:
    return frozenset(
        j for j, m in enumerate(lp.constraints) if sum(wi * e for wi, e in zip(w, m)) == 1
    )


def _check_feasible(lp: WeightLP, w):
    if any(wi < 0 for wi in w):
        raise AssertionError("negative weight in LP solution")
    for m in lp.constraints:
        if sum(wi * e for wi, e in zip(w, m)) < 1:
            raise AssertionError("LP solution violates a support constraint")


def lp_minimize(lp: WeightLP) -> LPResult:
    """Simplex route. The optimum is unique in value, not in w."""
    n = lp.n
    sol = simplex_min_geq([ONE] * n, list(lp.constraints), [ONE] * len(lp.constraints))
    _check_feasible(lp, sol.x)
    return LPResult(value=sol.value, w=sol.x, active=_active_set(lp, sol.x))


def vertex_enum_oracle(lp: WeightLP) -> LPResult:
    """Independent solver for n <= 3: enumerate candidate vertices.

    Every vertex of {w >= 0, <w, m> >= 1} lies on n of the defining
    hyperplanes; solve each n-subset exactly and keep the best feasible
    point. Ties prefer the lexicographically smallest w.
    """
    n = lp.n
    if n > 3:
        raise DomainError("vertex enumeration oracle is limited to n <= 3")
    planes = [(tuple(rat(e) for e in m), ONE) for m in lp.constraints]
    for i in range(n):
        planes.append((tuple(ONE if k == i else ZERO for k in range(n)), ZERO))
    best = None
    for subset in combinations(planes, n):
        w = solve_square_system([p[0] for p in subset], [p[1] for p in subset])
        if w is None:
            continue
        if any(wi < 0 for wi in w):
            continue
        if any(sum(wi * e for wi, e in zip(w, m)) < 1 for m in lp.constraints):
            continue
        value = sum(w, ZERO)
        if best is None or (value, w) < (best[0], best[1]):
            best = (value, w)
    if best is None:  # cannot happen for nonzero nonnegative support
        raise AssertionError("vertex enumeration found no feasible point")
    value, w = best
    return LPResult(value=value, w=w, active=_active_set(lp, w))


def lct_newton_bound(f: SparsePoly) -> NewtonBound:
    """Upper bound min(1, LP value) with its weight certificate.

    Exact for Newton-nondegenerate f; in general only an upper bound
    for the threshold at the origin, hence the exactness flag.
    """
    lp = weight_lp_from_poly(f)
    res = lp_minimize(lp)
    bound = res.value if res.value < 1 else ONE
    return NewtonBound(bound=bound, certificate=res.w, exactness=EXACT_IF_NONDEGENERATE)
