"""The threshold sets F_n and G_n: enumeration, extremal elements,
increasing chains, and accumulation-point witnesses.

F_n is the set of n-term unit-fraction sums inside (0, 1]; G_n collects
the values (sum 1/b_i) / (1 + sum a_i/b_i). F_n satisfies the ascending
chain condition while G_n does not, and the accumulation points of F_n
inside [0, 1) are exactly the F_{n-1} values; the routines here produce
the finite evidence for all three phenomena.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass

from .errors import ChainConditionError, DomainError, InfiniteEnumerationError
from .rational import ONE, Rat, ZERO, fmt, rat, rat_ceil

_SYLVESTER_MAX = 8


def sylvester_sequence(k: int) -> tuple:
    """a_1 = 2, a_{j+1} = a_1 * ... * a_j + 1, first k terms."""
    if not isinstance(k, numbers.Integral) or not 1 <= k <= _SYLVESTER_MAX:
        raise DomainError(f"k must lie in 1..{_SYLVESTER_MAX}")
    seq = [2]
    prod = 2
    while len(seq) < k:
        seq.append(prod + 1)
        prod *= prod + 1
    return tuple(seq)


def delta_prime_candidate(n: int) -> Rat:
    """1/(a_{n+1} - 1): the conjectured gap below 1 in F_n."""
    if not isinstance(n, numbers.Integral) or not 1 <= n <= _SYLVESTER_MAX - 1:
        raise DomainError(f"n must lie in 1..{_SYLVESTER_MAX - 1}")
    seq = sylvester_sequence(int(n) + 1)
    return Rat(1, seq[-1] - 1)


def _max_fn_formula(n: int) -> Rat:
    return 1 - delta_prime_candidate(n)


@dataclass(frozen=True)
class FnElement:
    value: Rat
    witness: tuple  # nondecreasing positive integers with sum of reciprocals = value

    def __init__(self, value, witness):
        value = rat(value)
        ws = tuple(sorted(int(b) for b in witness))
        if any(b < 1 for b in ws):
            raise DomainError("witness entries must be positive integers")
        if sum((Rat(1, b) for b in ws), ZERO) != value:
            raise DomainError("witness does not recompute the value")
        if not 0 < value <= 1:
            raise DomainError("value must lie in (0, 1]")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "witness", ws)


def enumerate_Fn_above(n: int, theta) -> list:
    """All of F_n strictly above theta (and <= 1), sorted descending.

    The list is finite only when theta exceeds every accumulation point
    of F_n below 1, that is theta > max(F_{n-1} in [0,1)); smaller
    cutoffs raise InfiniteEnumerationError rather than recurse forever.
    """
    if not isinstance(n, numbers.Integral) or not 1 <= n <= 4:
        raise DomainError("n must lie in 1..4")
    theta = rat(theta)
    if not 0 < theta < 1:
        raise DomainError("theta must lie strictly between 0 and 1")
    if n >= 2 and theta <= _max_fn_formula(int(n) - 1):
        raise InfiniteEnumerationError(
            f"F_{n} accumulates at {fmt(_max_fn_formula(int(n) - 1))} >= theta = {fmt(theta)}; "
            "the requested enumeration is infinite"
        )
    n = int(n)
    found: dict = {}

    def descend(remaining: int, min_b: int, acc, prefix):
        if remaining == 0:
            if theta < acc <= 1 and acc not in found:
                found[acc] = prefix
            return
        if acc >= 1:
            return  # any further term overshoots the (0, 1] window
        # smallest b keeping acc + 1/b <= 1; the guard makes acc < theta
        # at every internal node, so the loop below is finite
        b = max(min_b, rat_ceil(1 / (1 - acc)))
        while acc + Rat(remaining, b) > theta:
            descend(remaining - 1, b, acc + Rat(1, b), prefix + (b,))
            b += 1

    descend(n, 1, ZERO, ())
    return [
        FnElement(v, found[v]) for v in sorted(found, reverse=True)
    ]


def max_Fn_below_one(n: int) -> Rat:
    """Largest element of F_n strictly below 1: 1 - 1/(a_{n+1} - 1).

    For n <= 3 the closed form is cross-validated against a fresh
    enumeration just above the previous level's maximum.
    """
    if not isinstance(n, numbers.Integral) or not 1 <= n <= _SYLVESTER_MAX - 1:
        raise DomainError(f"n must lie in 1..{_SYLVESTER_MAX - 1}")
    value = _max_fn_formula(int(n))
    if n <= 3:
        cutoffs = {1: Rat(1, 3), 2: Rat(2, 3), 3: Rat(9, 10)}
        listed = enumerate_Fn_above(int(n), cutoffs[int(n)])
        below = [e.value for e in listed if e.value < 1]
        if not below or max(below) != value:
            raise AssertionError("closed form disagrees with enumeration")
    return value


@dataclass(frozen=True)
class GnElement:
    value: Rat
    a: tuple
    b: tuple

    def __init__(self, value, a, b):
        a = tuple(int(x) for x in a)
        b = tuple(int(x) for x in b)
        value = rat(value)
        s = sum((Rat(1, x) for x in b), ZERO)
        t = sum((Rat(ai, bi) for ai, bi in zip(a, b)), ZERO)
        if len(a) != len(b) or s / (1 + t) != value:
            raise DomainError("witness does not recompute the value")
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


@dataclass(frozen=True)
class GnChain:
    elements: tuple  # GnElement, strictly increasing values
    limit: Rat


def gn_increasing_chain(a, b_prefix, K: int, b_start: int = 1) -> GnChain:
    """K-term strictly increasing chain in G_n obtained by growing b_n.

    With S = sum 1/b_i and T = sum a_i/b_i over the fixed prefix, the
    values increase in b_n exactly when S/(1+T) > 1/a_n, and then climb
    toward the limit S/(1+T) without reaching it.
    """
    a = tuple(int(x) for x in a)
    bs = tuple(int(x) for x in b_prefix)
    if len(a) < 1 or len(bs) != len(a) - 1:
        raise DomainError("need weights a_1..a_n and a length n-1 prefix b_1..b_{n-1}")
    if any(x < 1 for x in a) or any(x < 1 for x in bs):
        raise DomainError("chain data must be positive integers")
    if not isinstance(K, numbers.Integral) or K < 2:
        raise DomainError("need at least two chain elements")
    if not isinstance(b_start, numbers.Integral) or b_start < 1:
        raise DomainError("b_start must be a positive integer")
    s = sum((Rat(1, x) for x in bs), ZERO)
    t = sum((Rat(ai, bi) for ai, bi in zip(a, bs)), ZERO)
    limit = s / (1 + t)
    an = a[-1]
    if not limit > Rat(1, an):
        raise ChainConditionError(
            f"increase condition fails: S/(1+T) = {fmt(limit)} is not > 1/a_n = {fmt(Rat(1, an))}",
            lhs=limit,
            rhs=Rat(1, an),
        )
    elements = []
    prev = None
    for bn in range(int(b_start), int(b_start) + int(K)):
        value = (s + Rat(1, bn)) / (1 + t + Rat(an, bn))
        if (prev is not None and value <= prev) or not value < limit:
            raise AssertionError("chain failed to increase strictly below its limit")
        elements.append(GnElement(value, a, bs + (bn,)))
        prev = value
    return GnChain(elements=tuple(elements), limit=limit)


@dataclass(frozen=True)
class AccumulationChain:
    """The decreasing F_n chain target + 1/B for B >= b0."""

    target: FnElement
    b0: int

    @property
    def limit(self) -> Rat:
        return self.target.value

    def element(self, index: int) -> FnElement:
        if not isinstance(index, numbers.Integral) or index < 0:
            raise DomainError("chain index must be a nonnegative integer")
        b = self.b0 + int(index)
        return FnElement(self.target.value + Rat(1, b), self.target.witness + (b,))

    def elements(self, count: int) -> list:
        if not isinstance(count, numbers.Integral) or count < 1:
            raise DomainError("count must be a positive integer")
        return [self.element(i) for i in range(int(count))]


def accumulation_witness(n: int, target: FnElement) -> AccumulationChain:
    """Strictly decreasing F_n chain converging to a given F_{n-1} value.

    B0 is the least denominator keeping target + 1/B inside (0, 1].
    """
    if not isinstance(n, numbers.Integral) or n < 2:
        raise DomainError("n must be at least 2")
    if len(target.witness) != int(n) - 1:
        raise DomainError("target must come from the previous level F_{n-1}")
    if not target.value < 1:
        raise DomainError("no room above a target value of 1")
    gap = 1 - target.value
    b0 = rat_ceil(1 / gap)
    return AccumulationChain(target=target, b0=b0)
