"""Boundary configurations with simple normal crossings and their
combinatorial invariants.

A configuration records the coefficients d_i of the boundary components
and which pairs of components actually intersect. That data determines
the discrepancy infima over exceptional divisors of all further blow-ups
and hence the standard singularity classes:

    terminal   all d_i < 1 and d_i + d_j < 1 on meeting pairs
    canonical  all d_i <= 1 and d_i + d_j <= 1 on meeting pairs
    klt        all d_i < 1
    plt        all d_i <= 1 and d_i + d_j < 2 on meeting pairs
    lc         all d_i <= 1

As soon as some d_i > 1, repeated blow-ups along that component drive
discrepancies to -inf, which is the NEG_INF short-circuit below.
"""

from __future__ import annotations

import numbers
from dataclasses import dataclass

from .errors import DomainError
from .poly import SparsePoly, validate_weights
from .rational import (
    NEG_INF,
    ONE,
    POS_INF,
    Rat,
    ZERO,
    fmt,
    fmt_extended,
    is_finite,
    parse_extended,
    rat,
)

TERMINAL = "TERMINAL"
CANONICAL = "CANONICAL"
KLT = "KLT"
PLT = "PLT"
LC = "LC"
NOT_LC = "NOT_LC"


@dataclass(frozen=True)
class SncPairConfig:
    """Coefficients plus the set of intersecting component pairs.

    Coefficients may be negative or exceed 1; ``meets`` holds pairs
    (i, j) of 0-based component indices with i < j. Components not
    listed together never intersect.
    """

    coeffs: tuple
    meets: frozenset

    def __init__(self, coeffs, meets=()):
        cs = tuple(rat(c) for c in coeffs)
        norm = set()
        for pair in meets:
            i, j = pair
            if not (isinstance(i, numbers.Integral) and isinstance(j, numbers.Integral)):
                raise DomainError(f"component indices must be integers: {pair}")
            i, j = int(i), int(j)
            if i == j:
                raise DomainError(f"a component cannot meet itself: {pair}")
            if not (0 <= i < len(cs) and 0 <= j < len(cs)):
                raise DomainError(f"component index out of range: {pair}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "meets", frozenset(norm))

    @property
    def ncomponents(self) -> int:
        return len(self.coeffs)

    def with_coeff(self, index: int, value) -> "SncPairConfig":
        if not 0 <= index < len(self.coeffs):
            raise DomainError(f"component index {index} out of range")
        cs = list(self.coeffs)
        cs[index] = rat(value)
        return SncPairConfig(cs, self.meets)


@dataclass(frozen=True)
class SingClass:
    is_terminal: bool
    is_canonical: bool
    is_klt: bool
    is_plt: bool
    is_lc: bool

    @property
    def label(self) -> str:
        if self.is_terminal:
            return TERMINAL
        if self.is_canonical:
            return CANONICAL
        if self.is_klt:
            return KLT
        if self.is_plt:
            return PLT
        if self.is_lc:
            return LC
        return NOT_LC


def classify(config: SncPairConfig) -> SingClass:
    ds = config.coeffs
    all_lt1 = all(d < 1 for d in ds)
    all_le1 = all(d <= 1 for d in ds)
    pairs_lt1 = pairs_le1 = pairs_lt2 = True
    for i, j in config.meets:
        s = ds[i] + ds[j]
        if s >= 1:
            pairs_lt1 = False
            if s > 1:
                pairs_le1 = False
            if s >= 2:
                pairs_lt2 = False
    return SingClass(
        is_terminal=all_lt1 and pairs_lt1,
        is_canonical=all_le1 and pairs_le1,
        is_klt=all_lt1,
        is_plt=all_le1 and pairs_lt2,
        is_lc=all_le1,
    )


def discrep_snc(config: SncPairConfig):
    """Infimum of discrepancies over exceptional divisors (cap 1).

    Returns 1 for the empty configuration and NEG_INF as soon as a
    coefficient exceeds 1.
    """
    ds = config.coeffs
    if any(d > 1 for d in ds):
        return NEG_INF
    best = ONE
    for d in ds:
        if 1 - d < best:
            best = 1 - d
    for i, j in config.meets:
        v = 1 - ds[i] - ds[j]
        if v < best:
            best = v
    return best


def totaldiscrep_snc(config: SncPairConfig):
    """Infimum including the components themselves (a = -d_i), cap 0.

    The component terms -d_i dominate every exceptional term whenever
    all d_i <= 1, so the formula collapses to min(0, -max d_i).
    """
    ds = config.coeffs
    if any(d > 1 for d in ds):
        return NEG_INF
    best = ZERO
    for d in ds:
        if -d < best:
            best = -d
    return best


def monomial_valuation_discrepancy(w, config: SncPairConfig | None = None, c=ZERO, f: SparsePoly | None = None):
    """Discrepancy of the monomial valuation with integer weights w.

    The boundary is sum d_i {x_i = 0} (coefficients from ``config``,
    whose intersection pattern is irrelevant for coordinate
    hyperplanes) plus c times the divisor of f:

        a = sum(w) - 1 - sum(d_i w_i) - c * wt-mult_w(f)
    """
    ws = tuple(w)
    if not ws:
        raise DomainError("empty weight vector")
    if any((not isinstance(x, numbers.Integral)) or x < 0 for x in ws):
        raise DomainError("monomial valuation weights must be nonnegative integers")
    if all(x == 0 for x in ws):
        raise DomainError("monomial valuation weights cannot be all zero")
    n = len(ws)
    c = rat(c)
    a = sum(ws) - ONE
    if config is not None:
        if config.ncomponents != n:
            raise DomainError("configuration size does not match the weight vector")
        a -= sum(d * wi for d, wi in zip(config.coeffs, ws))
    if c != 0:
        if f is None:
            raise DomainError("nonzero coefficient c needs a polynomial f")
        if f.n != n:
            raise DomainError("polynomial arity does not match the weight vector")
        a -= c * f.weighted_multiplicity(ws)
    return a


@dataclass(frozen=True)
class ResolutionEntry:
    """One divisor on a log resolution: K-coefficient a, pullback
    multiplicity b, and whether the divisor is exceptional."""

    a: Rat
    b: Rat
    exceptional: bool = True

    def __init__(self, a, b, exceptional: bool = True):
        object.__setattr__(self, "a", rat(a))
        object.__setattr__(self, "b", rat(b))
        object.__setattr__(self, "exceptional", bool(exceptional))


@dataclass(frozen=True)
class ResolutionData:
    entries: tuple

    def __init__(self, entries):
        rows = tuple(
            e if isinstance(e, ResolutionEntry) else ResolutionEntry(*e) for e in entries
        )
        if not rows:
            raise DomainError("resolution data needs at least one entry")
        object.__setattr__(self, "entries", rows)


def lct_from_resolution(res: ResolutionData):
    """min over entries of (a_i + 1)/b_i, or POS_INF when all b_i = 0.

    All-zero b means the divisor being measured is 0, whose threshold
    is infinite.
    """
    if any(e.b < 0 for e in res.entries):
        raise DomainError("pullback multiplicities must be nonnegative")
    best = None
    for e in res.entries:
        if e.b > 0:
            v = (e.a + 1) / e.b
            if best is None or v < best:
                best = v
    return POS_INF if best is None else best


def cyclic_cover_transform(config: SncPairConfig, component: int, degree: int) -> SncPairConfig:
    """Coefficient transform along a degree-r cyclic cover branched
    over one component: d goes to r*d - (r - 1). Fixes d = 1; moves
    d < 1 toward -inf and d > 1 upward; preserves lc and klt."""
    if not isinstance(degree, numbers.Integral) or degree < 1:
        raise DomainError("cover degree must be a positive integer")
    if not 0 <= component < config.ncomponents:
        raise DomainError(f"component index {component} out of range")
    r = int(degree)
    d = config.coeffs[component]
    return config.with_coeff(component, r * d - (r - 1))


# -- serialization --------------------------------------------------------


def config_to_doc(config: SncPairConfig) -> dict:
    return {
        "coeffs": [fmt(c) for c in config.coeffs],
        "meets": sorted([i, j] for i, j in config.meets),
    }


def config_from_doc(doc: dict) -> SncPairConfig:
    try:
        coeffs = doc["coeffs"]
        meets = doc.get("meets", [])
    except (TypeError, KeyError) as exc:
        raise DomainError(f"malformed configuration document: {exc}") from None
    return SncPairConfig(coeffs, meets)


def resolution_to_doc(res: ResolutionData) -> dict:
    return {
        "entries": [
            {"a": fmt(e.a), "b": fmt(e.b), "exceptional": e.exceptional} for e in res.entries
        ]
    }


def resolution_from_doc(doc: dict) -> ResolutionData:
    try:
        rows = doc["entries"]
        entries = [
            ResolutionEntry(r["a"], r["b"], r.get("exceptional", True)) for r in rows
        ]
    except (TypeError, KeyError) as exc:
        raise DomainError(f"malformed resolution document: {exc}") from None
    return ResolutionData(entries)
