"""Effective base-point-freeness constants and their certificates.

In dimension n, adjoint multiples are globally generated from
m > C(n+1, 2) and separate points from m >= C(n+2, 2). Both rest on two
scalar inequalities for the cutting constants c(k):

    sum_{k=1..n} k / c(k) <= 1
    sum_{k=1..n} 2^(1/k) * k / c(k) <= 1

The second is certified without evaluating any k-th root: 2^(1/k) is
bounded by 1 + 1/k (since (1+1/k)^k >= 2), and the majorant sum is
computed exactly.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass

from .errors import DomainError
from .rational import ONE, Rat, ZERO, rat


@dataclass(frozen=True)
class MajorantCheck:
    """Bool-like result carrying the exact majorant sum."""

    holds: bool
    majorant_sum: Rat

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class BoundReport:
    n: int
    m_free: int
    m_separate: int
    certified_free: bool
    certified_separate: bool


def _coerce_positive(cs):
    out = tuple(rat(c) for c in cs)
    if not out:
        raise DomainError("need at least one constant")
    if any(c <= 0 for c in out):
        raise DomainError("constants must be positive")
    return out


def verify_condition_58(c) -> bool:
    """Exact check of sum k/c(k) <= 1 with k = 1..n."""
    cs = _coerce_positive(c)
    total = sum((Rat(k, 1) / ck for k, ck in enumerate(cs, start=1)), ZERO)
    return total <= 1


def verify_condition_59(c) -> MajorantCheck:
    """Certified check of sum 2^(1/k) k/c(k) <= 1 via the rational
    majorant 2^(1/k) <= 1 + 1/k; reports the exact majorant sum."""
    cs = _coerce_positive(c)
    total = sum(((1 + Rat(1, k)) * k / ck for k, ck in enumerate(cs, start=1)), ZERO)
    return MajorantCheck(holds=total <= 1, majorant_sum=total)


def fujita_type_bounds(n: int) -> BoundReport:
    """Smallest multiples from the binomial formulas, with both scalar
    conditions certified for the canonical constant choices."""
    if not isinstance(n, numbers.Integral) or n < 1:
        raise DomainError("dimension must be a positive integer")
    n = int(n)
    m_free = math.comb(n + 1, 2) + 1
    m_separate = math.comb(n + 2, 2)
    free_constants = [m_free - 1] * n  # c(k) = C(n+1, 2)
    sep_constants = [m_separate] * n  # c(k) = C(n+2, 2)
    return BoundReport(
        n=n,
        m_free=m_free,
        m_separate=m_separate,
        certified_free=verify_condition_58(free_constants),
        certified_separate=verify_condition_59(sep_constants).holds,
    )
