"""Exact rational scalars and the two signed-infinity sentinels.

All arithmetic in this package runs over exact rationals; no code path
touches floating point. The scalar type is chosen once at import:
``gmpy2.mpq`` (GMP-backed, roughly an order of magnitude faster on the
grid sweeps) when available, ``fractions.Fraction`` otherwise. Set
``PAIRLAB_BACKEND=fractions`` or ``PAIRLAB_BACKEND=gmpy2`` to force one.

Both backends print as ``p/q``, hash identically, and register as
``numbers.Rational``, so the rest of the package treats ``Rat`` as an
opaque exact field.
"""

from __future__ import annotations

import numbers
import os

from .errors import DomainError

_choice = os.environ.get("PAIRLAB_BACKEND", "").strip().lower()

if _choice not in ("", "gmpy2", "fractions"):
    raise DomainError(f"unknown PAIRLAB_BACKEND {_choice!r}; use 'gmpy2' or 'fractions'")

if _choice == "fractions":
    from fractions import Fraction as Rat

    BACKEND = "fractions"
elif _choice == "gmpy2":
    from gmpy2 import mpq as Rat  # hard requirement when forced

    BACKEND = "gmpy2"
else:
    try:
        from gmpy2 import mpq as Rat

        BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover - depends on environment
        from fractions import Fraction as Rat

        BACKEND = "fractions"

ZERO = Rat(0)
ONE = Rat(1)


def rat(value, den=None) -> Rat:
    """Coerce to the active rational type.

    Accepts ints, rationals from either backend, and strings of the
    form ``p``, ``-p/q`` or ``+p/q``. Two-argument form builds p/q.
    """
    if den is not None:
        if not isinstance(value, numbers.Integral) or not isinstance(den, numbers.Integral):
            raise DomainError("rat(p, q) takes integers")
        if den == 0:
            raise DomainError("zero denominator")
        return Rat(value, den)
    if isinstance(value, numbers.Rational):
        return Rat(value.numerator, value.denominator)
    if isinstance(value, str):
        return _rat_from_str(value)
    raise DomainError(f"cannot interpret {value!r} as an exact rational")


def _rat_from_str(text: str) -> Rat:
    body = text.strip()
    sign = 1
    if body.startswith(("+", "-")):
        sign = -1 if body[0] == "-" else 1
        body = body[1:]
    num, slash, den = body.partition("/")
    try:
        p = int(num)
        q = int(den) if slash else 1
    except ValueError:
        raise DomainError(f"malformed rational {text!r}") from None
    if p < 0 or q <= 0:
        raise DomainError(f"malformed rational {text!r}")
    return Rat(sign * p, q)


def fmt(value) -> str:
    """Canonical ``p/q`` (or bare integer) string for any Rational."""
    n, d = value.numerator, value.denominator
    return str(n) if d == 1 else f"{n}/{d}"


def rat_floor(value) -> int:
    # int(mpq) truncates toward zero; floor division of the parts does not.
    return int(value.numerator // value.denominator)


def rat_ceil(value) -> int:
    return -int((-value.numerator) // value.denominator)


class _Infinity:
    """Signed infinity, comparable with every exact rational.

    Supports ordering and equality only; arithmetic is deliberately
    unsupported so accidental ``-inf + 1`` bugs surface immediately.
    """

    __slots__ = ("_sign",)

    def __init__(self, sign: int):
        self._sign = sign

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, _Infinity) or isinstance(other, numbers.Rational):
            return self._sign < 0
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, _Infinity) or isinstance(other, numbers.Rational):
            return self._sign > 0
        return NotImplemented

    def __le__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return NotImplemented
        return eq or self.__lt__(other)

    def __ge__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return NotImplemented
        return eq or self.__gt__(other)

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash(("pairlab.infinity", self._sign))

    def __repr__(self):
        return "+inf" if self._sign > 0 else "-inf"


NEG_INF = _Infinity(-1)
POS_INF = _Infinity(+1)

# ExtendedRational values are either a Rat or one of the two sentinels.
ExtendedRational = object


def is_finite(value) -> bool:
    return not isinstance(value, _Infinity)


def fmt_extended(value) -> str:
    if value is NEG_INF:
        return "-inf"
    if value is POS_INF:
        return "+inf"
    return fmt(value)


def parse_extended(text: str):
    body = text.strip()
    if body in ("-inf", "-oo"):
        return NEG_INF
    if body in ("+inf", "inf", "+oo", "oo"):
        return POS_INF
    return rat(body)
