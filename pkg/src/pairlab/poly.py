"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial in n variables is a finite map from exponent vectors
(length-n tuples of nonnegative ints) to nonzero rationals. The text
grammar accepted by :func:`parse_poly` (and emitted by ``str``):

    poly     = [ sign ] term { sign term }
    sign     = "+" | "-"
    term     = number [ "*" factors ] | factors
    factors  = factor { "*" factor }
    factor   = variable [ "^" integer ]
    number   = integer [ "/" integer ]
    variable = "x" [ integer ] | "y" | "z"

Whitespace may appear between any two tokens. ``x``, ``y``, ``z`` are
aliases for ``x1``, ``x2``, ``x3``; indexed names work for any arity.
Products need an explicit ``*``. The canonical printer orders terms by
total degree, then lexicographically (earlier variables first).
"""

from __future__ import annotations

import numbers
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, PolyParseError, ZeroPolynomialError
from .rational import ONE, Rat, ZERO, fmt, rat

ExponentVector = tuple  # tuple[int, ...]
WeightVector = Sequence  # Sequence[Rat]


def _grlex_key(exps):
    return (sum(exps), tuple(-e for e in exps))


def validate_weights(w, n: int, positive: bool = False):
    """Coerce a weight vector: length n, nonnegative, not all zero."""
    ws = tuple(rat(x) for x in w)
    if len(ws) != n:
        raise DomainError(f"expected {n} weights, got {len(ws)}")
    if any(x < 0 for x in ws):
        raise DomainError("weights must be nonnegative")
    if positive:
        if any(x <= 0 for x in ws):
            raise DomainError("weights must be strictly positive")
    elif all(x == 0 for x in ws):
        raise DomainError("weight vector is identically zero")
    return ws


class SparsePoly:
    """Immutable sparse polynomial over the exact rational scalars."""

    __slots__ = ("_n", "_terms")

    def __init__(self, n: int, terms: Mapping | Iterable = ()):
        if not isinstance(n, numbers.Integral) or n < 1:
            raise DomainError("number of variables must be a positive integer")
        n = int(n)
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != n:
                raise DomainError(f"exponent vector {exps} has wrong length for n={n}")
            if any((not isinstance(e, numbers.Integral)) or e < 0 for e in exps):
                raise DomainError(f"exponents must be nonnegative integers: {exps}")
            exps = tuple(int(e) for e in exps)
            c = acc.get(exps, ZERO) + rat(coeff)
            if c == 0:
                acc.pop(exps, None)
            else:
                acc[exps] = c
        self._n = n
        self._terms = acc

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "SparsePoly":
        return cls(n)

    @classmethod
    def constant(cls, n: int, value) -> "SparsePoly":
        return cls(n, {(0,) * n: rat(value)})

    @classmethod
    def variable(cls, n: int, index: int) -> "SparsePoly":
        """The variable x_index (1-based)."""
        if not 1 <= index <= n:
            raise DomainError(f"variable index {index} out of range for n={n}")
        exps = tuple(1 if i == index - 1 else 0 for i in range(n))
        return cls(n, {exps: ONE})

    @classmethod
    def monomial(cls, n: int, exps, coeff=ONE) -> "SparsePoly":
        return cls(n, {tuple(exps): rat(coeff)})

    # -- structure ------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> dict:
        return dict(self._terms)

    def support(self):
        return frozenset(self._terms)

    def sorted_support(self) -> tuple:
        """Support in the canonical (graded, then lex) print order."""
        return tuple(sorted(self._terms, key=_grlex_key))

    def coefficient(self, exps) -> Rat:
        return self._terms.get(tuple(exps), ZERO)

    @property
    def constant_term(self) -> Rat:
        return self._terms.get((0,) * self._n, ZERO)

    def __len__(self):
        return len(self._terms)

    # -- invariants -----------------------------------------------------

    def degree(self) -> int:
        if not self._terms:
            raise ZeroPolynomialError("degree of the zero polynomial")
        return max(sum(e) for e in self._terms)

    def multiplicity(self) -> int:
        """Order of vanishing at the origin (min total degree)."""
        if not self._terms:
            raise ZeroPolynomialError("multiplicity of the zero polynomial")
        return min(sum(e) for e in self._terms)

    def weighted_multiplicity(self, w) -> Rat:
        """min over the support of <w, exponent>, for nonnegative w."""
        ws = validate_weights(w, self._n)
        if not self._terms:
            raise ZeroPolynomialError("weighted multiplicity of the zero polynomial")
        return min(sum(wi * e for wi, e in zip(ws, exps)) for exps in self._terms)

    def truncate(self, d: int) -> "SparsePoly":
        """Drop every term of total degree above d."""
        if not isinstance(d, numbers.Integral) or d < 0:
            raise DomainError("truncation degree must be a nonnegative integer")
        kept = {e: c for e, c in self._terms.items() if sum(e) <= d}
        return SparsePoly(self._n, kept)

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            if other._n != self._n:
                raise DomainError("mixed variable counts")
            return other
        if isinstance(other, numbers.Rational):
            return SparsePoly.constant(self._n, other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in rhs._terms.items():
            s = acc.get(e, ZERO) + c
            if s == 0:
                acc.pop(e, None)
            else:
                acc[e] = s
        out = SparsePoly.__new__(SparsePoly)
        out._n = self._n
        out._terms = acc
        return out

    __radd__ = __add__

    def __neg__(self):
        out = SparsePoly.__new__(SparsePoly)
        out._n = self._n
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in rhs._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = acc.get(e, ZERO) + c1 * c2
                if s == 0:
                    acc.pop(e, None)
                else:
                    acc[e] = s
        out = SparsePoly.__new__(SparsePoly)
        out._n = self._n
        out._terms = acc
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, numbers.Integral) or k < 0:
            raise DomainError("polynomial powers take nonnegative integer exponents")
        result = SparsePoly.constant(self._n, 1)
        for _ in range(int(k)):
            result = result * self
        return result

    # -- equality and text ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self):
        return hash((self._n, frozenset(self._terms.items())))

    def _var_name(self, i: int) -> str:
        if self._n <= 3:
            return "xyz"[i]
        return f"x{i + 1}"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps in self.sorted_support():
            coeff = self._terms[exps]
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(self._var_name(i))
                elif e > 1:
                    factors.append(f"{self._var_name(i)}^{e}")
            mag = coeff if coeff > 0 else -coeff
            if not factors:
                body = fmt(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = fmt(mag) + "*" + "*".join(factors)
            pieces.append(("-" if coeff < 0 else "+", body))
        sign0, body0 = pieces[0]
        text = ("-" if sign0 == "-" else "") + body0
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"SparsePoly({self._n}, {self})"


# -- parsing -------------------------------------------------------------

_ALIASES = {"y": 2, "z": 3}


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self._skip_ws()
        if self.pos >= len(self.text):
            return ("end", None, self.pos)
        ch = self.text[self.pos]
        start = self.pos
        if ch in "+-*^/":
            return ({"+": "sign", "-": "sign", "*": "star", "^": "caret", "/": "slash"}[ch], ch, start)
        if ch.isdigit():
            j = start
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            return ("int", self.text[start:j], start)
        if ch.isalpha():
            j = start + 1
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            return ("var", self.text[start:j], start)
        raise PolyParseError(f"unexpected character {ch!r}", start)

    def take(self):
        kind, value, start = self.peek()
        if kind == "end":
            self.pos = len(self.text)
        else:
            self.pos = start + len(value)
        return kind, value, start


def _var_index(name: str, position: int) -> int:
    if name in _ALIASES:
        return _ALIASES[name]
    if name == "x":
        return 1
    if name.startswith("x") and name[1:].isdigit():
        idx = int(name[1:])
        if idx >= 1:
            return idx
    raise PolyParseError(f"unknown variable {name!r}", position)


def _parse_factors(sc: _Scanner, n, exps: dict):
    while True:
        kind, value, start = sc.take()
        if kind != "var":
            raise PolyParseError("expected a variable", start)
        idx = _var_index(value, start)
        if n is not None and idx > n:
            raise PolyParseError(f"variable index {idx} out of range for n={n}", start)
        exp = 1
        if sc.peek()[0] == "caret":
            sc.take()
            kind, value, start = sc.take()
            if kind != "int":
                raise PolyParseError("expected an integer exponent", start)
            exp = int(value)
        exps[idx] = exps.get(idx, 0) + exp
        if sc.peek()[0] != "star":
            return
        sc.take()


def _parse_term(sc: _Scanner, n):
    """One signed-magnitude term: (coefficient, {index: exponent})."""
    kind, value, start = sc.peek()
    coeff = ONE
    exps: dict = {}
    if kind == "int":
        sc.take()
        p = int(value)
        q = 1
        if sc.peek()[0] == "slash":
            sc.take()
            kind, value, start = sc.take()
            if kind != "int":
                raise PolyParseError("expected an integer denominator", start)
            q = int(value)
            if q == 0:
                raise PolyParseError("zero denominator", start)
        coeff = Rat(p, q)
        nxt = sc.peek()
        if nxt[0] == "star":
            sc.take()
            _parse_factors(sc, n, exps)
        elif nxt[0] in ("var", "int"):
            raise PolyParseError("expected '*', '+', '-' or end of input", nxt[2])
    elif kind == "var":
        _parse_factors(sc, n, exps)
    else:
        raise PolyParseError("expected a term", start)
    return coeff, exps


def parse_poly(text: str, n: int | None = None) -> SparsePoly:
    """Parse polynomial text; infer the variable count when n is None.

    The zero polynomial (e.g. ``"0"`` or ``"x - x"``) is accepted; check
    ``.is_zero`` before feeding the result to operations that reject it.
    """
    if n is not None and (not isinstance(n, numbers.Integral) or n < 1):
        raise DomainError("number of variables must be a positive integer")
    sc = _Scanner(text)
    raw = []
    sign = ONE
    kind, value, start = sc.peek()
    if kind == "end":
        raise PolyParseError("empty input", start)
    if kind == "sign":
        sc.take()
        sign = -ONE if value == "-" else ONE
    while True:
        coeff, exps = _parse_term(sc, n)
        raw.append((sign * coeff, exps))
        kind, value, start = sc.take()
        if kind == "end":
            break
        if kind != "sign":
            raise PolyParseError("expected '+', '-' or end of input", start)
        sign = -ONE if value == "-" else ONE
    if n is None:
        n = max((max(e) for _, e in raw if e), default=1)
    terms = []
    for coeff, exps in raw:
        vec = tuple(exps.get(i, 0) for i in range(1, n + 1))
        terms.append((vec, coeff))
    return SparsePoly(n, terms)


# -- module-level operation aliases --------------------------------------


def weighted_multiplicity(f: SparsePoly, w) -> Rat:
    return f.weighted_multiplicity(w)


def multiplicity(f: SparsePoly) -> int:
    return f.multiplicity()


def truncate(f: SparsePoly, d: int) -> SparsePoly:
    return f.truncate(d)
