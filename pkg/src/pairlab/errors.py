"""Exception hierarchy.

Everything user-facing derives from PairlabError so the CLI can map
"your input is bad" to one exit code and keep genuine bugs on another.
"""

from __future__ import annotations


class PairlabError(Exception):
    """Base class for all documented error conditions."""


class DomainError(PairlabError):
    """An argument is outside the documented domain of an operation."""


class PolyParseError(PairlabError):
    """Polynomial text did not match the grammar.

    Carries the 0-based character position of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ZeroPolynomialError(DomainError):
    """The zero polynomial was passed where a nonzero one is required."""


class UnitAtOriginError(DomainError):
    """The polynomial does not vanish at the origin.

    Local invariants at 0 are undefined (or trivially infinite) for units.
    """


class ExactnessError(PairlabError):
    """An exactness check failed: a division left a remainder or a
    computed expansion violated a structural invariant of its domain."""


class InfiniteEnumerationError(DomainError):
    """The requested enumeration has infinitely many results.

    Raised instead of looping forever when a cutoff sits at or below an
    accumulation point of the set being enumerated.
    """


class ChainConditionError(DomainError):
    """The strict-increase condition for a threshold chain fails.

    Both sides of the violated inequality are kept for diagnostics.
    """

    def __init__(self, message: str, lhs=None, rhs=None):
        super().__init__(message)
        self.lhs = lhs
        self.rhs = rhs


class LPError(PairlabError):
    """Base class for linear-programming failures."""


class LPInfeasibleError(LPError):
    """The feasible region is empty."""


class LPUnboundedError(LPError):
    """The objective is unbounded below on the feasible region."""
