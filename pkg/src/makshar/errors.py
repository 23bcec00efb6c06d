"""Exception types shared across the package.

Everything domain-level derives from MaksharError so callers (and the CLI)
can distinguish "the mathematics said no" (exit 1) from malformed input
(ParseError, exit 2).
"""

from __future__ import annotations


class MaksharError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(MaksharError, ValueError):
    """Malformed input text: number literal, script, or problem file."""


class NotFiniteExpansion(MaksharError):
    """The value has no finite base-60 expansion (denominator not 5-smooth)."""


class NotPerfectCube(MaksharError):
    """The value is not the cube of a rational number."""


class NotFound(MaksharError):
    """A table lookup or bounded search produced no match."""


class MultipleSolutions(MaksharError):
    """A pair search found more than one admissible solution.

    `candidates` carries every (x, y) pair found.
    """

    def __init__(self, message: str, candidates):
        super().__init__(message)
        self.candidates = tuple(candidates)


class ConventionViolation(MaksharError):
    """Solutions exist, but none satisfies the x >= y reporting convention.

    `candidates` carries the raw (x, y) pairs so callers can still inspect
    them.
    """

    def __init__(self, message: str, candidates):
        super().__init__(message)
        self.candidates = tuple(candidates)


class NoScaling(MaksharError):
    """No admissible integer scale m with m^2/c and m^3/c integral."""


class NoRationalSolution(MaksharError):
    """The procedure's integer search failed; no solution was found.

    `repairs` lists (delta, repaired_rhs, x) triples for small perturbations
    of the right-hand side that would have made the search succeed, which is
    how a copying error in the source data shows up.
    """

    def __init__(self, message: str, repairs=()):
        super().__init__(message)
        self.repairs = tuple(repairs)


class StructureMismatch(MaksharError):
    """Equation coefficients do not have the required structural relation."""


class NonIntegerTarget(MaksharError):
    """A scaled search target that must be a positive integer is not."""


class InconsistentData(MaksharError):
    """Independently derived values disagree; the problem data conflict."""


class NoScaleFound(MaksharError):
    """No divisor q of the quadratic coefficient yields an integer target."""


class PythagorasCheckFailed(MaksharError):
    """Recovered triple fails x^2 + y^2 = z^2 exactly."""


class ExpectationMismatch(MaksharError):
    """A script step produced a value different from its stated expectation."""

    def __init__(self, label: str, expected, actual):
        super().__init__(
            f"step {label!r}: expected {expected}, got {actual}"
        )
        self.label = label
        self.expected = expected
        self.actual = actual


class IrrationalSolution(MaksharError):
    """The reduced quadratic has no rational solution.

    `discriminant` is the exact discriminant that failed to be the square
    of a rational (it may also be negative, in which case there is no real
    solution either).
    """

    def __init__(self, message: str, discriminant):
        super().__init__(message)
        self.discriminant = discriminant


class NonPositiveProduct(MaksharError):
    """Derived pair product (area) is not positive; no well fits the data."""


class IgiIrregularWarning(UserWarning):
    """An igi (reciprocal) step was applied to a non-regular number."""
