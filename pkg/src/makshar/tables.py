"""The auxiliary tables behind tablet root extraction.

Two table kinds are supported: "cube" lists n^3 against n, and
"cube-plus-square" lists n^3 + n^2 against n.  Lookups past the prebuilt
range 1..60 fall back to direct inversion via an exact integer cube root,
so memory stays bounded.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotFound, NotPerfectCube

CUBE = "cube"
CUBE_PLUS_SQUARE = "cube-plus-square"

BUILD_CAP = 1_000_000
PREBUILT_RANGE = 60


@dataclass(frozen=True)
class SearchBounds:
    """Inclusive integer search range."""

    lower: int
    upper: int

    def __post_init__(self):
        if self.lower < 1:
            raise ValueError("lower bound must be positive")
        if self.lower > self.upper:
            raise ValueError(f"inverted range {self.lower}..{self.upper}")

    def __str__(self) -> str:
        return f"{self.lower}..{self.upper}"


DEFAULT_BOUNDS = SearchBounds(1, 7200)


@dataclass(frozen=True)
class TableEntry:
    n: int
    value: int


def _polynomial(kind: str, n: int) -> int:
    if kind == CUBE:
        return n**3
    if kind == CUBE_PLUS_SQUARE:
        return n**3 + n * n
    raise ValueError(f"unknown table kind {kind!r}")


def build_table(kind: str, bounds: SearchBounds | None = None,
                cap: int = BUILD_CAP) -> list[TableEntry]:
    """Build the table entries for n over `bounds` (default 1..60)."""
    if bounds is None:
        bounds = SearchBounds(1, PREBUILT_RANGE)
    if bounds.upper > cap:
        raise ValueError(f"table range exceeds cap {cap}")
    return [TableEntry(n, _polynomial(kind, n))
            for n in range(bounds.lower, bounds.upper + 1)]


_PREBUILT: dict[str, dict[int, int]] = {}


def _prebuilt(kind: str) -> dict[int, int]:
    table = _PREBUILT.get(kind)
    if table is None:
        table = {entry.value: entry.n for entry in build_table(kind)}
        _PREBUILT[kind] = table
    return table


def integer_cube_root(n: int) -> int:
    """floor(n^(1/3)) for n >= 0, by exact binary search."""
    if n < 0:
        raise ValueError("negative operand")
    if n < 2:
        return n
    lo, hi = 1, 1 << (n.bit_length() // 3 + 2)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**3 <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def cube_root_exact(v) -> Fraction:
    """The exact rational cube root of v > 0, if one exists.

    Succeeds exactly when numerator and denominator are both perfect cubes;
    raises NotPerfectCube otherwise.
    """
    v = Fraction(v)
    if v <= 0:
        raise ValueError("cube root domain is v > 0")
    num_root = integer_cube_root(v.numerator)
    den_root = integer_cube_root(v.denominator)
    if num_root**3 != v.numerator or den_root**3 != v.denominator:
        raise NotPerfectCube(f"{v} is not the cube of a rational")
    return Fraction(num_root, den_root)


def inverse_lookup(kind: str, value: int) -> int:
    """Find n with table polynomial(n) == value.

    Values inside the prebuilt range 1..60 are answered from the table;
    larger values are inverted directly through the integer cube root.
    """
    if value < 1:
        raise ValueError("lookup value must be >= 1")
    table = _prebuilt(kind)
    n = table.get(value)
    if n is not None:
        return n
    if value <= _polynomial(kind, PREBUILT_RANGE):
        raise NotFound(f"{value} is not a tabulated {kind} value")
    # beyond the table: n^3 <= value < (n+1)^3 pins n for both kinds
    n = integer_cube_root(value)
    if _polynomial(kind, n) == value:
        return n
    raise NotFound(f"{value} is not a {kind} value")


def search_n3_plus_kn(k: int, target: int,
                      bounds: SearchBounds | None = None) -> int:
    """The unique n in bounds with n^3 + k*n == target, if any.

    n^3 + k*n is strictly increasing for k >= 1, so a binary search finds
    the single candidate; NotFound if it misses.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if target < 1:
        raise ValueError("target must be >= 1")
    if bounds is None:
        bounds = DEFAULT_BOUNDS
    lo, hi = bounds.lower, bounds.upper
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**3 + k * mid < target:
            lo = mid + 1
        else:
            hi = mid
    if lo**3 + k * lo == target:
        return lo
    raise NotFound(
        f"no n in {bounds} with n^3 + {k}n = {target}"
    )
