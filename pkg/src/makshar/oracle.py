"""Independent verification of solver answers.

The solvers reconstruct what a scribe did; this module checks the results a
completely different way: rational-root enumeration for cubics (complete by
the rational root theorem), exact square roots, and a reduction of the well
problems to a two-variable quadratic system.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import IrrationalSolution, NonPositiveProduct


@dataclass(frozen=True)
class CubicCoefficients:
    """c3*x^3 + c2*x^2 + c1*x + c0 = 0 with c3 != 0."""

    c3: Fraction
    c2: Fraction
    c1: Fraction
    c0: Fraction

    def __post_init__(self):
        for name in ("c3", "c2", "c1", "c0"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.c3 == 0:
            raise ValueError("leading coefficient must be nonzero")

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return ((self.c3 * x + self.c2) * x + self.c1) * x + self.c0


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rational_roots_cubic(c: CubicCoefficients) -> set[Fraction]:
    """All rational roots of the cubic, exactly.

    Clears denominators to an integer polynomial and tries every candidate
    p/q with p dividing the constant term and q the leading coefficient
    (full divisor sets, no shortcuts), so the result is complete.
    """
    scale = 1
    for coeff in (c.c3, c.c2, c.c1, c.c0):
        scale = scale * coeff.denominator // gcd(scale, coeff.denominator)
    ints = [int(coeff * scale) for coeff in (c.c3, c.c2, c.c1, c.c0)]
    common = 0
    for value in ints:
        common = gcd(common, value)
    ints = [value // common for value in ints]

    roots: set[Fraction] = set()
    # factor out x while the constant term vanishes
    tail = ints[:]
    while tail[-1] == 0:
        roots.add(Fraction(0))
        tail.pop()
    lead, const = tail[0], tail[-1]
    if len(tail) > 1:
        for p in _divisors(const):
            for q in _divisors(lead):
                for candidate in (Fraction(p, q), Fraction(-p, q)):
                    if c.evaluate(candidate) == 0:
                        roots.add(candidate)
    return roots


def exact_sqrt(v) -> Fraction | None:
    """The exact non-negative square root of v >= 0, or None.

    Returns r with r*r == v when numerator and denominator are both perfect
    squares; None when the root is irrational.
    """
    v = Fraction(v)
    if v < 0:
        raise ValueError("square root of a negative number")
    num_root = isqrt(v.numerator)
    den_root = isqrt(v.denominator)
    if num_root * num_root != v.numerator or den_root * den_root != v.denominator:
        return None
    return Fraction(num_root, den_root)


def quadratic_reduction(problem) -> "Solution":
    """Solve a well problem via its equivalent quadratic system.

    The data xyz = V and xy + xyz = W give the pair product xy = W - V
    directly; with the sum or difference constraint this is an ordinary
    two-variable quadratic system, solved exactly through the discriminant.
    Raises IrrationalSolution when the discriminant is not the square of a
    rational (including negative discriminants, where no real solution
    exists), and NonPositiveProduct when W <= V.
    """
    from .solvers import Solution, TraceStep  # local import, no cycle at module load

    product = problem.area_plus_volume - problem.volume
    if product <= 0:
        raise NonPositiveProduct(
            f"area-plus-volume {problem.area_plus_volume} does not exceed "
            f"volume {problem.volume}"
        )
    vertical = problem.metrology.vertical

    if problem.length_diff_width is not None:
        d = problem.length_diff_width
        # y^2 + d*y - product = 0; the root pair has negative product, so
        # exactly one positive y exists
        disc = d * d + 4 * product
        root = exact_sqrt(disc)
        if root is None:
            raise IrrationalSolution(
                f"discriminant {disc} is not a rational square", disc
            )
        y = (-d + root) / 2
        x = y + d
    else:
        s = problem.length_plus_width
        disc = s * s - 4 * product
        if disc < 0:
            raise IrrationalSolution(
                f"discriminant {disc} is negative", disc
            )
        root = exact_sqrt(disc)
        if root is None:
            raise IrrationalSolution(
                f"discriminant {disc} is not a rational square", disc
            )
        x = (s + root) / 2
        y = (s - root) / 2
    z = vertical * x
    trace = (
        TraceStep("pair_product", product, "area alone: xy = W - V"),
        TraceStep("discriminant", disc, "discriminant of the quadratic"),
        TraceStep("square_root", root, "its exact square root"),
    )
    return Solution(values={"x": x, "y": y, "z": z}, trace=trace)
