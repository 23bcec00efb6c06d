"""Solvers for the tablet cubic-equation problem families.

Each solver returns a Solution: the exact answers plus an ordered trace of
the named intermediate values a tablet procedure announces with "you see".
Traces reproduce the tablet numbers digit-exact, so they can be compared
against transliterations directly.

Problem families covered:

* pure cubic (IM 54478, BM 85200 no. 22): conversion * x^3 = V
* depressed cubic (YBC 4669 B2): c*x^3 + x = b, scaled into n^3 + k*n form
* cube-plus-square (BM 85200 no. 5/23): c3*x^3 + c2*x^2 = rhs with
  c3 = c2 * conversion, scaled into z^3 + z^2 form
* well with length-width difference (BM 85200 no. 7)
* well with length-width sum (BM 85200 no. 6)
* leg/hypotenuse system in the style of Wang Xiaotong's Jigu Suanjing
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .errors import (
    InconsistentData,
    NonIntegerTarget,
    NoRationalSolution,
    NoScaleFound,
    NoScaling,
    NotFound,
    NotPerfectCube,
    PythagorasCheckFailed,
    StructureMismatch,
)
from .factorize import factor_n2_times_n_plus_q, factor_pair_sum_constrained
from .sexagesimal import display_number as _d
from .sexagesimal import is_regular
from .tables import (
    CUBE,
    CUBE_PLUS_SQUARE,
    DEFAULT_BOUNDS,
    SearchBounds,
    cube_root_exact,
    inverse_lookup,
    search_n3_plus_kn,
)

PAIR_GRANULARITY = 60  # sixtieths: the resolution of the X + Y = 1 pair scan


@dataclass(frozen=True)
class Metrology:
    """Unit conversion constants for excavation problems.

    Horizontal lengths are measured in nindan and kept as-is (constant 1);
    depths are in kush at 12 per nindan; volumes are in sar.  Tablets call
    the pair (1, 12) "the conversion constants".
    """

    horizontal: Fraction = Fraction(1)
    vertical: Fraction = Fraction(12)
    length_unit: str = "nindan"
    depth_unit: str = "kush"
    volume_unit: str = "sar"

    def __post_init__(self):
        object.__setattr__(self, "horizontal", Fraction(self.horizontal))
        object.__setattr__(self, "vertical", Fraction(self.vertical))
        if self.horizontal <= 0 or self.vertical <= 0:
            raise ValueError("conversion constants must be positive")


@dataclass(frozen=True)
class WellProblem:
    """Data of a square-ish well: depth equals 12x, volume and area known.

    Exactly one of length_diff_width / length_plus_width must be given.
    Equations: z = vertical*x, xyz = volume, xy + xyz = area_plus_volume,
    and x - y or x + y equal to the side constraint.
    """

    volume: Fraction
    area_plus_volume: Fraction
    length_diff_width: Fraction | None = None
    length_plus_width: Fraction | None = None
    metrology: Metrology = field(default_factory=Metrology)

    def __post_init__(self):
        object.__setattr__(self, "volume", Fraction(self.volume))
        object.__setattr__(self, "area_plus_volume", Fraction(self.area_plus_volume))
        if (self.length_diff_width is None) == (self.length_plus_width is None):
            raise ValueError("give exactly one of difference or sum constraint")
        for name in ("length_diff_width", "length_plus_width"):
            value = getattr(self, name)
            if value is not None:
                object.__setattr__(self, name, Fraction(value))
        constraint = (self.length_diff_width if self.length_diff_width is not None
                      else self.length_plus_width)
        if self.volume <= 0 or self.area_plus_volume <= 0 or constraint <= 0:
            raise ValueError("well data must be positive")


@dataclass(frozen=True)
class WangProblem:
    """Right-triangle data: product of the legs and hypotenuse excess.

    product = x*y; excess = z - x, the amount the hypotenuse exceeds the
    longer leg.
    """

    product: Fraction
    excess: Fraction

    def __post_init__(self):
        object.__setattr__(self, "product", Fraction(self.product))
        object.__setattr__(self, "excess", Fraction(self.excess))
        if self.product <= 0 or self.excess <= 0:
            raise ValueError("product and excess must be positive")


@dataclass(frozen=True)
class TraceStep:
    """One announced intermediate value, with its tablet-style sentence."""

    label: str
    value: Fraction
    description: str


@dataclass(frozen=True)
class Solution:
    """Answer values plus the ordered procedure trace.

    `roots` holds the ib-si values the procedure extracts (the scaled
    solutions a tablet announces as "the roots") where the family has them.
    """

    values: dict[str, Fraction]
    trace: tuple[TraceStep, ...]
    roots: tuple[Fraction, ...] = ()
    notes: tuple[str, ...] = ()

    def trace_values(self) -> tuple[Fraction, ...]:
        return tuple(step.value for step in self.trace)

    def __post_init__(self):
        labels = [step.label for step in self.trace]
        if len(labels) != len(set(labels)):
            raise ValueError("trace labels must be unique")


@dataclass(frozen=True)
class ScaledCubicRoot:
    """Result of the x^3 + a*x^2 = b scaling trick: x = scale * index."""

    x: Fraction
    scale: Fraction
    index: int
    q: int
    target: int


def _trace(label: str, value, description: str) -> TraceStep:
    return TraceStep(label, Fraction(value), description)


def solve_pure_cubic(volume, metrology: Metrology | None = None) -> Solution:
    """Solve conversion * x^3 = V for the side of a cubic excavation.

    The procedure of IM 54478: take the reciprocal of the conversion
    constant, multiply by the volume, extract the cube root.  The cube-root
    table path (scaled to an integer entry) is run as a cross-check against
    the direct exact root whenever the scaled value is available.
    """
    m = metrology or Metrology()
    volume = Fraction(volume)
    if volume <= 0:
        raise ValueError("volume must be positive")
    recip = 1 / m.vertical
    product = volume * recip
    x = cube_root_exact(product)
    z = x * m.vertical

    # table cross-check: shift the target by 60^(3k) to an integer entry
    if is_regular(product):
        shifted = product
        shift = 0
        while shifted.denominator != 1:
            shifted *= 60**3
            shift += 1
        n = inverse_lookup(CUBE, int(shifted))
        if Fraction(n, 60**shift) != x:
            raise InconsistentData(
                f"cube table gives {Fraction(n, 60 ** shift)}, direct root {x}"
            )

    trace = (
        _trace("reciprocal", recip,
               f"make the reciprocal of {_d(m.vertical)}, and you see {_d(recip)}"),
        _trace("product", product,
               f"multiply {_d(recip)} by {_d(volume)}, and you see {_d(product)}"),
        _trace("cube_root", x,
               f"what is the cube root of {_d(product)}? {_d(x)} is the cube root"),
    )
    return Solution(values={"x": x, "z": z}, trace=trace, roots=(x,))


def _scaling_for(c: Fraction, cap: int | None = None) -> tuple[int, int, int]:
    """Smallest m with m^2/c and m^3/c positive integers; (m, k, t)."""
    limit = cap if cap is not None else max(1, ceil(60 * c))
    for m in range(1, limit + 1):
        k = Fraction(m * m) / c
        t = Fraction(m**3) / c
        if k.denominator == 1 and t.denominator == 1 and k >= 1 and t >= 1:
            return m, int(k), int(t)
    raise NoScaling(f"no integer scale m <= {limit} fits coefficient {c}")


def solve_depressed_cubic(c, rhs, bounds: SearchBounds | None = None) -> Solution:
    """Solve c*x^3 + x = b by scaling to n^3 + k*n = target.

    With u = m*x (m the smallest scale making m^2/c and m^3/c integers) the
    equation becomes u^3 + (m^2/c)u = (m^3/c)b, solved by successive search.
    YBC 4669 B2 is the textbook case: c = 12, m = 6 gives the multiplier 18
    and u^3 + 3u.  When the search fails, nearby right-hand sides are tried
    (|delta| <= 4) and any that succeed are reported as repairs, which is
    how the copying error 33,20 for 33,22 surfaces.
    """
    c = Fraction(c)
    rhs = Fraction(rhs)
    if c <= 0 or rhs <= 0:
        raise ValueError("coefficients must be positive")
    if bounds is None:
        bounds = DEFAULT_BOUNDS
    m, k, t = _scaling_for(c)

    def attempt(b):
        scaled = t * b
        if scaled.denominator != 1 or scaled < 1:
            raise NotFound(f"scaled right-hand side {scaled} is not a positive integer")
        return search_n3_plus_kn(k, int(scaled), bounds)

    try:
        u = attempt(rhs)
    except NotFound:
        repairs = []
        for step in range(1, 5):
            for delta in (step, -step):
                repaired = rhs + delta
                if repaired <= 0:
                    continue
                try:
                    u2 = attempt(repaired)
                except NotFound:
                    continue
                repairs.append((delta, repaired, Fraction(u2, m)))
        raise NoRationalSolution(
            f"{_d(c)} x^3 + x = {_d(rhs)} has no solution with {m}x an "
            f"integer in {bounds}",
            repairs,
        ) from None

    x = Fraction(u, m)
    scaled = t * rhs
    trace = (
        _trace("multiplier", t,
               f"multiply both sides by {_d(t)}: ({m}x)^3 + {k}({m}x)"),
        _trace("target", scaled,
               f"the right-hand side becomes {_d(scaled)}"),
        _trace("root", u,
               f"searching n^3 + {k}n reaches {_d(scaled)} at n = {u}"),
    )
    return Solution(values={"x": x}, trace=trace, roots=(Fraction(u),))


def solve_no5_style(c3, c2, rhs, metrology: Metrology | None = None,
                    bounds: SearchBounds | None = None) -> Solution:
    """Solve c3*x^3 + c2*x^2 = rhs with c3 = c2 * conversion.

    Multiplying by conversion^2/c2 turns the equation into z^3 + z^2 =
    target with z = conversion * x; the root is read off the factorization
    target = z^2 (z + 1), cross-checked against the cube-plus-square table.
    This is BM 85200 no. 5 (and no. 23): 8x^3 + 0;40x^2 = 1;10 becomes
    z^3 + z^2 = 4,12 = 6^2 * 7.
    """
    m = metrology or Metrology()
    c3 = Fraction(c3)
    c2 = Fraction(c2)
    rhs = Fraction(rhs)
    if c2 <= 0 or rhs <= 0:
        raise ValueError("coefficients must be positive")
    if c3 != c2 * m.vertical:
        raise StructureMismatch(
            f"cubic coefficient {_d(c3)} is not {_d(c2)} times the "
            f"conversion constant {_d(m.vertical)}"
        )
    multiplier = m.vertical**2 / c2
    target = rhs * multiplier
    if target.denominator != 1 or target < 1:
        raise NonIntegerTarget(f"scaled target {target} is not a positive integer")
    target = int(target)
    z = factor_n2_times_n_plus_q(target, 1, bounds)
    if inverse_lookup(CUBE_PLUS_SQUARE, target) != z:
        raise InconsistentData(
            f"table root and factorization disagree for {target}"
        )
    x = Fraction(z) / m.vertical
    trace = (
        _trace("multiplier", multiplier,
               f"multiply both sides by {_d(multiplier)}: z^3 + z^2 with "
               f"z = {_d(m.vertical)}x"),
        _trace("target", target,
               f"the right-hand side becomes {_d(target)}"),
        _trace("root", z,
               f"{_d(target)} = {z}^2 ({z} + 1), so z = {z}"),
    )
    return Solution(values={"x": x, "z": Fraction(z)}, trace=trace,
                    roots=(Fraction(z),))


def _well_steps(constraint, label_word: str, problem: WellProblem):
    """The six announced values shared by the two well procedures.

    constraint is the difference (no. 7) or the sum (no. 6); the tablet
    multiplies it by both conversion constants, squares it, combines, takes
    the reciprocal and multiplies by the area-plus-volume figure.
    """
    m = problem.metrology
    s1 = constraint * m.horizontal
    s2 = constraint * m.vertical
    s3 = constraint * constraint
    s4 = s3 * s2
    s5 = 1 / s4
    s6 = s5 * problem.area_plus_volume
    steps = (
        _trace("constraint_horizontal", s1,
               f"multiply {_d(constraint)}, the {label_word}, by "
               f"{_d(m.horizontal)}, and you see {_d(s1)}"),
        _trace("constraint_vertical", s2,
               f"multiply {_d(constraint)} by {_d(m.vertical)}, and you see {_d(s2)}"),
        _trace("constraint_square", s3,
               f"square {_d(constraint)}, and you see {_d(s3)}"),
        _trace("scaled_cube", s4,
               f"multiply {_d(s3)} by {_d(s2)}, and you see {_d(s4)}"),
        _trace("reciprocal", s5,
               f"make the reciprocal of {_d(s4)}, and you see {_d(s5)}"),
        _trace("rhs_product", s6,
               f"multiply {_d(s5)} by {_d(problem.area_plus_volume)}, "
               f"and you see {_d(s6)}"),
    )
    return steps, s5, s6


def solve_well_difference(problem: WellProblem,
                          bounds: SearchBounds | None = None) -> Solution:
    """BM 85200 no. 7: well with x - y given.

    Scaling by the difference d turns the system into X - Y = 1 and
    X^2 Y = V/(12 d^3); the factorization target = X^2 (X - 1) yields X,
    and the third root (z+1)/(12d) from the area equation cross-checks the
    depth.
    """
    if problem.length_diff_width is None:
        raise ValueError("problem has no difference constraint")
    d = problem.length_diff_width
    m = problem.metrology
    steps, inv_scale, rhs_product = _well_steps(d, "excess", problem)

    target = problem.volume * inv_scale  # V / (12 d^3)
    if target.denominator != 1 or target < 1:
        raise NotFound(
            f"scaled volume {target} is not a positive integer; the "
            f"factorization step cannot run"
        )
    x_scaled = Fraction(factor_n2_times_n_plus_q(int(target), -1, bounds))
    y_scaled = x_scaled - 1
    third = rhs_product / (x_scaled * y_scaled)  # (z + 1) / (12 d)

    x = d * x_scaled
    y = d * y_scaled
    z = m.vertical * x
    z_check = m.vertical * d * third - 1
    if z != z_check:
        raise InconsistentData(
            f"depth {_d(z)} from z = {_d(m.vertical)}x disagrees with "
            f"{_d(z_check)} from the area equation; the data are inconsistent"
        )
    return Solution(
        values={"x": x, "y": y, "z": z},
        trace=steps,
        roots=(x_scaled, y_scaled, third),
    )


def solve_well_sum(problem: WellProblem) -> Solution:
    """BM 85200 no. 6: well with x + y given.

    Scaling by the sum s gives X + Y = 1 and X^2 Y = V/(12 s^3); the pair
    is found by the exhaustive scan over sixtieths, and the third root
    (z+1)/(12s) cross-checks the depth.  A second, irrational pair may
    solve the scaled system; the scan reports only rational pairs on the
    sixtieth grid, and the quadratic-reduction oracle confirms when nothing
    rational exists.
    """
    if problem.length_plus_width is None:
        raise ValueError("problem has no sum constraint")
    s = problem.length_plus_width
    m = problem.metrology
    steps, inv_scale, rhs_product = _well_steps(s, "sum", problem)

    g = PAIR_GRANULARITY
    scaled = problem.volume * inv_scale * g**3  # (V / (12 s^3)) * 60^3
    if scaled.denominator != 1 or scaled < 1:
        raise NotFound(
            f"scaled volume {scaled} is not a positive integer; the pair "
            f"scan cannot run"
        )
    pair = factor_pair_sum_constrained(int(scaled), g, 1)
    third = rhs_product / (pair.x * pair.y)  # (z + 1) / (12 s)

    x = s * pair.x
    y = s * pair.y
    z = m.vertical * x
    z_check = m.vertical * s * third - 1
    if z != z_check:
        raise InconsistentData(
            f"depth {_d(z)} from z = {_d(m.vertical)}x disagrees with "
            f"{_d(z_check)} from the area equation; the data are inconsistent"
        )
    return Solution(
        values={"x": x, "y": y, "z": z},
        trace=steps,
        roots=(pair.x, pair.y, third),
    )


def solve_x3_ax2(a, b, q_max: int = 1000,
                 bounds: SearchBounds | None = None) -> ScaledCubicRoot:
    """Solve x^3 + a*x^2 = b through the substitution x = (a/q) * n.

    Finds the smallest integer q such that c = a/q makes b/c^3 a positive
    integer r, then reads n off the factorization r = n^2 (n + q); the
    answer is x = c*n.  Raises NoScaleFound when no q <= q_max works, and
    NotFound when the factorization fails at the chosen q.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a <= 0 or b <= 0:
        raise ValueError("coefficients must be positive")
    for q in range(1, q_max + 1):
        scale = a / q
        target = b / scale**3
        if target.denominator == 1 and target >= 1:
            n = factor_n2_times_n_plus_q(int(target), q, bounds)
            return ScaledCubicRoot(scale * n, scale, n, q, int(target))
    raise NoScaleFound(
        f"no q in 1..{q_max} makes b/(a/q)^3 a positive integer"
    )


# the canonical Jigu Suanjing instance and its transmitted hypotenuse figure
WANG_CLASSIC = (Fraction(35301, 50), Fraction(369, 10))
WANG_TRANSMITTED_HYPOTENUSE = Fraction(201, 4)  # 50 1/4 as handed down


def solve_wang_system(problem: WangProblem, q_max: int = 1000) -> Solution:
    """Solve x^2 + y^2 = z^2 with x*y and z - x given.

    Eliminating y and z gives x^3 + (S/2)x^2 = P^2/(2S) with S the excess
    and P the product; the scaled factorization solves it, after which
    y = P/x and z = x + S.  The Pythagorean relation is re-checked exactly
    as a guard on the recovered triple.
    """
    p = problem.product
    s = problem.excess
    a = s / 2
    b = p * p / (2 * s)
    result = solve_x3_ax2(a, b, q_max=q_max)
    x = result.x
    y = p / x
    z = x + s
    if x * x + y * y != z * z:
        raise PythagorasCheckFailed(
            f"{_d(x)}, {_d(y)}, {_d(z)} is not a right triangle"
        )
    notes = ()
    if (p, s) == WANG_CLASSIC and z != WANG_TRANSMITTED_HYPOTENUSE:
        notes = (
            f"the transmitted answer gives the hypotenuse as "
            f"{WANG_TRANSMITTED_HYPOTENUSE} (50 1/4), which fails "
            f"x^2 + y^2 = z^2; the consistent value is {z} (51 1/4)",
        )
    trace = (
        _trace("coefficient", a,
               f"the quadratic coefficient is half the excess: {a}"),
        _trace("constant", b,
               f"the constant is the squared product over twice the excess: {b}"),
        _trace("scale", result.scale,
               f"x = ({result.scale}) n with q = {result.q}"),
        _trace("target", result.target,
               f"n^2 (n + {result.q}) = {result.target}"),
        _trace("index", result.index,
               f"the factorization gives n = {result.index}"),
    )
    return Solution(
        values={
            "x": x,
            "y": y,
            "z": z,
            "q": Fraction(result.q),
            "scale": result.scale,
            "index": Fraction(result.index),
        },
        trace=trace,
        roots=(Fraction(result.index),),
        notes=notes,
    )
