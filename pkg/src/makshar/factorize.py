"""The makshar(um) "factorization" engine.

Tablet procedures read roots off a factorization of the target: write N as
n^2(n+q) and the root is n, or split M into X^2 * Y under the side
constraint X + Y = sigma.  Both searches here are exhaustive or provably
complete, so a NotFound answer is a statement about all candidates, not a
heuristic giving up.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConventionViolation, MultipleSolutions, NotFound
from .tables import DEFAULT_BOUNDS, SearchBounds


@dataclass(frozen=True)
class PairResult:
    """A pair X >= Y > 0 with X^2 * Y equal to the queried product."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        if not (self.x >= self.y > 0):
            raise ValueError("pair must satisfy x >= y > 0")


def factor_n2_times_n_plus_q(target: int, q: int,
                             bounds: SearchBounds | None = None) -> int:
    """The unique n in bounds with n^2 * (n + q) == target.

    n^2(n+q) is strictly increasing once n > max(0, -2q/3); the search is
    restricted to that monotone branch (which also must satisfy n + q > 0,
    so the product is positive), hence at most one solution exists and a
    binary search is exact.
    """
    if target < 1:
        raise ValueError("target must be >= 1")
    if bounds is None:
        bounds = DEFAULT_BOUNDS
    # smallest n on the increasing branch with n + q > 0
    branch_start = max(1, (-2 * q) // 3 + 1, 1 - q)
    lo = max(bounds.lower, branch_start)
    hi = bounds.upper
    if lo > hi:
        raise NotFound(f"no n in {bounds} with n^2(n{q:+d}) = {target}")
    while lo < hi:
        mid = (lo + hi) // 2
        if mid * mid * (mid + q) < target:
            lo = mid + 1
        else:
            hi = mid
    if lo * lo * (lo + q) == target:
        return lo
    raise NotFound(f"no n in {bounds} with n^2(n{q:+d}) = {target}")


def factor_pair_sum_constrained(m_scaled: int, g: int, sigma) -> PairResult:
    """Split m_scaled/g^3 into X^2 * Y with X + Y == sigma, X = p/g.

    Scans p = 1 .. sigma*g - 1 exhaustively for p^2 (sigma*g - p) ==
    m_scaled, so every solution is detected.  The single solution with
    X >= Y is returned; more than one raises MultipleSolutions, and if
    solutions exist only with X < Y the X >= Y reporting convention cannot
    be honoured and ConventionViolation carries the raw pairs.
    """
    if m_scaled < 1:
        raise ValueError("scaled product must be >= 1")
    if g < 1:
        raise ValueError("granularity must be >= 1")
    sigma = Fraction(sigma)
    if sigma <= 0:
        raise ValueError("sum constraint must be positive")
    total = sigma * g
    if total.denominator != 1:
        raise ValueError(
            f"sum {sigma} is not expressible at granularity {g}"
        )
    total = int(total)
    if total < 2:
        raise ValueError("sum times granularity must be at least 2")

    raw = [(Fraction(p, g), sigma - Fraction(p, g))
           for p in range(1, total)
           if p * p * (total - p) == m_scaled]
    if not raw:
        raise NotFound(
            f"no p in 1..{total - 1} with p^2({total} - p) = {m_scaled}"
        )
    ordered = [pair for pair in raw if pair[0] >= pair[1]]
    if len(ordered) > 1:
        raise MultipleSolutions(
            f"{len(ordered)} admissible pairs for {m_scaled}", ordered
        )
    if not ordered:
        raise ConventionViolation(
            f"only pairs with x < y split {m_scaled}", raw
        )
    return PairResult(*ordered[0])


def prime_factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; 1 maps to {}."""
    if n < 1:
        raise ValueError("can only factorize positive integers")
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors
