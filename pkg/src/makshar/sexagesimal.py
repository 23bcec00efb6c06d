"""Exact rational arithmetic with base-60 (sexagesimal) notation.

All quantities are `fractions.Fraction` values, so every operation in the
package is exact; nothing is ever rounded.  `ExactNumber` is an alias for
`Fraction` and is the carrier type used everywhere.

Notation follows the usual assyriological convention: base-60 digits are
written in decimal, separated by commas, with ";" as the radix point and a
leading "-" for negatives (which never occur in tablet material but are
allowed by the core).  So

    "1,10;30"  means  1*60 + 10 + 30/60  =  70 1/2
    "0;7,30"   means  7/60 + 30/3600     =  1/8

A literal without ";" is read as an integer in base 60: "33,22" is 2002.
The same grammar is shared by the procedure scripts, the problem files and
the command line.  Only values whose denominator is 5-smooth (prime factors
among 2, 3, 5) have a finite sexagesimal expansion; rendering anything else
raises NotFiniteExpansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotFiniteExpansion, ParseError

ExactNumber = Fraction

_SMOOTH_PRIMES = (2, 3, 5)


def _strip_smooth(n: int) -> int:
    """Remove all factors 2, 3, 5 from |n|."""
    n = abs(n)
    for p in _SMOOTH_PRIMES:
        while n % p == 0:
            n //= p
    return n


def _parse_digit_group(text: str, what: str) -> list[int]:
    digits = []
    for part in text.split(","):
        if not part or not part.isdigit():
            raise ParseError(f"malformed {what} digit {part!r} in sexagesimal literal")
        value = int(part)
        if value >= 60:
            raise ParseError(f"sexagesimal digit {value} out of range 0..59")
        digits.append(value)
    return digits


def parse_number(text: str, fraction_digits: int | None = None) -> Fraction:
    """Parse a sexagesimal literal into an exact rational.

    `fraction_digits` is a placement hint for sources that omit the radix
    point: the literal is read as an integer and then divided by
    60**fraction_digits.  It may not be combined with an explicit ";".
    """
    if not isinstance(text, str):
        raise ParseError(f"expected a string literal, got {type(text).__name__}")
    body = text
    sign = 1
    if body.startswith("-"):
        sign, body = -1, body[1:]
    if not body:
        raise ParseError("empty sexagesimal literal")
    head, radix, tail = body.partition(";")
    if radix and fraction_digits is not None:
        raise ParseError("placement hint given but the literal already has ';'")
    int_digits = _parse_digit_group(head, "integer")
    frac_digits = _parse_digit_group(tail, "fraction") if radix else []

    value = Fraction(0)
    for d in int_digits:
        value = value * 60 + d
    place = Fraction(1)
    for d in frac_digits:
        place /= 60
        value += d * place
    if fraction_digits is not None:
        if fraction_digits < 0:
            raise ParseError("placement hint must be non-negative")
        value /= Fraction(60) ** fraction_digits
    return sign * value


@dataclass(frozen=True)
class SexForm:
    """Canonical positional base-60 form of a rational number.

    Digits are most-significant first.  The integer part never has a leading
    zero digit unless it is the single digit 0, and the fraction part never
    ends in a zero digit.  Each finite-expansion rational has exactly one
    SexForm.
    """

    sign: int
    int_digits: tuple[int, ...]
    frac_digits: tuple[int, ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not self.int_digits:
            raise ValueError("integer part must have at least one digit")
        for d in self.int_digits + self.frac_digits:
            if not (0 <= d < 60):
                raise ValueError(f"digit {d} out of range 0..59")
        if len(self.int_digits) > 1 and self.int_digits[0] == 0:
            raise ValueError("leading zero digit in integer part")
        if self.frac_digits and self.frac_digits[-1] == 0:
            raise ValueError("trailing zero digit in fraction part")
        if self.sign == -1 and self.value() == 0:
            raise ValueError("zero has no sign")

    @classmethod
    def from_rational(cls, value) -> "SexForm":
        value = Fraction(value)
        if _strip_smooth(value.denominator) != 1:
            raise NotFiniteExpansion(
                f"{value} has no finite sexagesimal expansion "
                f"(denominator {value.denominator} is not 5-smooth)"
            )
        sign = -1 if value < 0 else 1
        magnitude = abs(value)
        whole = int(magnitude)
        frac = magnitude - whole

        int_digits = [0]
        if whole:
            int_digits = []
            while whole:
                whole, d = divmod(whole, 60)
                int_digits.append(d)
            int_digits.reverse()

        frac_digits: list[int] = []
        if frac:
            # minimal k with denominator | 60^k; minimality makes the last
            # digit nonzero
            places = 0
            scale = 1
            while scale % frac.denominator:
                scale *= 60
                places += 1
            rest = frac.numerator * (scale // frac.denominator)
            for _ in range(places):
                rest, d = divmod(rest, 60)
                frac_digits.append(d)
            frac_digits.reverse()
        return cls(sign, tuple(int_digits), tuple(frac_digits))

    def value(self) -> Fraction:
        result = Fraction(0)
        for d in self.int_digits:
            result = result * 60 + d
        place = Fraction(1)
        for d in self.frac_digits:
            place /= 60
            result += d * place
        return self.sign * result

    def __str__(self) -> str:
        text = ",".join(str(d) for d in self.int_digits)
        if self.frac_digits:
            text += ";" + ",".join(str(d) for d in self.frac_digits)
        return ("-" if self.sign < 0 else "") + text


def render_number(x, placement: str = "auto") -> str:
    """Render an exact rational in canonical sexagesimal notation.

    placement="auto" emits ";" exactly when the value has a fractional part;
    placement="integer" insists the value is an integer.  Raises
    NotFiniteExpansion when the denominator is not 5-smooth.
    """
    if placement not in ("auto", "integer"):
        raise ValueError(f"unknown placement {placement!r}")
    form = SexForm.from_rational(x)
    if placement == "integer" and form.frac_digits:
        raise ValueError(f"{Fraction(x)} is not an integer")
    return str(form)


def display_number(x) -> str:
    """Sexagesimal rendering, falling back to p/q for non-regular values."""
    try:
        return render_number(x)
    except NotFiniteExpansion:
        return str(Fraction(x))


def parse_value(text: str) -> Fraction:
    """Parse a value literal: sexagesimal, or a decimal fraction "p/q".

    The fraction form exists for quantities that do not come from base-60
    sources, e.g. "35301/50"; numerator and denominator are ordinary decimal
    integers.
    """
    text = text.strip()
    if "/" in text:
        num_text, _, den_text = text.partition("/")
        num_text = num_text.strip()
        den_text = den_text.strip()
        sign = 1
        if num_text.startswith("-"):
            sign, num_text = -1, num_text[1:]
        if not (num_text.isdigit() and den_text.isdigit()):
            raise ParseError(f"malformed fraction literal {text!r}")
        den = int(den_text)
        if den == 0:
            raise ParseError("fraction literal with zero denominator")
        return Fraction(sign * int(num_text), den)
    return parse_number(text)


def arithmetic(a, b, op: str) -> Fraction:
    """Exact field arithmetic: op is one of add, sub, mul, div."""
    a = Fraction(a)
    b = Fraction(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def reciprocal(x) -> Fraction:
    """The exact reciprocal 1/x (the igi of tablet procedures)."""
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("reciprocal of zero")
    return 1 / x


def is_regular(x) -> bool:
    """True iff numerator and denominator are both 5-smooth.

    Regular numbers are exactly those whose reciprocal also has a finite
    sexagesimal expansion, i.e. the numbers tablet reciprocal tables list.
    """
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero is neither regular nor irregular")
    return _strip_smooth(x.numerator) == 1 and _strip_smooth(x.denominator) == 1
