"""Strict parsing and rendering of exact rationals.

File formats carry rationals as canonical strings: ``"p"`` or ``"p/q"`` with
q > 0 and gcd(|p|, q) = 1.  Anything non-canonical ("2/4", "-0", "+1",
whitespace) is rejected so that parse/serialize round-trips are the identity.
"""

import re
from fractions import Fraction
from math import gcd

from .errors import VectorFormatError

_RATIONAL_RE = re.compile(r"^(-?(?:0|[1-9][0-9]*))(?:/([1-9][0-9]*))?$")


def parse_rational(text: str) -> Fraction:
    """Parse a canonical rational string, rejecting non-lowest-terms forms."""
    if not isinstance(text, str):
        raise VectorFormatError(f"rational must be a string, got {type(text).__name__}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise VectorFormatError(f"malformed rational literal {text!r}")
    num = int(m.group(1))
    if m.group(1) == "-0":
        raise VectorFormatError("malformed rational literal '-0'")
    if m.group(2) is None:
        return Fraction(num)
    den = int(m.group(2))
    if gcd(abs(num), den) != 1:
        raise VectorFormatError(f"rational {text!r} is not in lowest terms")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def decimal_string(q: Fraction, places: int = 6) -> str:
    """Render q to fixed decimal places with exact round-half-even."""
    q = Fraction(q)
    sign = "-" if q < 0 else ""
    q = abs(q)
    scale = 10**places
    scaled, rem = divmod(q.numerator * scale, q.denominator)
    twice = 2 * rem
    if twice > q.denominator or (twice == q.denominator and scaled % 2 == 1):
        scaled += 1
    whole, frac = divmod(scaled, scale)
    return f"{sign}{whole}.{frac:0{places}d}"
