"""Exact rational arithmetic and the +inf time bound.

All timing data in the toolkit (interval endpoints, firing dates, domain
coefficients) is kept as exact rationals so that canonical forms compare by
equality.  gmpy2's mpq is used when available because domain closure and
graph exploration are arithmetic-heavy; plain fractions.Fraction is a
drop-in fallback.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rat

RAT_ZERO = Rat(0)
RAT_ONE = Rat(1)


class Infinity:
    """The +inf right end-point. Compares above every rational, absorbs +."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash(float("inf"))

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("inf - inf is undefined")
        return self

    def __rsub__(self, other):
        raise ArithmeticError("cannot subtract inf from a finite bound")

    def __neg__(self):
        raise ArithmeticError("-inf is not a valid time bound")

    def __mul__(self, other):
        if other is self or other > 0:
            return self
        raise ArithmeticError("inf * nonpositive is undefined")

    __rmul__ = __mul__

    def __repr__(self):
        return "inf"


INF = Infinity()

# A time bound is either a Rat >= 0 or INF.
Bound = object


def is_inf(x) -> bool:
    return x is INF


def rat(value) -> "Rat":
    """Coerce ints/strings/rationals to Rat. Floats are rejected: callers
    must opt in to an explicit conversion to avoid silent rounding."""
    if isinstance(value, float):
        raise TypeError("refusing implicit float->rational conversion")
    return Rat(value)


def parse_rational(text: str) -> "Rat":
    """Parse 'a', 'a/b' or a finite decimal like '2.75' exactly."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Rat(int(num), int(den))
    if "." in text:
        whole, frac = text.split(".", 1)
        if not frac.isdigit() or (whole and not whole.lstrip("+-").isdigit()):
            raise ValueError(f"bad rational literal: {text!r}")
        sign = -1 if whole.strip().startswith("-") else 1
        base = int(whole) if whole not in ("", "-", "+") else 0
        return Rat(base) + sign * Rat(int(frac), 10 ** len(frac))
    return Rat(int(text))


def format_rational(x) -> str:
    """Render a bound as 'a', 'a/b' or 'inf'."""
    if x is INF:
        return "inf"
    return str(x)


def rational_to_decimal(x, precision: int = 6) -> str:
    """Exact decimal rendering, truncated toward zero at `precision` digits."""
    if x is INF:
        return "inf"
    num, den = int(x.numerator), int(x.denominator)
    sign = "-" if num < 0 else ""
    num = abs(num)
    whole, rem = divmod(num, den)
    if rem == 0:
        return f"{sign}{whole}"
    digits = rem * 10**precision // den
    frac = str(digits).rjust(precision, "0").rstrip("0")
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"


def bound_json(x):
    """JSON value for a bound: {"num": a, "den": b} or "inf"."""
    if x is INF:
        return "inf"
    return {"num": int(x.numerator), "den": int(x.denominator)}


def grid_ceil(x, grid: int = 10**9):
    """Round a rational up to the next multiple of 1/grid (identity on
    multiples).  Used to keep numerically-maximized bounds sound."""
    if x is INF:
        return INF
    num, den = int(x.numerator), int(x.denominator)
    return Rat(-((-num * grid) // den), grid)
