"""Exact arithmetic substrate: integer roots, perfect-power tests,
quarter-integers, single radicals and certified dyadic enclosures.

Python's built-in ``int`` plays the role of the unbounded Integer type and
``fractions.Fraction`` the reduced Rational type; everything in this module
stays in exact integer/rational arithmetic (no floats anywhere).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

# Residues of perfect squares modulo 64 / 63 / 65.  Cheap rejection filter
# consulted before an exact isqrt; quadrature scans hit this billions of times.
_SQ64 = bytes(1 if i in {(j * j) & 63 for j in range(64)} else 0 for i in range(64))
_SQ63 = bytes(1 if i in {(j * j) % 63 for j in range(63)} else 0 for i in range(63))
_SQ65 = bytes(1 if i in {(j * j) % 65 for j in range(65)} else 0 for i in range(65))


def isqrt(n: int) -> int:
    """Floor square root of a non-negative integer."""
    if n < 0:
        raise ValueError("isqrt of a negative integer")
    return math.isqrt(n)


def ikth_root(n: int, k: int) -> int:
    """Floor k-th root: largest r with r**k <= n.

    k must be >= 1.  Negative n is accepted only for odd k (the root is then
    negative and still floored, e.g. ikth_root(-9, 3) == -3).
    """
    if k < 1:
        raise ValueError("root index must be >= 1")
    if n < 0:
        if k % 2 == 0:
            raise ValueError("even root of a negative integer")
        r = ikth_root(-n, k)
        return -r if r**k == -n else -(r + 1)
    if k == 1 or n in (0, 1):
        return n
    if k == 2:
        return math.isqrt(n)
    if k >= n.bit_length():
        return 1
    # Newton iteration converging from above; exact in integer arithmetic.
    x = 1 << (n.bit_length() // k + 1)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def as_perfect_square(n: int) -> int | None:
    """Return r >= 0 with r*r == n, or None.  Never a false positive."""
    if n < 0:
        return None
    if not (_SQ64[n & 63] and _SQ63[n % 63] and _SQ65[n % 65]):
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def as_perfect_kth(n: int, k: int) -> int | None:
    """Return r with r**k == n, or None (r may be negative for odd k)."""
    if k == 2:
        return as_perfect_square(n)
    try:
        r = ikth_root(n, k)
    except ValueError:
        return None
    return r if r**k == n else None


@dataclass(frozen=True, order=True)
class QuarterInt:
    """An exact multiple of 1/4 (the grid of admissible medians)."""

    quarters: int

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "QuarterInt":
        f = Fraction(value) * 4
        if f.denominator != 1:
            raise ValueError(f"{value} is not a multiple of 1/4")
        return cls(f.numerator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.quarters, 4)

    @property
    def is_integer(self) -> bool:
        return self.quarters % 4 == 0

    @property
    def is_half_integer(self) -> bool:
        return self.quarters % 4 == 2

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class AlgebraicRoot:
    """The single radical base**(1/index) with rational base > 0."""

    base: Fraction
    index: int

    def __post_init__(self):
        object.__setattr__(self, "base", Fraction(self.base))
        if self.base <= 0:
            raise ValueError("radical base must be positive")
        if self.index < 1:
            raise ValueError("radical index must be >= 1")

    def rational_value(self) -> Fraction | None:
        """The exact value when base is a perfect index-th power, else None."""
        p = as_perfect_kth(self.base.numerator, self.index)
        q = as_perfect_kth(self.base.denominator, self.index)
        if p is None or q is None:
            return None
        return Fraction(p, q)

    @property
    def is_rational(self) -> bool:
        return self.rational_value() is not None

    def __str__(self) -> str:
        b = self.base
        base_s = str(b.numerator) if b.denominator == 1 else f"({b})"
        return f"{base_s}^(1/{self.index})"


@dataclass(frozen=True)
class DyadicInterval:
    """Closed interval [lo, hi] with exact rational endpoints.

    Intervals produced by refine() have power-of-two denominators; interval
    arithmetic below preserves that whenever both operands are dyadic.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @classmethod
    def point(cls, v: Fraction | int) -> "DyadicInterval":
        f = Fraction(v)
        return cls(f, f)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, v: Fraction | int) -> bool:
        return self.lo <= v <= self.hi

    def encloses(self, other: "DyadicInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def _coerce(self, other):
        if isinstance(other, DyadicInterval):
            return other
        return DyadicInterval.point(other)

    def __add__(self, other):
        o = self._coerce(other)
        return DyadicInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return DyadicInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        o = self._coerce(other)
        c = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return DyadicInterval(min(c), max(c))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative interval powers not supported")
        out = DyadicInterval.point(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def half_shift(self, k: int) -> "DyadicInterval":
        """Exact division by 2**k (keeps endpoints dyadic)."""
        s = Fraction(1, 1 << k)
        return DyadicInterval(self.lo * s, self.hi * s)

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def refine(root: AlgebraicRoot, bits: int) -> DyadicInterval:
    """Certified enclosure of root of width exactly 2**-bits.

    The floor c of value * 2**bits is found by integer bracketing of
    num * 2**(bits*k) against c**k * den, so the interval [c, c+1] / 2**bits
    provably contains the root.
    """
    if bits < 1:
        raise ValueError("bits must be >= 1")
    k = root.index
    num, den = root.base.numerator, root.base.denominator
    a = num << (bits * k)
    c = ikth_root(a // den, k)
    while (c + 1) ** k * den <= a:
        c += 1
    while c**k * den > a:
        c -= 1
    scale = Fraction(1, 1 << bits)
    return DyadicInterval(c * scale, (c + 1) * scale)
