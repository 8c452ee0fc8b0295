"""Exact interval and rectangle arithmetic over the rationals.

An ``Interval`` is a closed segment [lo, hi] with Fraction endpoints; a
``ComplexBox`` is a rectangle re x im.  These carry enclosure proofs through
evaluations: every operation returns a set guaranteed to contain the image of
its operands.  Endpoints are plain rationals; the isolation layer keeps them
dyadic where refinement speed matters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidInput

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise InvalidInput(f"empty interval [{self.lo}, {self.hi}]")

    @staticmethod
    def point(x) -> "Interval":
        x = Fraction(x)
        return Interval(x, x)

    @staticmethod
    def make(a, b) -> "Interval":
        a, b = Fraction(a), Fraction(b)
        return Interval(min(a, b), max(a, b))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "Interval") -> "Interval":
        return Interval(self.lo - other.hi, self.hi - other.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        ps = (self.lo * other.lo, self.lo * other.hi,
              self.hi * other.lo, self.hi * other.hi)
        return Interval(min(ps), max(ps))

    def scale(self, c: Fraction) -> "Interval":
        c = Fraction(c)
        if c >= 0:
            return Interval(self.lo * c, self.hi * c)
        return Interval(self.hi * c, self.lo * c)

    def shift(self, c: Fraction) -> "Interval":
        return Interval(self.lo + c, self.hi + c)

    def contains(self, x: Fraction) -> bool:
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def strictly_inside(self, outer: "Interval") -> bool:
        return outer.lo < self.lo and self.hi < outer.hi

    def overlaps(self, other: "Interval") -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def intersect(self, other: "Interval") -> "Interval":
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def reciprocal(self) -> "Interval":
        if self.contains_zero():
            raise InvalidInput("reciprocal of an interval containing 0")
        return Interval(1 / self.hi, 1 / self.lo)

    def square(self) -> "Interval":
        """Tighter than self * self when the interval straddles 0."""
        a, b = abs(self.lo), abs(self.hi)
        hi = max(a, b) ** 2
        lo = _ZERO if self.contains_zero() else min(a, b) ** 2
        return Interval(lo, hi)


@dataclass(frozen=True)
class QComplex:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re, im=0) -> "QComplex":
        return QComplex(Fraction(re), Fraction(im))

    def __add__(self, o: "QComplex") -> "QComplex":
        return QComplex(self.re + o.re, self.im + o.im)

    def __sub__(self, o: "QComplex") -> "QComplex":
        return QComplex(self.re - o.re, self.im - o.im)

    def __mul__(self, o: "QComplex") -> "QComplex":
        return QComplex(self.re * o.re - self.im * o.im,
                        self.re * o.im + self.im * o.re)

    def __neg__(self) -> "QComplex":
        return QComplex(-self.re, -self.im)

    def conj(self) -> "QComplex":
        return QComplex(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def reciprocal(self) -> "QComplex":
        n = self.abs2()
        if n == 0:
            raise InvalidInput("division by complex zero")
        return QComplex(self.re / n, -self.im / n)

    def __truediv__(self, o: "QComplex") -> "QComplex":
        return self * o.reciprocal()

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0


@dataclass(frozen=True)
class ComplexBox:
    re: Interval
    im: Interval

    @staticmethod
    def point(z: QComplex) -> "ComplexBox":
        return ComplexBox(Interval.point(z.re), Interval.point(z.im))

    @staticmethod
    def make(re_lo, re_hi, im_lo, im_hi) -> "ComplexBox":
        return ComplexBox(Interval(Fraction(re_lo), Fraction(re_hi)),
                          Interval(Fraction(im_lo), Fraction(im_hi)))

    def __add__(self, o: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re + o.re, self.im + o.im)

    def __sub__(self, o: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re - o.re, self.im - o.im)

    def __mul__(self, o: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re * o.re - self.im * o.im,
                          self.re * o.im + self.im * o.re)

    def scale_complex(self, c: QComplex) -> "ComplexBox":
        return self * ComplexBox.point(c)

    def shift(self, c: QComplex) -> "ComplexBox":
        return ComplexBox(self.re.shift(c.re), self.im.shift(c.im))

    @property
    def mid(self) -> QComplex:
        return QComplex(self.re.mid, self.im.mid)

    def contains(self, z: QComplex) -> bool:
        return self.re.contains(z.re) and self.im.contains(z.im)

    def contains_zero(self) -> bool:
        return self.re.contains_zero() and self.im.contains_zero()

    def strictly_inside(self, outer: "ComplexBox") -> bool:
        return self.re.strictly_inside(outer.re) and self.im.strictly_inside(outer.im)

    def overlaps(self, other: "ComplexBox") -> bool:
        return self.re.overlaps(other.re) and self.im.overlaps(other.im)

    def intersect(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re.intersect(other.re), self.im.intersect(other.im))

    def reciprocal(self) -> "ComplexBox":
        """Enclosure of 1/z over the box; needs 0 outside the box."""
        n = self.re.square() + self.im.square()
        inv = n.reciprocal()
        return ComplexBox(self.re * inv, (-self.im) * inv)

    def __truediv__(self, o: "ComplexBox") -> "ComplexBox":
        return self * o.reciprocal()

    def mirror(self) -> "ComplexBox":
        return ComplexBox(self.re, -self.im)

    @property
    def max_width(self) -> Fraction:
        return max(self.re.width, self.im.width)
