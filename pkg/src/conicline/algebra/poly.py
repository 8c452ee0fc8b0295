"""Dense univariate polynomials over the rationals.

Coefficients are ``Fraction`` values indexed by degree.  Everything here is
exact; floats never enter any computation.  Degrees stay small (at most 8 for
every polynomial arising from conic-conic elimination), so the classical
algorithms below (Euclidean gcd, recursive resultant, Sturm chains over the
integers) are both simple and fast enough.

Sign determinations used in root isolation run on integer-normalized
coefficient tuples: evaluating the sign of p(a/b) reduces to the sign of
sum(c_i * a^i * b^(n-i)), a pure big-integer expression.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from ..errors import InvalidInput
from .intervals import ComplexBox, Interval, QComplex

_ZERO = Fraction(0)
_ONE = Fraction(1)


class RatPoly:
    """Immutable univariate polynomial over Q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int | str]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("RatPoly is immutable")

    # -- structure ----------------------------------------------------------

    @staticmethod
    def zero() -> "RatPoly":
        return RatPoly(())

    @staticmethod
    def constant(c) -> "RatPoly":
        return RatPoly((Fraction(c),))

    @staticmethod
    def x() -> "RatPoly":
        return RatPoly((0, 1))

    @staticmethod
    def from_roots(roots: Sequence[Fraction]) -> "RatPoly":
        p = RatPoly.constant(1)
        for r in roots:
            p = p * RatPoly((-Fraction(r), 1))
        return p

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise InvalidInput("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "RatPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{i}" if i else f"{c}")
        return "RatPoly(" + " + ".join(terms) + ")"

    # -- ring operations ----------------------------------------------------

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        if self.is_zero or other.is_zero:
            return RatPoly.zero()
        out = [_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return RatPoly(out)

    def scale(self, c) -> "RatPoly":
        c = Fraction(c)
        return RatPoly(tuple(a * c for a in self.coeffs))

    def shift_degree(self, k: int) -> "RatPoly":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return RatPoly((_ZERO,) * k + self.coeffs)

    def divmod(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero:
            raise InvalidInput("polynomial division by zero")
        q: list[Fraction] = [_ZERO] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        d, lc = other.degree, other.leading
        while len(rem) - 1 >= d and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            f = rem[-1] / lc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
            rem.pop()
        return RatPoly(q), RatPoly(rem)

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return self.divmod(other)[0]

    def monic(self) -> "RatPoly":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def derivative(self) -> "RatPoly":
        return RatPoly(tuple(c * i for i, c in enumerate(self.coeffs) if i >= 1))

    def compose(self, inner: "RatPoly") -> "RatPoly":
        """self(inner(x)) by Horner over RatPoly."""
        out = RatPoly.zero()
        for c in reversed(self.coeffs):
            out = out * inner + RatPoly.constant(c)
        return out

    # -- evaluation ---------------------------------------------------------

    def eval(self, x) -> Fraction:
        x = Fraction(x)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, z: QComplex) -> QComplex:
        acc = QComplex(_ZERO, _ZERO)
        for c in reversed(self.coeffs):
            acc = acc * z + QComplex(c, _ZERO)
        return acc

    def eval_interval(self, iv: Interval) -> Interval:
        acc = Interval.point(_ZERO)
        for c in reversed(self.coeffs):
            acc = acc * iv + Interval.point(c)
        return acc

    def eval_box(self, box: ComplexBox) -> ComplexBox:
        acc = ComplexBox.point(QComplex(_ZERO, _ZERO))
        for c in reversed(self.coeffs):
            acc = acc * box + ComplexBox.point(QComplex(c, _ZERO))
        return acc

    def sign_at(self, x: Fraction) -> int:
        """Exact sign of self(x) via integer arithmetic."""
        n, d = x.numerator, x.denominator
        ints, _ = self.int_normalized()
        deg = len(ints) - 1
        acc = 0
        np = 1  # n^i built up incrementally
        dp = [1] * (deg + 1)
        for i in range(deg - 1, -1, -1):
            dp[i] = dp[i + 1] * d
        for i, c in enumerate(ints):
            acc += c * np * dp[i]
            np *= n
        return (acc > 0) - (acc < 0)

    # -- integer normalization ---------------------------------------------

    def int_normalized(self) -> tuple[tuple[int, ...], Fraction]:
        """Primitive integer coefficients ``ints`` and factor with
        self = factor * ints (factor > 0)."""
        return _int_normalized_cached(self.coeffs)

    # -- gcd and friends -----------------------------------------------------

    def gcd(self, other: "RatPoly") -> "RatPoly":
        """Monic gcd over Q (a nonzero constant gcd is returned as 1)."""
        a, b = self, other
        if a.is_zero:
            return b.monic() if not b.is_zero else RatPoly.zero()
        while not b.is_zero:
            a, b = b, a % b
        return a.monic()


@lru_cache(maxsize=4096)
def _int_normalized_cached(coeffs: tuple[Fraction, ...]) -> tuple[tuple[int, ...], Fraction]:
    if not coeffs:
        return (), _ONE
    from math import gcd as igcd, lcm

    den = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * den) for c in coeffs]
    g = 0
    for v in ints:
        g = igcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    else:
        g = 1
    return tuple(ints), Fraction(g, den)


def resultant(f: RatPoly, g: RatPoly) -> Fraction:
    """Resultant Res_x(f, g), exact.

    Classical Euclidean recursion:
    Res(f, g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) * Res(g, r)
    with r = f mod g.
    """
    if f.is_zero or g.is_zero:
        raise InvalidInput("resultant of the zero polynomial is undefined")
    if f.degree == 0:
        return f.leading ** g.degree
    if g.degree == 0:
        return g.leading ** f.degree

    def rec(a: RatPoly, b: RatPoly) -> Fraction:
        if b.degree == 0:
            return b.leading ** a.degree
        r = a % b
        if r.is_zero:
            return _ZERO
        sign = -1 if (a.degree * b.degree) % 2 else 1
        return sign * b.leading ** (a.degree - r.degree) * rec(b, r)

    return rec(f, g)


def resultant_poly(f: RatPoly, g: RatPoly) -> RatPoly:
    """Resultant wrapped as a constant polynomial (callers that expect a
    polynomial-valued eliminant of two univariate inputs)."""
    return RatPoly.constant(resultant(f, g))


def squarefree_part(f: RatPoly) -> RatPoly:
    """f / gcd(f, f'), monic."""
    if f.is_zero:
        raise InvalidInput("squarefree part of the zero polynomial is undefined")
    if f.degree == 0:
        return RatPoly.constant(1)
    g = f.gcd(f.derivative())
    if g.degree == 0:
        return f.monic()
    q, r = f.divmod(g)
    assert r.is_zero
    return q.monic()


def is_squarefree(f: RatPoly) -> bool:
    if f.is_zero:
        return False
    if f.degree == 0:
        return True
    return f.gcd(f.derivative()).degree == 0


def cauchy_root_bound(f: RatPoly) -> Fraction:
    """B with every complex root of f strictly inside |z| < B."""
    if f.is_zero or f.degree == 0:
        return _ONE
    lc = abs(f.leading)
    m = max(abs(c) for c in f.coeffs[:-1]) if f.degree >= 1 else _ZERO
    return 1 + m / lc


# -- Sturm chains -----------------------------------------------------------


@lru_cache(maxsize=4096)
def _sturm_chain_int(coeffs: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Signed pseudo-remainder Sturm chain with primitive integer members.

    Each member is a positive rational multiple of the exact Sturm chain
    member, so sign variation counts are unaffected.
    """
    from math import gcd as igcd

    def primitive(v: list[int]) -> tuple[int, ...]:
        g = 0
        for c in v:
            g = igcd(g, abs(c))
        if g > 1:
            v = [c // g for c in v]
        return tuple(v)

    def pseudo_rem(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
        # Exactly lc(b)^(deg a - deg b + 1) * a mod b over Z.
        da, db = len(a) - 1, len(b) - 1
        lb = b[-1]
        rem = list(a)
        e = da - db + 1
        while rem and len(rem) - 1 >= db:
            k = len(rem) - 1 - db
            top = rem[-1]
            rem = [c * lb for c in rem]
            for i, c in enumerate(b):
                rem[k + i] -= top * c
            e -= 1
            while rem and rem[-1] == 0:
                rem.pop()
        scale = lb ** e
        return [c * scale for c in rem]

    f = list(coeffs)
    fp = [c * i for i, c in enumerate(f)][1:]
    chain = [tuple(f)]
    if fp:
        chain.append(primitive(fp))
    while len(chain[-1]) > 1:
        a, b = chain[-2], chain[-1]
        delta = len(a) - len(b) + 1
        rem = pseudo_rem(a, b)
        if not rem:
            break
        # pseudo_rem scales by lc(b)^delta; flip once more if that scale < 0
        sgn = -1
        if b[-1] < 0 and delta % 2 == 1:
            sgn = 1
        chain.append(primitive([sgn * c for c in rem]))
    return tuple(chain)


def sturm_chain(f: RatPoly) -> tuple[tuple[int, ...], ...]:
    ints, _ = f.int_normalized()
    if not ints:
        raise InvalidInput("Sturm chain of the zero polynomial")
    return _sturm_chain_int(ints)


def _sign_int_at(ints: Sequence[int], x: Fraction) -> int:
    n, d = x.numerator, x.denominator
    acc = 0
    np = 1
    deg = len(ints) - 1
    dpow = [1] * (deg + 1)
    for i in range(deg - 1, -1, -1):
        dpow[i] = dpow[i + 1] * d
    for i, c in enumerate(ints):
        if c:
            acc += c * np * dpow[i]
        np *= n
    return (acc > 0) - (acc < 0)


def sturm_variations(chain: Sequence[Sequence[int]], x: Fraction) -> int:
    signs = [s for s in (_sign_int_at(m, x) for m in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots_between(f: RatPoly, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots of square-free f in (a, b]."""
    chain = sturm_chain(f)
    return sturm_variations(chain, a) - sturm_variations(chain, b)
