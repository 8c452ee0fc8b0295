"""Certified complex root isolation for square-free rational polynomials.

Real roots are isolated by Sturm bisection, an exact procedure.  Non-real
roots are isolated by pairing an arbitrary-precision floating hint (which
only proposes candidate rectangles) with an exact interval Krawczyk
certificate: K(X) contained in the interior of X proves that X holds exactly
one root.  Floating point therefore never decides anything; if hints at the
highest precision cannot be certified the code raises PrecisionExhausted,
which for the degree <= 8 inputs produced by this package indicates an
internal bug rather than a hard instance.

Equality of represented algebraic numbers is decided by interval separation
with a polynomial-gcd fallback, so there are no numeric thresholds anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from ..errors import InvalidInput, PrecisionExhausted, RequiresSquarefree
from ..rationals import dyadic_above, dyadic_below
from .intervals import ComplexBox, Interval, QComplex
from .poly import (RatPoly, cauchy_root_bound, is_squarefree, sturm_chain,
                   sturm_variations)

DEGREE_CAP = 8
DEFAULT_PRECISION = Fraction(1, 1 << 16)
_REFINE_CAP = 96

_HINT_DPS_LADDER = (40, 80, 160, 320)


@dataclass(frozen=True)
class IsolatingBox:
    """Rectangle with dyadic corners holding exactly one root of ``poly``.

    The root is strictly interior.  ``kind`` records how refinement proceeds:
    "real" boxes bisect on the real axis, "complex" boxes contract with the
    Krawczyk operator.  Instances are immutable; ``refine`` returns a new box
    whose widths strictly decreased.
    """

    poly: RatPoly
    re: Interval
    im: Interval
    kind: str
    level: int = 8

    @property
    def defining_poly(self) -> RatPoly:
        return self.poly

    @property
    def real_interval(self) -> tuple[Fraction, Fraction]:
        return (self.re.lo, self.re.hi)

    @property
    def imag_interval(self) -> tuple[Fraction, Fraction]:
        return (self.im.lo, self.im.hi)

    @property
    def box(self) -> ComplexBox:
        return ComplexBox(self.re, self.im)

    @property
    def max_width(self) -> Fraction:
        return max(self.re.width, self.im.width)

    def overlaps(self, other: "IsolatingBox") -> bool:
        return self.box.overlaps(other.box)

    def mirror(self) -> "IsolatingBox":
        return replace(self, im=-self.im)

    def is_real_root(self) -> bool:
        return self.kind == "real"

    def refine(self) -> "IsolatingBox":
        if self.kind == "real":
            return _refine_real(self)
        return _refine_complex(self)

    def refined_to(self, width: Fraction) -> "IsolatingBox":
        out = self
        for _ in range(_REFINE_CAP):
            if out.max_width <= width:
                return out
            out = out.refine()
        raise PrecisionExhausted(f"refinement to width {width} did not converge")


# -- real roots ---------------------------------------------------------------


def _count_open(chain, a: Fraction, b: Fraction) -> int:
    return sturm_variations(chain, a) - sturm_variations(chain, b)


def isolate_real_roots(f: RatPoly) -> list[Interval]:
    """Disjoint open dyadic intervals, one simple real root strictly inside
    each, f nonzero at every endpoint."""
    chain = sturm_chain(f)
    bound = dyadic_above(cauchy_root_bound(f), 4)
    out: list[Interval] = []

    def split(lo: Fraction, hi: Fraction, count: int):
        if count == 0:
            return
        if count == 1 and f.sign_at(lo) * f.sign_at(hi) < 0:
            out.append(Interval(lo, hi))
            return
        mid = (lo + hi) / 2
        if f.sign_at(mid) == 0:
            eps = (hi - lo) / 8
            while not (f.sign_at(mid - eps) != 0 and f.sign_at(mid + eps) != 0
                       and _count_open(chain, mid - eps, mid + eps) == 1):
                eps /= 2
            out.append(Interval(mid - eps, mid + eps))
            split(lo, mid - eps, _count_open(chain, lo, mid - eps))
            split(mid + eps, hi, _count_open(chain, mid + eps, hi))
        else:
            split(lo, mid, _count_open(chain, lo, mid))
            split(mid, hi, _count_open(chain, mid, hi))

    split(-bound, bound, _count_open(chain, -bound, bound))
    out.sort(key=lambda iv: iv.lo)
    return out


def _refine_real(b: IsolatingBox) -> IsolatingBox:
    f = b.poly
    lo, hi = b.re.lo, b.re.hi
    mid = (lo + hi) / 2
    s_mid = f.sign_at(mid)
    if s_mid == 0:
        eps = (hi - lo) / 8
        new = Interval(mid - eps, mid + eps)
    elif f.sign_at(lo) * s_mid < 0:
        new = Interval(lo, mid)
    else:
        new = Interval(mid, hi)
    h = b.im.hi / 2
    return replace(b, re=new, im=Interval(-h, h))


# -- Krawczyk certification ---------------------------------------------------


def krawczyk_image(f: RatPoly, box: ComplexBox) -> ComplexBox | None:
    """K(X) for the midpoint preconditioner, or None when it is undefined."""
    fp = f.derivative()
    m = box.mid
    dm = fp.eval_complex(m)
    if dm.is_zero:
        return None
    c = dm.reciprocal()
    pm = f.eval_complex(m)
    j = fp.eval_box(box)
    one = ComplexBox.point(QComplex.of(1))
    r = one - j.scale_complex(c)
    centered = box.shift(-m)
    return ComplexBox.point(m - c * pm) + r * centered


def certify_unique_root(f: RatPoly, box: ComplexBox) -> bool:
    """Exact proof that ``box`` contains exactly one root of f."""
    k = krawczyk_image(f, box)
    return k is not None and k.strictly_inside(box)


def _round_box_out(box: ComplexBox, scale: int) -> ComplexBox:
    return ComplexBox(
        Interval(dyadic_below(box.re.lo, scale), dyadic_above(box.re.hi, scale)),
        Interval(dyadic_below(box.im.lo, scale), dyadic_above(box.im.hi, scale)))


def _refine_complex(b: IsolatingBox) -> IsolatingBox:
    k = krawczyk_image(b.poly, b.box)
    if k is None or not k.strictly_inside(b.box):
        raise PrecisionExhausted("Krawczyk contraction failed on a certified box")
    shrunk = k.intersect(b.box)
    for extra in range(4, 64, 4):
        cand = _round_box_out(shrunk, b.level + extra).intersect(b.box)
        if cand.max_width < b.max_width:
            return replace(b, re=cand.re, im=cand.im, level=b.level + extra)
    raise PrecisionExhausted("dyadic rounding could not preserve contraction")


# -- floating hints -----------------------------------------------------------


def _mpf_to_fraction(x) -> Fraction:
    sign, man, exp, _ = x._mpf_
    if man == 0:
        return Fraction(0)
    v = Fraction(-man if sign else man)
    return v * Fraction(2) ** exp if exp >= 0 else v / (1 << -exp)


def _float_hints(f: RatPoly, dps: int) -> list[tuple[Fraction, Fraction]] | None:
    """Approximate roots as exact dyadic (re, im) pairs, or None on failure."""
    import mpmath as mp

    coeffs = list(reversed(f.coeffs))
    try:
        with mp.workdps(dps):
            roots = mp.polyroots([mp.mpf(c.numerator) / mp.mpf(c.denominator)
                                  for c in coeffs], maxsteps=200, extraprec=80)
            return [(_mpf_to_fraction(r.real), _mpf_to_fraction(r.imag))
                    for r in roots]
    except (mp.libmp.NoConvergence, ZeroDivisionError, ValueError):
        return None


def _sqrt_lower(x: Fraction, scale: int) -> Fraction:
    """Dyadic lower bound for sqrt(x), accurate to about 2**-scale."""
    q = 1 << scale
    n = x.numerator * q * q
    return Fraction(isqrt(n // x.denominator), q)


def _quadratic_upper_hint(f: RatPoly) -> list[tuple[Fraction, Fraction]]:
    a, b = f.coeffs[2], f.coeffs[1]
    c = f.coeffs[0]
    disc = b * b - 4 * a * c
    re = -b / (2 * a)
    im = _sqrt_lower(-disc, 24) / abs(2 * a)
    return [(re, im)]


def _box_at(re: Fraction, im: Fraction, rad: Fraction) -> ComplexBox:
    return ComplexBox(
        Interval(dyadic_below(re - rad, 64), dyadic_above(re + rad, 64)),
        Interval(dyadic_below(im - rad, 64), dyadic_above(im + rad, 64)))


def _certify_hints(f: RatPoly, hints: list[tuple[Fraction, Fraction]],
                   n_expected: int) -> list[ComplexBox] | None:
    """Certified disjoint rectangles around the upper-half-plane hints.

    Each hint gets a shrink ladder of candidate radii; the Krawczyk test
    decides.  Returns None when the hint set cannot be certified at all.
    """
    upper = [(re, im) for re, im in hints if im > 0]
    if len(upper) != n_expected:
        return None
    boxes = []
    for re, im in upper:
        gap = None
        for re2, im2 in hints:
            if (re2, im2) == (re, im):
                continue
            d = max(abs(re2 - re), abs(im2 - im))
            gap = d if gap is None else min(gap, d)
        base = im / 2 if gap is None else min(gap / 3, im / 2)
        cert = None
        for shrink in range(10):
            rad = dyadic_below(base / (1 << shrink), 64)
            if rad <= 0:
                break
            cand = _box_at(re, im, rad)
            if cand.im.lo > 0 and certify_unique_root(f, cand):
                cert = cand
                break
        if cert is None:
            return None
        boxes.append(cert)
    for i, bi in enumerate(boxes):
        for bj in boxes[i + 1:]:
            if bi.overlaps(bj):
                return None
    return boxes


# -- public API ---------------------------------------------------------------


def isolate_roots(f: RatPoly, precision: Fraction = DEFAULT_PRECISION) -> list[IsolatingBox]:
    """All deg(f) complex roots of square-free f in disjoint certified boxes.

    Boxes of conjugate roots are mirror images; real roots get boxes that
    straddle the axis symmetrically.
    """
    if f.is_zero:
        raise InvalidInput("cannot isolate roots of the zero polynomial")
    if f.degree > DEGREE_CAP:
        raise InvalidInput(f"degree {f.degree} exceeds the supported cap {DEGREE_CAP}")
    if f.degree == 0:
        return []
    if not is_squarefree(f):
        raise RequiresSquarefree("isolate_roots needs a square-free input")

    real_ivs = isolate_real_roots(f)
    n_pairs, rem = divmod(f.degree - len(real_ivs), 2)
    assert rem == 0, "real root count parity broken"

    upper: list[ComplexBox] = []
    if n_pairs:
        hint_sets = []
        if f.degree == 2:
            hint_sets.append(_quadratic_upper_hint(f))
        for dps in _HINT_DPS_LADDER:
            hints = _float_hints(f, dps)
            if hints is not None:
                hint_sets.append(hints)
        for hints in hint_sets:
            cands = _certify_hints(f, hints, n_pairs)
            if cands is not None:
                upper = cands
                break
        else:
            raise PrecisionExhausted(
                f"could not certify complex roots of degree-{f.degree} input")

    if upper:
        h = min(b.im.lo for b in upper) / 2
        h = dyadic_below(h, 64)
    else:
        h = Fraction(1, 4)

    boxes: list[IsolatingBox] = []
    for iv in real_ivs:
        boxes.append(IsolatingBox(poly=f, re=iv, im=Interval(-h, h), kind="real"))
    for cand in upper:
        up = IsolatingBox(poly=f, re=cand.re, im=cand.im, kind="complex")
        boxes.append(up)
        boxes.append(up.mirror())

    boxes = [b.refined_to(precision) for b in boxes]
    for i, bi in enumerate(boxes):  # paranoia: the isolation contract
        for bj in boxes[i + 1:]:
            assert not bi.overlaps(bj), "isolating boxes overlap"
    boxes.sort(key=lambda b: (b.re.lo, b.im.lo))
    return boxes


@lru_cache(maxsize=2048)
def _isolate_cached(f: RatPoly) -> tuple[IsolatingBox, ...]:
    return tuple(isolate_roots(f))


def _g_root_in_box(g_box: IsolatingBox, target: IsolatingBox) -> bool:
    """Decide whether the root isolated by g_box lies inside target.

    Sound because g divides target.poly: the g-root is one of target.poly's
    roots, and target isolates exactly one of those, strictly interior.
    """
    gb = g_box
    for _ in range(_REFINE_CAP):
        if (gb.re.lo >= target.re.lo and gb.re.hi <= target.re.hi
                and gb.im.lo >= target.im.lo and gb.im.hi <= target.im.hi):
            return True
        if not gb.overlaps(target):
            return False
        gb = gb.refine()
    raise PrecisionExhausted("root membership test did not separate")


def roots_equal(a: IsolatingBox, b: IsolatingBox) -> bool:
    """Exact equality of the algebraic numbers represented by two boxes."""
    if a.poly == b.poly and a.re == b.re and a.im == b.im:
        return True
    ra, rb = a, b
    for _ in range(6):  # cheap separation attempts first
        if not ra.overlaps(rb):
            return False
        ra, rb = ra.refine(), rb.refine()
    g = a.poly.gcd(b.poly)
    if g.degree <= 0:
        return False
    for g_box in _isolate_cached(g):
        if _g_root_in_box(g_box, a):
            return _g_root_in_box(g_box, b)
    return False
