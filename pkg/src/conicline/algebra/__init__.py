"""Exact arithmetic substrate: rationals, polynomials, certified root boxes."""

from .intervals import ComplexBox, Interval, QComplex
from .isolation import (DEFAULT_PRECISION, DEGREE_CAP, IsolatingBox,
                        certify_unique_root, isolate_real_roots, isolate_roots,
                        krawczyk_image, roots_equal)
from .poly import (RatPoly, cauchy_root_bound, count_real_roots_between,
                   is_squarefree, resultant, resultant_poly, squarefree_part,
                   sturm_chain, sturm_variations)

__all__ = [
    "ComplexBox", "Interval", "QComplex", "IsolatingBox", "RatPoly",
    "DEFAULT_PRECISION", "DEGREE_CAP",
    "cauchy_root_bound", "certify_unique_root", "count_real_roots_between",
    "is_squarefree", "isolate_real_roots", "isolate_roots", "krawczyk_image",
    "resultant", "resultant_poly", "roots_equal", "squarefree_part",
    "sturm_chain", "sturm_variations",
]
