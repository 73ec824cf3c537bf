"""Exact arithmetic kernel: rationals, polynomials, determinants, root isolation."""
from .bipoly import BiPoly
from .complexroots import complex_roots
from .matrix import DenseMatrix, bareiss_det, cofactor_det
from .poly import InexactDivisionError, UniPoly, exact_quotient
from .rational import BigRat, as_rational, parse_rational, rational_str, to_float
from .realroots import IsolatedRoot, isolate_real_roots, sturm_count, sturm_sequence

__all__ = [
    "BigRat", "BiPoly", "DenseMatrix", "InexactDivisionError", "IsolatedRoot", "UniPoly",
    "as_rational", "bareiss_det", "cofactor_det", "complex_roots", "exact_quotient",
    "isolate_real_roots", "parse_rational", "rational_str", "sturm_count", "sturm_sequence",
    "to_float",
]
