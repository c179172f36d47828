"""Exact scalar rings and dense matrix algebra."""
from .matrix import (
    ExactMatrix,
    SingularMatrixError,
    berkowitz,
    charpoly_exact,
    charpoly_monic,
    det_exact,
    faddeev_leverrier,
    inverse_exact,
    mat_mul,
    principal_minor_sums,
    rank_exact,
    ring_of,
    tensor_product,
)
from .poly import NotDivisibleError, Poly, RingMismatchError, bipoly, laurent, var

__all__ = [
    "ExactMatrix",
    "SingularMatrixError",
    "NotDivisibleError",
    "RingMismatchError",
    "Poly",
    "berkowitz",
    "bipoly",
    "charpoly_exact",
    "charpoly_monic",
    "det_exact",
    "faddeev_leverrier",
    "inverse_exact",
    "laurent",
    "mat_mul",
    "principal_minor_sums",
    "rank_exact",
    "ring_of",
    "tensor_product",
    "var",
]
