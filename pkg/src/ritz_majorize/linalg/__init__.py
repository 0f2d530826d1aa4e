"""Dense symmetric eigen/SVD kernels (Jacobi), orthonormalization, PSD square
roots and Cholesky factors."""
from ._backend import BACKEND
from .dense import (
    cholesky,
    eigvals,
    orthonormalize,
    singular_values,
    sqrt_psd,
    svd,
    sym_eig,
)

__all__ = [
    "BACKEND",
    "cholesky",
    "eigvals",
    "orthonormalize",
    "singular_values",
    "sqrt_psd",
    "svd",
    "sym_eig",
]
