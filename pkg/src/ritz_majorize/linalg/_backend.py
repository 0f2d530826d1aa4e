"""Pick the Jacobi kernel implementation at import time.

Set ``RITZ_MAJORIZE_PURE=1`` to force the interpreted fallback.
"""
import os

from . import _fallback

BACKEND = "python"
jacobi_eigh = _fallback.jacobi_eigh
jacobi_svd = _fallback.jacobi_svd

if not os.environ.get("RITZ_MAJORIZE_PURE"):
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        jacobi_eigh = _kernels.jacobi_eigh
        jacobi_svd = _kernels.jacobi_svd
