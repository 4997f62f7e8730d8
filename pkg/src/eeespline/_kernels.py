"""Select the elimination kernel at import time.

Set ``EEESPLINE_PURE_PYTHON=1`` to force the pure-Python fallback.
"""
import os

from . import _kernels_py

if os.environ.get("EEESPLINE_PURE_PYTHON"):
    int_gauss_jordan = _kernels_py.int_gauss_jordan
    BACKEND = "python"
else:
    try:
        from ._ckernels import int_gauss_jordan
        BACKEND = "cython"
    except ImportError:
        int_gauss_jordan = _kernels_py.int_gauss_jordan
        BACKEND = "python"


def available_kernels():
    """Return ``{name: function}`` for every kernel importable in this environment."""
    kernels = {"python": _kernels_py.int_gauss_jordan}
    try:
        from ._ckernels import int_gauss_jordan as compiled
    except ImportError:
        pass
    else:
        kernels["cython"] = compiled
    return kernels
