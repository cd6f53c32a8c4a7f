"""Selects the compiled kernels when built, else the pure-Python ones.

Set ``BSYMBOL_PURE_PYTHON=1`` to force the fallback.
"""
import os

import numpy as np

from . import _kernels_py

if os.environ.get("BSYMBOL_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND


def b_weights(mask, b: int, backend=None) -> np.ndarray:
    """b-weights of the rows of a nonzero mask (``rows x n``, any int dtype)."""
    impl = _impl if backend is None else backend
    mask = np.ascontiguousarray(np.asarray(mask) != 0, dtype=np.uint8)
    return impl.b_weights(mask, int(b))


def available_backends():
    out = [_kernels_py]
    try:
        from . import _kernels
        out.append(_kernels)
    except ImportError:
        pass
    return out
