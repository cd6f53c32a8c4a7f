# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled b-weight kernels.  Keep in step with ``_kernels_py``."""
import numpy as np

BACKEND = "cython"


cdef Py_ssize_t _row_weight(const unsigned char[:, ::1] mask, Py_ssize_t r,
                            Py_ssize_t n, Py_ssize_t b) nogil:
    cdef Py_ssize_t start = -1, i, k, run = 0, zero_windows = 0
    for i in range(n):
        if mask[r, i]:
            start = i
            break
    if start < 0:
        return 0
    # walk the cycle from a nonzero position so every zero run is closed
    for k in range(1, n + 1):
        i = start + k
        if i >= n:
            i -= n
        if mask[r, i]:
            if run >= b:
                zero_windows += run - b + 1
            run = 0
        else:
            run += 1
    return n - zero_windows


def b_weights(const unsigned char[:, ::1] mask, Py_ssize_t b):
    """b-weight of every row of a 0/1 nonzero mask."""
    cdef Py_ssize_t rows = mask.shape[0], n = mask.shape[1], r
    if b < 1 or b > n - 1:
        raise ValueError(f"b={b} outside [1, {n - 1}]")
    out = np.empty(rows, dtype=np.int64)
    cdef long long[::1] view = out
    with nogil:
        for r in range(rows):
            view[r] = _row_weight(mask, r, n, b)
    return out
