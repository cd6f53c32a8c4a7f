"""Pure-Python b-weight kernels, used when the compiled module is absent."""
import numpy as np

BACKEND = "python"


def _row_weight(row, n, b):
    try:
        start = row.index(1)
    except ValueError:
        return 0
    run = zero_windows = 0
    for k in range(1, n + 1):
        if row[(start + k) % n]:
            if run >= b:
                zero_windows += run - b + 1
            run = 0
        else:
            run += 1
    return n - zero_windows


def b_weights(mask, b):
    """b-weight of every row of a 0/1 nonzero mask."""
    mask = np.ascontiguousarray(mask, dtype=np.uint8)
    n = mask.shape[1]
    if b < 1 or b > n - 1:
        raise ValueError(f"b={b} outside [1, {n - 1}]")
    return np.array([_row_weight(row, n, b) for row in mask.tolist()], dtype=np.int64)
