"""Pure numpy versions of the colour-space hot loops.

Used when the compiled ``_kernels`` extension is unavailable.
"""

import numpy as np


def star_product(table, xq, xe, yq, ye):
    """Sum ``x_i * y_j`` (dual-number product) into pole ``table[i, j]``."""
    xe = np.asarray(xe, dtype=float)
    ye = np.asarray(ye, dtype=float)
    if xe.shape[0] != 3 or ye.shape != xe.shape:
        raise ValueError("coefficient arrays must have shape (3, n) on one grid")
    out_q = np.zeros(3)
    out_e = np.zeros_like(xe)
    for i in range(3):
        for j in range(3):
            k = table[i, j]
            out_q[k] += xq[i] * yq[j]
            out_e[k] += xq[i] * ye[j] + yq[j] * xe[i]
    return out_q, out_e


def canonical_form(q, e):
    """Shift real parts so the smallest is 0 and epsilon parts so their mean is 0."""
    q = np.asarray(q, dtype=float)
    e = np.asarray(e, dtype=float)
    if e.shape[0] != 3:
        raise ValueError("coefficient arrays must have shape (3, n)")
    return q - q.min(), e - e.mean(axis=0)
