# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the colour-space hot loops.

Same signatures and results as ``_kernels_py``; arrays are float64 with the
pole axis first (R, G, B).
"""

import numpy as np


def star_product(const Py_ssize_t[:, ::1] table,
                 const double[::1] xq, const double[:, ::1] xe,
                 const double[::1] yq, const double[:, ::1] ye):
    cdef Py_ssize_t n = xe.shape[1]
    cdef Py_ssize_t i, j, k, s
    cdef double a, b
    out_q = np.zeros(3, dtype=np.float64)
    out_e = np.zeros((3, n), dtype=np.float64)
    cdef double[::1] oq = out_q
    cdef double[:, ::1] oe = out_e
    if xe.shape[0] != 3 or ye.shape[0] != 3 or ye.shape[1] != n:
        raise ValueError("coefficient arrays must have shape (3, n) on one grid")
    for i in range(3):
        a = xq[i]
        for j in range(3):
            b = yq[j]
            k = table[i, j]
            oq[k] += a * b
            for s in range(n):
                oe[k, s] += a * ye[j, s] + b * xe[i, s]
    return out_q, out_e


def canonical_form(const double[::1] q, const double[:, ::1] e):
    cdef Py_ssize_t n = e.shape[1]
    cdef Py_ssize_t s, k
    cdef double lo = q[0]
    cdef double m
    out_q = np.empty(3, dtype=np.float64)
    out_e = np.empty((3, n), dtype=np.float64)
    cdef double[::1] oq = out_q
    cdef double[:, ::1] oe = out_e
    if e.shape[0] != 3:
        raise ValueError("coefficient arrays must have shape (3, n)")
    for k in range(1, 3):
        if q[k] < lo:
            lo = q[k]
    for k in range(3):
        oq[k] = q[k] - lo
    for s in range(n):
        m = (e[0, s] + e[1, s] + e[2, s]) / 3.0
        for k in range(3):
            oe[k, s] = e[k, s] - m
    return out_q, out_e
