# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: factorwise DFT and cyclic convolution.

Call-compatible with `_kernels_py`; selected at import by `_backend` when
the extension built successfully.
"""

import numpy as np


def dft_factorwise(values, orders, tw, tw_off, int sign):
    """Unnormalized factorwise transform, one cyclic factor at a time."""
    cdef double complex[::1] buf = np.array(values, dtype=np.complex128)
    cdef double complex[::1] out = np.empty_like(np.asarray(buf))
    cdef double complex[::1] twv = np.ascontiguousarray(tw, dtype=np.complex128)
    cdef long[::1] off = np.ascontiguousarray(tw_off, dtype=np.int64)
    cdef long[::1] ords = np.ascontiguousarray(orders, dtype=np.int64)
    cdef Py_ssize_t nfac = ords.shape[0]
    cdef Py_ssize_t n_total = buf.shape[0]
    cdef Py_ssize_t j, n, post, pre, p, q, a, c, base, o
    cdef double complex acc
    cdef double complex[::1] tmp

    post = n_total
    for j in range(nfac):
        n = ords[j]
        post //= n
        pre = n_total // (n * post)
        o = off[j]
        for p in range(pre):
            base = p * n * post
            for q in range(post):
                for a in range(n):
                    acc = 0
                    for c in range(n):
                        acc = acc + buf[base + c * post + q] * twv[o + (a * c) % n]
                    out[base + a * post + q] = acc
        tmp = buf
        buf = out
        out = tmp
    return np.asarray(buf)


def cyclic_convolve(f, g, diff_table):
    """Unnormalized convolution out[t] = sum_s f[s] * g[diff_table[t, s]]."""
    cdef const double complex[::1] fv = np.ascontiguousarray(f, dtype=np.complex128)
    cdef const double complex[::1] gv = np.ascontiguousarray(g, dtype=np.complex128)
    cdef const long[:, ::1] dt = np.ascontiguousarray(diff_table, dtype=np.int64)
    cdef Py_ssize_t n = fv.shape[0]
    cdef Py_ssize_t t, s
    cdef double complex acc
    out_arr = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] out = out_arr
    for t in range(n):
        acc = 0
        for s in range(n):
            acc = acc + fv[s] * gv[dt[t, s]]
        out[t] = acc
    return out_arr
