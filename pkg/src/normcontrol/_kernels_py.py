"""Pure-numpy implementations of the hot kernels.

Same call signatures as the compiled module `_kernels_cy`; whichever is
available is selected at import time by `_backend`.
"""

import numpy as np


def dft_factorwise(values, orders, tw, tw_off, sign):
    """Unnormalized factorwise transform out[a] = sum_t values[t] * w(a, t).

    w(a, t) = prod_j tw_j[(a_j * t_j) mod n_j], applied one cyclic factor at
    a time (an n_j x n_j matrix along each axis), O(|G| * sum n_j) total.
    ``tw``/``tw_off`` hold the concatenated per-factor root tables for the
    requested sign (sign is implicit in the tables; the argument keeps the
    two backends call-compatible).
    """
    n_total = values.shape[0]
    arr = np.asarray(values, dtype=np.complex128)
    post = n_total
    for j, n in enumerate(orders):
        post //= int(n)
        pre = n_total // (int(n) * post)
        table = tw[tw_off[j]: tw_off[j + 1]]
        idx = np.outer(np.arange(n), np.arange(n)) % int(n)
        mat = table[idx]
        arr = np.einsum("ac,pcq->paq", mat, arr.reshape(pre, int(n), post))
    return np.ascontiguousarray(arr.reshape(n_total))


def cyclic_convolve(f, g, diff_table):
    """Unnormalized group convolution out[t] = sum_s f[s] * g[t - s].

    ``diff_table[t, s]`` is the flat index of t - s; the caller divides by
    |G| for the normalized Haar convolution.
    """
    g = np.asarray(g, dtype=np.complex128)
    f = np.asarray(f, dtype=np.complex128)
    return g[diff_table] @ f
