"""Pure-numpy kernels: banded blocks of the Legendre basis matrices and
their weighted accumulation.  Reference implementation for the compiled
extension; selected at import time by :mod:`legode.kernels`."""
from __future__ import annotations

import numpy as np

from .tripleprod import hankel_generator, toeplitz_generator

_LD = np.longdouble

BACKEND = "python"


def basis_block(d: int, M: int) -> np.ndarray:
    """Band of the degree-d basis matrix, column-aligned.

    Returns W of shape (2d+3, M) with W[o + d + 1, l] = entry (l + o, l).
    Entry formula (uniform in the first-column special case):

        b(k, l) = sqrt(2d+1) * sqrt(2k+1)/sqrt(2l+1) * (HT(k, l+1) - HT(k, l-1))

    where HT(k, c) = h(d, k+c) t(d, |k-c|) under the selection rules and
    HT(k, -1) is defined as -HT(k, 0).
    """
    hv = hankel_generator(d, 2 * M + d + 2)
    tv = toeplitz_generator(d)
    offs = np.arange(-(d + 1), d + 2)
    ll = np.arange(M)
    k = offs[:, None] + ll[None, :]
    valid_k = (k >= 0) & (k < M)

    def ht(c_signed):
        c = np.where(c_signed < 0, 0, c_signed)
        gam = k + c
        alp = np.abs(k - c)
        ok = ((gam + d) % 2 == 0) & (gam >= d) & (alp <= d) & valid_k
        gidx = np.where(ok, (gam - d) // 2, 0)
        aidx = np.where(ok, (d - alp) // 2, 0)
        val = np.where(ok, hv[gidx] * tv[aidx], _LD(0))
        return np.where(c_signed < 0, -val, val)

    c_plus = np.broadcast_to(ll + 1, k.shape)
    c_minus = np.broadcast_to(ll - 1, k.shape)
    W = ht(c_plus) - ht(c_minus)
    kk = np.where(valid_k, k, 0)
    W = W * np.sqrt(_LD(2 * d + 1)) \
        * np.sqrt(2 * kk.astype(_LD) + 1) / np.sqrt(2 * ll.astype(_LD) + 1)
    return np.where(valid_k, W, _LD(0)).astype(float)


def assemble_band(alpha: np.ndarray, M: int) -> np.ndarray:
    """Band of sum_d alpha[d] * B^(d)_M.

    Returns shape (2N+3, M) complex with row o + N + 1 holding the
    diagonal of offset o, N = len(alpha) - 1.
    """
    alpha = np.asarray(alpha, dtype=complex)
    N = alpha.size - 1
    band = np.zeros((2 * N + 3, M), dtype=complex)
    for d in range(N + 1):
        if alpha[d] == 0:
            continue
        W = basis_block(d, M)
        band[N - d: N + d + 3] += alpha[d] * W
    return band
