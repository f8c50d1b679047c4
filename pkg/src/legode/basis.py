"""Banded coefficient matrices of p_d(t)*H(t-s) in the product basis.

B^(d) is (d+1)-banded; its entries combine two triple-product integrals of
neighboring column degree (see tripleprod).  The Heaviside kernel itself is
sqrt(2) * B^(0) because p_0 = 1/sqrt(2), which makes the Theta matrix
tridiagonal with T[0,0] = 1 and +-1/sqrt((2l+1)(2l+3)) off the diagonal.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import hankel, toeplitz

from . import kernels
from .banded import BandedMatrix
from .tripleprod import hankel_generator, toeplitz_generator

__all__ = [
    "basis_matrix_dense",
    "basis_matrix_structured",
    "theta_matrix",
    "basis_matrix_inf_norm_bound",
    "StructuredBasisFactors",
]


def _block_to_banded(block: np.ndarray, d: int, M: int, dtype=float) -> BandedMatrix:
    bw = min(d + 1, M - 1)
    lo = (d + 1) - bw
    data = block[lo: lo + 2 * bw + 1].astype(dtype)
    return BandedMatrix(M, bw, bw, data)


def basis_matrix_dense(d: int, M: int) -> BandedMatrix:
    """B^(d)_M in banded storage; entries outside |k-l| <= d+1 are exact zeros."""
    if d < 0 or M < 1:
        raise ValueError("need d >= 0 and M >= 1")
    return _block_to_banded(kernels.basis_block(d, M), d, M)


def theta_matrix(M: int) -> BandedMatrix:
    """Coefficient matrix of the Heaviside kernel: sqrt(2) * B^(0)_M, tridiagonal."""
    if M < 1:
        raise ValueError("M must be >= 1")
    return _block_to_banded(np.sqrt(2.0) * kernels.basis_block(0, M), 0, M)


def basis_matrix_inf_norm_bound(d: int) -> float:
    """Proven bound ||B^(d)||_inf <= 3d + 2 (loose; observed norms are O(1))."""
    if d < 0:
        raise ValueError("d must be >= 0")
    return 3.0 * d + 2.0


@dataclass(frozen=True)
class StructuredBasisFactors:
    """O(M) factor representation of B^(d)_M.

    The triple-product matrix [F(d, b, c)] over b, c = 0..M is
    sqrt(2d+1) * C o H o T with C[b,c] = sqrt(2b+1)sqrt(2c+1), H Hankel in
    b+c (generators ``c_hankel``/``r_hankel``), T symmetric Toeplitz in
    |b-c| (first column ``c_toeplitz``).  Dropping the last row of H o T
    and applying the difference operator Z (integration of the column-index
    polynomial) yields

        B^(d)_M = sqrt(2d+1) * (Ctilde o ((H o T)[:-1, :] @ Z)),
        Ctilde[k, l] = sqrt(2k+1)/sqrt(2l+1).

    Generator vectors are stored at full length M+1 (the account that gives
    the 3(N+1)M + M^2 aggregate storage for degrees 0..N plus the shared
    scaling matrix); the parity-compressed nonzeros are available via
    ``packed``.
    """
    d: int
    M: int
    c_hankel: np.ndarray    # first column of H_{M+1}: h(d, b) pattern
    r_hankel: np.ndarray    # last row of H_{M+1}: h(d, M + c) pattern
    c_toeplitz: np.ndarray  # first column of T_{M+1}: t(d, |b-c|) pattern

    @property
    def logical_count(self) -> int:
        """Stored numbers under the full-length generator accounting."""
        return self.c_hankel.size + self.r_hankel.size + self.c_toeplitz.size

    def packed(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Nonzero generator entries only (every other entry by parity)."""
        return (self.c_hankel[self.c_hankel != 0],
                self.r_hankel[self.r_hankel != 0],
                self.c_toeplitz[self.c_toeplitz != 0])

    @staticmethod
    def scaling_entry(k: int, l: int) -> float:
        return np.sqrt((2 * k + 1) / (2 * l + 1))

    @staticmethod
    def difference_operator(M: int) -> np.ndarray:
        """Z of shape (M+1, M): +1 on the subdiagonal and at (0, 0), -1 on
        the superdiagonal."""
        Z = np.zeros((M + 1, M))
        idx = np.arange(M)
        Z[idx + 1, idx] = 1.0
        Z[idx[:-1], idx[:-1] + 1] = -1.0
        Z[0, 0] = 1.0
        return Z

    def materialize(self) -> np.ndarray:
        d, M = self.d, self.M
        H = hankel(self.c_hankel, self.r_hankel)
        T = toeplitz(self.c_toeplitz)
        G = (H * T)[:M, :]
        Z = self.difference_operator(M)
        k = np.arange(M)
        Ct = np.sqrt(2.0 * k[:, None] + 1) / np.sqrt(2.0 * k[None, :] + 1)
        return np.sqrt(2.0 * d + 1) * Ct * (G @ Z)


def basis_matrix_structured(d: int, M: int) -> StructuredBasisFactors:
    """Hankel/Toeplitz generator factorization of B^(d)_M."""
    if d < 0 or M < 1:
        raise ValueError("need d >= 0 and M >= 1")
    hv = hankel_generator(d, 2 * M + d + 2).astype(float)
    tv = toeplitz_generator(d).astype(float)
    idx = np.arange(M + 1)
    c_h = np.zeros(M + 1)
    ok = (idx >= d) & ((idx + d) % 2 == 0)
    c_h[ok] = hv[(idx[ok] - d) // 2]
    r_h = np.zeros(M + 1)
    g = M + idx
    ok = (g >= d) & ((g + d) % 2 == 0)
    r_h[ok] = hv[(g[ok] - d) // 2]
    c_t = np.zeros(M + 1)
    ok = (idx <= d) & ((idx + d) % 2 == 0)
    c_t[ok] = tv[(d - idx[ok]) // 2]
    return StructuredBasisFactors(d, M, c_h, r_h, c_t)
