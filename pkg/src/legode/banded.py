"""Banded matrix storage.

Diagonal-major layout: ``data[u + k - l, l]`` holds the entry ``(k, l)``,
where ``u`` is the upper bandwidth.  Entries outside the band are exactly
zero by construction.  The layout is column-aligned with the one used by
``scipy.linalg.solve_banded``, which keeps conversions cheap.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp


@dataclass
class BandedMatrix:
    size: int
    lower_bw: int
    upper_bw: int
    data: np.ndarray  # shape (lower_bw + upper_bw + 1, size)

    def __post_init__(self):
        if self.size < 1:
            raise ValueError(f"size must be >= 1, got {self.size}")
        if not (0 <= self.lower_bw < self.size and 0 <= self.upper_bw < self.size):
            raise ValueError("bandwidths must lie in [0, size)")
        expected = (self.lower_bw + self.upper_bw + 1, self.size)
        if self.data.shape != expected:
            raise ValueError(f"data shape {self.data.shape} != {expected}")

    @classmethod
    def zeros(cls, size: int, lower_bw: int, upper_bw: int, dtype=complex) -> "BandedMatrix":
        return cls(size, lower_bw, upper_bw,
                   np.zeros((lower_bw + upper_bw + 1, size), dtype=dtype))

    @property
    def bandwidth(self) -> int:
        return max(self.lower_bw, self.upper_bw)

    def get(self, k: int, l: int) -> complex:
        if not (0 <= k < self.size and 0 <= l < self.size):
            raise IndexError(f"index ({k}, {l}) out of range for size {self.size}")
        o = k - l
        if o > self.lower_bw or -o > self.upper_bw:
            return self.data.dtype.type(0)
        return self.data[self.upper_bw + o, l]

    def diagonal(self, offset: int = 0) -> np.ndarray:
        """Entries (l + offset, l) for valid l; empty outside the band."""
        n = self.size
        lo, hi = max(0, -offset), min(n, n - offset)
        if offset > self.lower_bw or -offset > self.upper_bw or lo >= hi:
            return np.zeros(0, dtype=self.data.dtype)
        return self.data[self.upper_bw + offset, lo:hi]

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.size, self.size), dtype=self.data.dtype)
        for o in range(-self.upper_bw, self.lower_bw + 1):
            idx = np.arange(max(0, -o), min(self.size, self.size - o))
            out[idx + o, idx] = self.data[self.upper_bw + o, idx]
        return out

    def to_sparse(self) -> sp.csr_matrix:
        rows, cols, vals = [], [], []
        for o in range(-self.upper_bw, self.lower_bw + 1):
            l = np.arange(max(0, -o), min(self.size, self.size - o))
            rows.append(l + o)
            cols.append(l)
            vals.append(self.data[self.upper_bw + o, l])
        return sp.csr_matrix(
            (np.concatenate(vals), (np.concatenate(rows), np.concatenate(cols))),
            shape=(self.size, self.size),
        )

    def matvec(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x)
        out = np.zeros(self.size, dtype=np.result_type(self.data.dtype, x.dtype))
        for o in range(-self.upper_bw, self.lower_bw + 1):
            l = np.arange(max(0, -o), min(self.size, self.size - o))
            if l.size:
                out[l + o] += self.data[self.upper_bw + o, l] * x[l]
        return out

    def row_abs_sums(self) -> np.ndarray:
        out = np.zeros(self.size)
        for o in range(-self.upper_bw, self.lower_bw + 1):
            l = np.arange(max(0, -o), min(self.size, self.size - o))
            if l.size:
                out[l + o] += np.abs(self.data[self.upper_bw + o, l])
        return out

    def col_abs_sums(self) -> np.ndarray:
        out = np.zeros(self.size)
        for o in range(-self.upper_bw, self.lower_bw + 1):
            l = np.arange(max(0, -o), min(self.size, self.size - o))
            if l.size:
                out[l] += np.abs(self.data[self.upper_bw + o, l])
        return out

    def inf_norm(self) -> float:
        return float(self.row_abs_sums().max())

    def zero_rows(self, start: int) -> "BandedMatrix":
        """Copy with rows start..size-1 set to zero (band structure kept)."""
        out = BandedMatrix(self.size, self.lower_bw, self.upper_bw, self.data.copy())
        for o in range(-self.upper_bw, self.lower_bw + 1):
            l = np.arange(max(0, -o), min(self.size, self.size - o))
            mask = l + o >= start
            out.data[self.upper_bw + o, l[mask]] = 0
        return out

    def scaled(self, a: complex) -> "BandedMatrix":
        return BandedMatrix(self.size, self.lower_bw, self.upper_bw, a * self.data)

    def solve_banded_ab(self, negate: bool = False, add_identity: bool = False) -> np.ndarray:
        """The ``ab`` array for scipy.linalg.solve_banded, optionally for I - A."""
        ab = -self.data if negate else self.data.copy()
        if add_identity:
            ab[self.upper_bw] += 1.0
        return ab
