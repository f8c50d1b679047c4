"""Assembly of coefficient matrices F = sum_d alpha_d B^(d)_M.

F is numerically banded: the degree-d term is (d+1)-banded and the
expansion coefficients decay geometrically, so entries beyond offset N+1
are negligible relative to sum_{d>N} |alpha_d| (3d+2).  The underline
variants zero trailing rows, which suppresses the spurious tail growth in
the computed solution coefficients.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, replace

import numpy as np

from . import kernels
from .banded import BandedMatrix
from .legendre import EPS, LegendreSeries

__all__ = [
    "CoeffMatrix",
    "assemble",
    "bandwidth_for_tolerance",
    "underline_truncate",
    "underline_theta",
    "truncation_tail_bound",
]


@dataclass(frozen=True)
class CoeffMatrix:
    matrix: BandedMatrix
    series: LegendreSeries
    N: int
    M: int
    underlined: bool = False

    def inf_norm(self) -> float:
        return self.matrix.inf_norm()


def assemble(series: LegendreSeries, M: int) -> CoeffMatrix:
    """Banded F_M from the expansion of the coefficient function."""
    if M < 1:
        raise ValueError("M must be >= 1")
    N = series.degree
    if M <= N + 2:
        warnings.warn(f"M={M} <= N+2={N + 2}: truncation dominates the band",
                      stacklevel=2)
    band = kernels.assemble_band(series.coeffs, M)
    bw = min(N + 1, M - 1)
    lo = (N + 1) - bw
    data = band[lo: lo + 2 * bw + 1]
    if not np.all(np.isfinite(data)):
        raise ArithmeticError("non-finite entries in assembled matrix")
    return CoeffMatrix(BandedMatrix(M, bw, bw, data), series, N, M)


def bandwidth_for_tolerance(series: LegendreSeries, delta_tol: float | None = None) -> int:
    """Smallest N with sum_{d>N} |alpha_d| (3d+2) <= delta_tol.

    The sum runs over the stored coefficients; mass beyond the stored
    series is estimated from the fitted geometric decay.  The result is
    capped at the stored degree (an expansion chopped at machine tolerance
    already is the tightest available representation).

    Default tolerance: machine epsilon times the series l1 norm.
    """
    if not np.any(series.coeffs):
        return 0
    if delta_tol is None:
        delta_tol = EPS * series.l1()
    if delta_tol <= 0:
        raise ValueError("delta_tol must be > 0")
    b = np.abs(series.coeffs)
    L = b.size
    weights = b * (3.0 * np.arange(L) + 2.0)
    stored_tail = np.concatenate([np.cumsum(weights[::-1])[::-1][1:], [0.0]])
    C, rho = series.decay_fit()
    if np.isinf(rho):
        beyond = 0.0
    elif rho <= 1:
        beyond = np.inf
    else:
        beyond, d = 0.0, L
        while True:
            term = C * rho ** (-(d + 1)) * (3 * d + 2)
            beyond += term
            d += 1
            if term <= beyond * 1e-16 or d > L + 100000:
                break
    total_tail = stored_tail + beyond
    ok = np.nonzero(total_tail <= delta_tol)[0]
    return int(ok[0]) if ok.size else L - 1


def underline_truncate(cm: CoeffMatrix) -> CoeffMatrix:
    """Zero the last N+1 rows of F_M (rows M-N-1 .. M-1)."""
    if cm.M <= cm.N + 1:
        raise ValueError(f"M={cm.M} must exceed N+1={cm.N + 1} to underline")
    return replace(cm, matrix=cm.matrix.zero_rows(cm.M - (cm.N + 1)), underlined=True)


def underline_theta(T: BandedMatrix) -> BandedMatrix:
    """Zero the last row of the Heaviside kernel matrix."""
    return T.zero_rows(T.size - 1)


def truncation_tail_bound(series: LegendreSeries, N: int) -> float:
    """sum_{d>N} |alpha_d| (3d+2) over stored coefficients: the max-norm
    error bound for assembling with expansion order N instead of the full
    stored series."""
    b = np.abs(series.coeffs)
    d = np.arange(b.size)
    return float((b[d > N] * (3 * d[d > N] + 2)).sum())
