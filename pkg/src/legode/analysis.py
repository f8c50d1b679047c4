"""Solvability and truncation diagnostics.

The central objects are the field of values W(F) = {v* F v : |v| = 1} and
the off-band decay of (I - F)^-1.  When W(F) stays in a disk of radius
r < 1 the truncated resolvent exists and its entries decay exponentially
with the scaled band distance |k - l|/(N+1); the measured decay profile
turns this into an effective bandwidth K, which in turn predicts how many
leading solution entries the finite section computes accurately.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
from scipy.linalg import solve_banded
from scipy.sparse.linalg import ArpackNoConvergence, eigsh

from .banded import BandedMatrix
from .coeff import CoeffMatrix, assemble
from .errors import SingularSystemError
from .legendre import EPS, EvalGrid, LegendreSeries, eval_series

__all__ = [
    "DecayProfile",
    "numerical_radius_bound",
    "numerical_radius_estimate",
    "fov_extent",
    "resolvent_decay_profile",
    "trailing_block_bandwidth",
    "predicted_accurate_entries",
    "err_f",
    "err_c",
    "conjecture_check",
    "COEFF_SUM_THRESHOLD",
]

#: Conjectured l1 budget on the expansion coefficients under which the
#: field of values stays inside the disk of radius 0.87 (advisory only;
#: experiments violate it by orders of magnitude and still solve fine).
COEFF_SUM_THRESHOLD = 1.1494


def _as_banded(m: CoeffMatrix | BandedMatrix) -> BandedMatrix:
    return m.matrix if isinstance(m, CoeffMatrix) else m


def numerical_radius_bound(m: CoeffMatrix | BandedMatrix) -> float:
    """Row/column bound: nu(A) <= max_k sum_l (|a_kl| + |a_lk|) / 2."""
    A = _as_banded(m)
    return float(0.5 * (A.row_abs_sums() + A.col_abs_sums()).max())


def _hermitian_top(H: sp.spmatrix, M: int) -> float:
    if M <= 400:
        return float(np.linalg.eigvalsh(H.toarray())[-1])
    for ncv in (None, min(M - 1, 128)):
        try:
            return float(eigsh(H, k=1, which="LA", return_eigenvectors=False,
                               tol=1e-10, ncv=ncv)[0])
        except ArpackNoConvergence:
            continue
    return float(np.linalg.eigvalsh(H.toarray())[-1])


def fov_extent(m: CoeffMatrix | BandedMatrix, angle: float = 0.0) -> float:
    """Extent of the field of values in direction ``angle``: the largest
    eigenvalue of the Hermitian part of e^{-i angle} F.

    At angle 0 this is the rightmost point of W(F), the solvability
    diagnostic quoted by the reference tables for these problems.
    """
    A = _as_banded(m).to_sparse()
    ph = np.exp(-1j * angle)
    H = (ph * A + np.conj(ph) * A.conj().T) * 0.5
    return _hermitian_top(H.tocsr(), A.shape[0])


def numerical_radius_estimate(m: CoeffMatrix | BandedMatrix,
                              theta_count: int = 64) -> float:
    """Lower bound on nu(A) = sup |W(A)| from a grid of support-function
    evaluations, with one refinement pass around the maximizer."""
    if theta_count < 8:
        raise ValueError("theta_count must be >= 8")
    A = _as_banded(m).to_sparse()
    M = A.shape[0]
    AH = A.conj().T.tocsr()

    def extent(theta: float) -> float:
        ph = np.exp(-1j * theta)
        return _hermitian_top(((ph * A + np.conj(ph) * AH) * 0.5).tocsr(), M)

    thetas = np.linspace(0.0, 2.0 * np.pi, theta_count, endpoint=False)
    vals = [extent(t) for t in thetas]
    i = int(np.argmax(vals))
    best = vals[i]
    step = 2.0 * np.pi / theta_count
    for t in np.linspace(thetas[i] - step, thetas[i] + step, 9):
        best = max(best, extent(t))
    return float(best)


@dataclass(frozen=True)
class DecayProfile:
    """Per-offset maxima of |(I - F)^-1| and the fitted exponential decay.

    ``mu`` is the fitted decay factor per unit of scaled band distance
    |k - l| / (N + 1); ``C`` is shifted so C * mu^d bounds every measured
    point.  ``K`` is the numerical bandwidth: the largest offset whose
    maximum exceeds delta_tol * sqrt(M) * max|entry| (the sqrt(M) factor
    keeps the threshold above the accumulated rounding of the solves).
    """
    offsets_max: np.ndarray
    mu: float
    C: float
    K: int
    threshold: float
    N: int

    def bound(self, k: int, l: int) -> float:
        return self.C * self.mu ** (abs(k - l) / (self.N + 1))


def resolvent_decay_profile(cm: CoeffMatrix, delta_tol: float = EPS,
                            max_columns: int = 1024) -> DecayProfile:
    """Measure the off-band decay of (I - F_M)^-1 by banded solves.

    All M columns are solved for M <= max_columns; beyond that a strided
    subset (plus both boundary blocks) estimates the per-offset maxima.
    """
    A = cm.matrix
    M = cm.M
    ab = A.solve_banded_ab(negate=True, add_identity=True)
    if M <= max_columns:
        cols = np.arange(M)
    else:
        stride = int(np.ceil(M / (max_columns - 128)))
        cols = np.unique(np.concatenate([np.arange(0, M, stride),
                                         np.arange(64), np.arange(M - 64, M)]))
    rhs = np.zeros((M, cols.size), dtype=complex)
    rhs[cols, np.arange(cols.size)] = 1.0
    try:
        inv_cols = solve_banded((A.lower_bw, A.upper_bw), ab, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularSystemError(f"resolvent factorization failed: {exc}") from exc
    absinv = np.abs(inv_cols)
    rows = np.arange(M)
    dist = np.abs(rows[:, None] - cols[None, :])
    prof = np.zeros(M)
    np.maximum.at(prof, dist.ravel(), absinv.ravel())

    top = prof.max()
    threshold = delta_tol * np.sqrt(M) * max(1.0, top)
    above = np.nonzero(prof > threshold)[0]
    K = int(above[-1]) if above.size else 0

    floor = max(threshold, top * 1e-300)
    fit_idx = np.nonzero(prof > floor)[0]
    if fit_idx.size >= 2 and top > 0:
        slope, _ = np.polyfit(fit_idx, np.log(prof[fit_idx]), 1)
        mu = float(np.exp(slope * (cm.N + 1)))
        d_scaled = fit_idx / (cm.N + 1)
        C = float(np.max(prof[fit_idx] * mu ** (-d_scaled)))
    else:
        mu, C = 0.0, top
    return DecayProfile(prof, mu, C, K, threshold, cm.N)


def trailing_block_bandwidth(series: LegendreSeries, M: int,
                             delta_tol: float = EPS, depth: int | None = None) -> int:
    """Numerical bandwidth of the leading M x M block of D^-1, where D is
    the trailing block of (I - F) after removing the first M rows/columns."""
    if depth is None:
        depth = 2 * M
    big = assemble(series, M + depth)
    Fd = big.matrix.to_dense()
    D = np.eye(depth, dtype=complex) - Fd[M:, M:]
    lead = np.linalg.inv(D)[:M, :M]
    prof = np.zeros(M)
    rows = np.arange(M)
    dist = np.abs(rows[:, None] - rows[None, :])
    np.maximum.at(prof, dist.ravel(), np.abs(lead).ravel())
    threshold = delta_tol * np.sqrt(M) * max(1.0, prof.max())
    above = np.nonzero(prof > threshold)[0]
    return int(above[-1]) if above.size else 0


def predicted_accurate_entries(M: int, N: int, K: int) -> int:
    """Guaranteed count of accurately computed leading solution entries:
    M - N - K - 2, clipped at zero."""
    return max(0, M - N - K - 2)


def err_f(approx, exact, M: int) -> float:
    """Relative max-norm error against the exact solution on exactly 10*M
    equidistant nodes in [-1, 1]."""
    coeffs = approx.coeffs if isinstance(approx, LegendreSeries) else np.asarray(approx)
    ts = np.linspace(-1.0, 1.0, 10 * M)
    grid = EvalGrid(ts, np.asarray(exact(ts), dtype=complex))
    uh = eval_series(LegendreSeries(coeffs), grid.nodes)
    return float(np.abs(grid.values - uh).max() / np.abs(grid.values).max())


def err_c(approx_coeffs, exact_coeffs) -> np.ndarray:
    """Elementwise |c - c_hat| / max|c|, padding the shorter vector."""
    a = np.asarray(approx_coeffs, dtype=complex)
    e = np.asarray(exact_coeffs, dtype=complex)
    n = max(a.size, e.size)
    ap = np.zeros(n, dtype=complex)
    ep = np.zeros(n, dtype=complex)
    ap[: a.size] = a
    ep[: e.size] = e
    scale = np.abs(ep).max()
    if scale == 0:
        raise ValueError("exact coefficients are all zero")
    return np.abs(ap - ep) / scale


def conjecture_check(series: LegendreSeries) -> tuple[float, bool]:
    """l1 norm of the expansion and whether it satisfies the (pessimistic)
    disk-inclusion budget COEFF_SUM_THRESHOLD."""
    s = series.l1()
    return s, s <= COEFF_SUM_THRESHOLD
