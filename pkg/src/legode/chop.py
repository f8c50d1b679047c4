"""Truncation index selection for coefficient series.

Combines two rules on the normalized tail envelope (running maximum of
trailing magnitudes divided by the largest magnitude):

* a direct threshold: the first index past which the envelope stays at or
  below ``tol``;
* the plateau rule of Aurentz and Trefethen (the standard chopping
  algorithm of Chebyshev-approximation software), which detects where decay
  stalls into a rounding plateau and places the cut at the start of the
  plateau, even when that plateau sits slightly above ``tol``.

The smaller of the two candidate cuts wins.  If neither rule fires the full
length is returned, signalling an unresolved series.
"""
from __future__ import annotations

import numpy as np

__all__ = ["chop_series", "tail_envelope"]


def tail_envelope(coeffs: np.ndarray) -> np.ndarray:
    """Non-increasing envelope env[j] = max(|c_j|, |c_{j+1}|, ...) / max|c|."""
    b = np.abs(np.asarray(coeffs))
    m = b.max()
    if m == 0:
        return np.zeros(b.size)
    return np.maximum.accumulate(b[::-1])[::-1] / m


def _plateau_cut(envelope: np.ndarray, tol: float) -> int | None:
    """Aurentz-Trefethen plateau detection on a precomputed envelope.

    Returns the number of coefficients to keep, or None when no plateau is
    found (series not resolved).  Indices follow the original 1-based
    formulation; the return value is a 0-based length.
    """
    n = envelope.size
    if n < 17:
        return None
    plateau_point = None
    j2 = 0
    for j in range(2, n + 1):
        j2 = int(round(1.25 * j + 5))
        if j2 > n:
            return None
        e1 = envelope[j - 1]
        e2 = envelope[j2 - 1]
        if e1 == 0:
            plateau = True
        else:
            r = 3.0 * (1.0 - np.log(e1) / np.log(tol))
            plateau = (e2 / e1) > r
        if plateau:
            plateau_point = j - 1
            break
    if plateau_point is None:
        return None
    env = envelope.copy()
    if env[plateau_point - 1] == 0:
        return plateau_point
    # Tilted-line adjustment: slide the cut to the minimum of the envelope
    # on a log scale biased toward shorter representations.
    j3 = int(np.sum(env >= tol ** (7.0 / 6.0)))
    if j3 < j2:
        j2 = j3 + 1
        env[j2 - 1] = tol ** (7.0 / 6.0)
    cc = np.log10(env[:j2]) + np.linspace(0.0, (-1.0 / 3.0) * np.log10(tol), j2)
    d = int(np.argmin(cc)) + 1
    return max(d - 1, 1)


def chop_series(coeffs: np.ndarray, tol: float) -> int:
    """Smallest k such that |coefficients| from k on stay below tol (relative),
    refined by plateau detection; len(coeffs) when no cut is found."""
    coeffs = np.asarray(coeffs)
    if coeffs.size == 0:
        raise ValueError("empty coefficient vector")
    if not (0 < tol < 1):
        raise ValueError(f"tol must be in (0, 1), got {tol}")
    env = tail_envelope(coeffs)
    if env[0] == 0:
        return 1
    candidates = []
    below = np.nonzero(env <= tol)[0]
    if below.size:
        candidates.append(int(below[0]))
    plateau = _plateau_cut(env, tol)
    if plateau is not None:
        candidates.append(plateau)
    if not candidates:
        return coeffs.size
    return max(1, min(candidates))
