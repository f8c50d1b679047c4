"""Orthonormal Legendre basis: evaluation, expansion, series handling.

The basis is normalized so that the polynomials have unit L2 norm on
[-1, 1]; p_0 = 1/sqrt(2) and |p_k(t)| <= sqrt((2k+1)/2) on the interval.
Quadrature accumulations run in extended precision (80-bit long double
where available) so that expansion coefficients resolve down to a few
1e-17 absolute, well below the double-precision rounding of the input
function itself.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import numpy as np

from .chop import _plateau_cut, chop_series, tail_envelope
from .errors import ConvergenceError

__all__ = [
    "LegendreSeries",
    "EvalGrid",
    "eval_legendre",
    "phi_vector",
    "expand_function",
    "eval_series",
    "chop_series",
    "gauss_legendre_rule",
    "legendre_table",
]

EPS = float(np.finfo(float).eps)
_LD = np.longdouble
_DOMAIN_SLACK = 1e-12


def _check_domain(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if np.any(np.abs(t) > 1.0 + _DOMAIN_SLACK):
        raise ValueError("evaluation point outside [-1, 1]")
    return t


def legendre_table(num: int, t: np.ndarray, dtype=float) -> np.ndarray:
    """Table P[k, i] = p_k(t_i) for k < num, by the three-term recurrence."""
    t = np.asarray(t, dtype=dtype)
    P = np.empty((num, t.size), dtype=dtype)
    P[0] = 1.0
    if num > 1:
        P[1] = t
    for k in range(2, num):
        P[k] = ((2 * k - 1) * t * P[k - 1] - (k - 1) * P[k - 2]) / k
    scale = np.sqrt((2 * np.arange(num, dtype=dtype) + 1) / 2)
    return P * scale[:, None]


def eval_legendre(k: int, t) -> float | np.ndarray:
    """p_k(t): classical recurrence scaled by sqrt((2k+1)/2)."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    t = _check_domain(t)
    scalar = t.ndim == 0
    vals = legendre_table(k + 1, np.atleast_1d(t))[k]
    return float(vals[0]) if scalar and np.isrealobj(vals) else (vals[0] if scalar else vals)


def phi_vector(M: int, t: float) -> np.ndarray:
    """[p_k(t)]_{k=0}^{M-1}; at t = -1 entry k is (-1)^k sqrt((2k+1)/2)."""
    if M < 1:
        raise ValueError("M must be >= 1")
    t = _check_domain(t)
    return legendre_table(M, np.atleast_1d(np.asarray(t, dtype=_LD)), dtype=_LD)[:, 0].astype(float)


@lru_cache(maxsize=64)
def gauss_legendre_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1] in extended precision.

    Double-precision nodes are Newton-refined on the classical recurrence so
    that node error does not leak (via f') into the coefficient noise floor.
    """
    from scipy.special import roots_legendre

    x0, _ = roots_legendre(n)
    x = x0.astype(_LD)
    for _ in range(2):
        p0 = np.ones_like(x)
        p1 = x.copy()
        for k in range(2, n + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        dp = n * (p0 - x * p1) / (1 - x * x)
        x = x - p1 / dp
    p0 = np.ones_like(x)
    p1 = x.copy()
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    dp = n * (p0 - x * p1) / (1 - x * x)
    w = 2.0 / ((1 - x * x) * dp * dp)
    return x, w


@dataclass(frozen=True)
class LegendreSeries:
    """Finite expansion sum_d coeffs[d] * p_d(t) on the reference interval.

    ``interval`` records the original problem domain the series was built
    from; the coefficients always refer to the reference variable on [-1, 1].
    """
    coeffs: np.ndarray
    interval: tuple[float, float] = (-1.0, 1.0)

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coeffs must be a non-empty vector")
        if not np.all(np.isfinite(c)):
            raise ValueError("coeffs must be finite")
        object.__setattr__(self, "coeffs", c)

    def __len__(self) -> int:
        return self.coeffs.size

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, t):
        return eval_series(self, t)

    def l1(self) -> float:
        return float(np.abs(self.coeffs).sum())

    def decay_fit(self) -> tuple[float, float]:
        """Fit |coeffs[d]| ~ C * rho**(-d-1) over the trailing stored range.

        Returns (C, rho); rho = inf for a series too short to fit (an exact
        polynomial) and rho = 1 when no decay is present.
        """
        b = np.abs(self.coeffs)
        if b.size < 4:
            return 0.0, np.inf
        lo = b.size // 3
        d = np.arange(lo, b.size)
        y = b[lo:]
        keep = y > b.max() * EPS * EPS
        if keep.sum() < 2:
            return 0.0, np.inf
        slope, intercept = np.polyfit(d[keep], np.log(y[keep]), 1)
        if slope >= 0:
            return float(b.max()), 1.0
        rho = float(np.exp(-slope))
        C = float(np.exp(intercept))  # |a_d| ~ C * rho^{-d}; fold one power in
        return C * rho, rho

    def fitted_tail_sup_bound(self, N: int) -> float:
        """Estimate of sum_{d>N} |a_d| sqrt((2d+1)/2) from the fitted decay."""
        C, rho = self.decay_fit()
        if np.isinf(rho):
            return 0.0
        if rho <= 1:
            return np.inf
        total, d = 0.0, N + 1
        while True:
            term = C * rho ** (-(d + 1)) * np.sqrt((2 * d + 1) / 2)
            total += term
            d += 1
            if term < total * 1e-16 or d > N + 100000:
                break
        return float(total)


@dataclass(frozen=True)
class EvalGrid:
    """Sampled values of a function on an increasing node set in [-1, 1]."""
    nodes: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        nodes = np.asarray(self.nodes, dtype=float)
        values = np.asarray(self.values, dtype=complex)
        if nodes.ndim != 1 or nodes.size != values.size:
            raise ValueError("nodes and values must be vectors of equal length")
        if np.any(np.diff(nodes) <= 0):
            raise ValueError("nodes must be strictly increasing")
        if nodes.size and (nodes[0] < -1 - _DOMAIN_SLACK or nodes[-1] > 1 + _DOMAIN_SLACK):
            raise ValueError("nodes must lie in [-1, 1]")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "values", values)


def eval_series(series: LegendreSeries, t) -> complex | np.ndarray:
    """Clenshaw evaluation of the series at t in [-1, 1]."""
    t = _check_domain(t)
    scale = np.sqrt((2 * np.arange(len(series)) + 1) / 2)
    c = series.coeffs * scale
    out = np.polynomial.legendre.legval(t, c)
    return out if t.ndim else complex(out)


def _chebyshev_coeffs(values_desc: np.ndarray) -> np.ndarray:
    """Interpolation coefficients from samples at cos(pi*j/n), j=0..n."""
    n = values_desc.size - 1
    ext = np.concatenate([values_desc, values_desc[-2:0:-1]])
    c = np.fft.fft(ext) / (2 * n)
    out = c[: n + 1].copy()
    out[1:n] += c[:n:-1]
    return out


def _sample(f: Callable, x: np.ndarray) -> np.ndarray:
    vals = np.asarray(f(x), dtype=complex)
    return np.broadcast_to(vals, x.shape).copy() if vals.shape != x.shape else vals


def _resolve_length(f: Callable, tol: float, max_nodes: int) -> int:
    """Number of coefficients needed to represent f to tolerance tol.

    Determined on Chebyshev interpolants of doubling resolution with the
    plateau rule alone (the construction loop of polynomial-approximation
    software): a sampling level is accepted only once the interpolation
    coefficients visibly stall in a rounding plateau.
    """
    p = 4
    while 2 ** p + 1 <= max_nodes:
        n = 2 ** p + 1
        x = np.cos(np.pi * np.arange(n) / (n - 1))
        c = _chebyshev_coeffs(_sample(f, x))
        env = tail_envelope(c)
        if env[0] == 0:
            return 1
        cut = _plateau_cut(env, tol)
        if cut is not None and cut < c.size:
            return cut
        p += 1
    raise ConvergenceError(
        f"function not resolved to tol={tol:g} within {max_nodes} samples; "
        "is it analytic on [-1, 1]?")


def expand_function(f: Callable, tol: float = EPS, max_nodes: int = 10 ** 5,
                    num_coeffs: int | None = None) -> LegendreSeries:
    """Legendre coefficients of an analytic function on [-1, 1].

    The truncation length is chosen automatically (see _resolve_length);
    the coefficients themselves come from Gauss-Legendre quadrature with
    extended-precision accumulation, with the node count doubled past the
    resolved length so the quadrature is exact at working precision.

    ``num_coeffs`` overrides the automatic length (used by oracles/tests).
    """
    if not 0 < tol < 1:
        raise ValueError(f"tol must be in (0, 1), got {tol}")
    tol = max(tol, EPS)
    cut = num_coeffs if num_coeffs is not None else _resolve_length(f, tol, max_nodes)
    if cut > max_nodes:
        raise ConvergenceError(f"required expansion length {cut} exceeds cap {max_nodes}")
    nq = 1 << max(6, int(np.ceil(np.log2(2 * cut + 32))))
    if nq > max_nodes:
        raise ConvergenceError(f"required quadrature size {nq} exceeds cap {max_nodes}")
    x, w = gauss_legendre_rule(nq)
    fx = _sample(f, x.astype(float)).astype(np.clongdouble)
    P = legendre_table(cut, x, dtype=_LD)
    coeffs = (P @ (w * fx)).astype(complex)
    return LegendreSeries(coeffs)
