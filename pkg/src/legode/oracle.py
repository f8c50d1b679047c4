"""Independent brute-force references used by the test suite.

These deliberately avoid the closed-form triple-product route: Fourier
coefficients come from quadrature with the subinterval-integral identity
(or full 2D quadrature over the causal triangle), and reference solutions
use the scalar-case quadrature formula u(t) = exp(integral of f).  The
latter is exact only because scalar factors commute; it must not be
reused for matrix-valued problems.
"""
from __future__ import annotations

from typing import Callable

import numpy as np

from .errors import ConvergenceError
from .legendre import gauss_legendre_rule, legendre_table
from .solver import OdeProblem

__all__ = [
    "fourier_coeff_reference",
    "fourier_coeff_2d",
    "reference_solution",
]

_LD = np.longdouble


def _integral_from_minus_one(l: int, P: np.ndarray) -> np.ndarray:
    """int_{-1}^{tau} p_l, expressed through neighboring degrees.

    l = 0:  p_1/sqrt(3) + p_0
    l > 0:  (p_{l+1}/sqrt(2l+3) - p_{l-1}/sqrt(2l-1)) / sqrt(2l+1)
    """
    if l == 0:
        return P[1] / np.sqrt(3.0) + P[0]
    return (P[l + 1] / np.sqrt(2.0 * l + 3) - P[l - 1] / np.sqrt(2.0 * l - 1)) \
        / np.sqrt(2.0 * l + 1)


def fourier_coeff_reference(f: Callable, k: int, l: int, tol: float = 1e-13,
                            max_nodes: int = 2 ** 15) -> complex:
    """Coefficient (k, l) of f(t) * H(t - s) by adaptive outer quadrature."""
    if k < 0 or l < 0:
        raise ValueError("degrees must be >= 0")
    prev = None
    n = 64
    while n <= max_nodes:
        x, w = gauss_legendre_rule(n)
        P = legendre_table(max(k, l + 1) + 1, x, dtype=_LD)
        fx = np.asarray(f(x.astype(float)), dtype=complex)
        fx = np.broadcast_to(fx, x.shape).astype(np.clongdouble)
        val = complex((w * fx * P[k] * _integral_from_minus_one(l, P)).sum())
        if prev is not None and abs(val - prev) <= tol * max(1.0, abs(val)):
            return val
        prev = val
        n *= 2
    raise ConvergenceError(f"outer quadrature did not settle to {tol:g}")


def fourier_coeff_2d(f: Callable, k: int, l: int, n: int = 200) -> complex:
    """Same coefficient by full 2D quadrature over the triangle s < t."""
    x, w = gauss_legendre_rule(n)
    x = x.astype(float)
    w = w.astype(float)
    Pk = legendre_table(k + 1, x)[k]
    Pl_all = []
    total = 0.0 + 0.0j
    for i, tau in enumerate(x):
        # inner integral over rho in [-1, tau]
        half = (tau + 1.0) / 2.0
        xi = half * x + (tau - 1.0) / 2.0
        wi = half * w
        Pl = legendre_table(l + 1, xi)[l]
        inner = (wi * Pl).sum()
        total += w[i] * complex(f(tau)) * Pk[i] * inner
    return complex(total)


def reference_solution(problem: OdeProblem, t, tol: float = 1e-13):
    """Solution value(s) at t (in the problem's own coordinates).

    Uses the registered analytic solution when present; otherwise the
    scalar-case closed form u(t) = exp(int_a^t f), evaluated by adaptive
    Gauss-Legendre quadrature per point.
    """
    if problem.exact_solution is not None:
        return problem.exact_solution(t)
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    a = problem.interval[0]
    out = np.empty(t_arr.size, dtype=complex)
    for i, ti in enumerate(t_arr):
        out[i] = np.exp(_adaptive_integral(problem.f, a, ti, tol))
    return out if np.ndim(t) else complex(out[0])


def _adaptive_integral(f: Callable, a: float, b: float, tol: float,
                       max_nodes: int = 2 ** 15) -> complex:
    if a == b:
        return 0.0 + 0.0j
    half = (b - a) / 2.0
    mid = (b + a) / 2.0
    prev = None
    n = 32
    while n <= max_nodes:
        x, w = gauss_legendre_rule(n)
        fx = np.asarray(f(mid + half * x.astype(float)), dtype=complex)
        fx = np.broadcast_to(fx, x.shape)
        val = complex(half * (w.astype(float) * fx).sum())
        if prev is not None and abs(val - prev) <= tol * max(1.0, abs(val)):
            return val
        prev = val
        n *= 2
    raise ConvergenceError(f"integral of coefficient function on [{a}, {b}] "
                           f"did not settle to {tol:g}")
