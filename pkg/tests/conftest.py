import numpy as np
import pytest

from legode.legendre import gauss_legendre_rule, legendre_table

EPS = float(np.finfo(float).eps)


@pytest.fixture(scope="session")
def triple_quadrature_table():
    """G[a, b, c] = quadrature of p_a p_b p_c for degrees <= 60.

    92 Gauss-Legendre nodes integrate products of total degree up to 183
    exactly, so this is an independent reference for the closed forms.
    """
    n = 92
    x, w = gauss_legendre_rule(n)
    P = legendre_table(61, x, dtype=np.longdouble).astype(float)
    wf = w.astype(float)
    return np.einsum("i,ai,bi,ci->abc", wf, P, P, P, optimize=True)


def quad_triple(a: int, b: int, c: int, nodes: int | None = None) -> float:
    """One quadrature triple product, enough nodes for exactness."""
    n = nodes or (a + b + c) // 2 + 2
    n = max(n, 8)
    x, w = gauss_legendre_rule(n)
    P = legendre_table(max(a, b, c) + 1, x, dtype=np.longdouble)
    return float((w * P[a] * P[b] * P[c]).sum())
