"""Integrals of products of three orthonormal Legendre polynomials.

The closed form factors into a part depending on the degree sum
(gamma = b + c, the "Hankel" direction) and a part depending on the degree
difference (alpha = |b - c|, the "Toeplitz" direction):

    F(a, b, c) = sqrt((2a+1)(2b+1)(2c+1)) * h(a, gamma) * t(a, alpha)

    h(a, g) = 1/(a+g+1) * prod_{j=1..a} (g-a+2j) / (g-a+2j-1)
    t(a, s) = 2^(-2a-1/2) * prod_{j=(a+s)/2+1..a+s} j^2
              / (prod_{j=1..(a-s)/2} j^2 * prod_{j=a-s+1..a+s} j)

valid under the selection rules (even degree sum, triangle inequalities);
outside them the integral is exactly zero.

Everything is evaluated as products of order-one ratio factors in extended
precision: no factorial ever materializes, so there is no overflow at any
practical degree, and no large-term cancellation (a log-factorial route
loses ~1e-12 relative accuracy near degree 1500, which is visible in the
solver's error floor).  Vector variants walk the recurrences

    h(a, g+2)/h(a, g) = (a+g+1)(g+a+2)(g-a+1) / ((a+g+3)(g+a+1)(g-a+2))
    t(a, s-2)/t(a, s) = (a-s+2)(a-s+1)((a+s)/2)^2 / ((a+s)(a+s-1)((a-s)/2+1)^2)

with cumulative products.
"""
from __future__ import annotations

import numpy as np

__all__ = [
    "triple_product",
    "triple_product_normalized",
    "hankel_entry",
    "toeplitz_entry",
    "hankel_generator",
    "toeplitz_generator",
]

_LD = np.longdouble


def _selection_zero(a: int, b: int, c: int) -> bool:
    return (a + b + c) % 2 == 1 or b + c < a or a + c < b or a + b < c


def hankel_entry(a: int, gamma: int) -> float:
    """h(a, gamma); requires gamma >= a (callers treat other index pairs as
    structural zeros)."""
    if a < 0 or gamma < a:
        raise ValueError("need gamma >= a >= 0")
    j = np.arange(1, a + 1, dtype=_LD)
    g = _LD(gamma)
    prod = np.prod((g - a + 2 * j) / (g - a + 2 * j - 1)) if a else _LD(1)
    return float(prod / (a + g + 1))


def toeplitz_entry(a: int, alpha: int) -> float:
    """t(a, alpha); requires 0 <= alpha <= a with a + alpha even."""
    if not (0 <= alpha <= a) or (a + alpha) % 2:
        raise ValueError("need 0 <= alpha <= a with a + alpha even")
    m = (a - alpha) // 2
    # t = 2^(-1/2) * prod_{j=1..a} (2j-1)/(2j)            [alpha = a]
    # walked down to the requested alpha by the ratio recurrence.
    j = np.arange(1, a + 1, dtype=_LD)
    val = np.prod((2 * j - 1) / (2 * j)) / np.sqrt(_LD(2)) if a else 1 / np.sqrt(_LD(2))
    s = _LD(a)
    for _ in range(m):
        val *= (a - s + 2) * (a - s + 1) / ((a + s) * (a + s - 1)) \
            * ((a + s) / 2) ** 2 / ((a - s) / 2 + 1) ** 2
        s -= 2
    return float(val)


def hankel_generator(d: int, gamma_max: int) -> np.ndarray:
    """vec[i] = h(d, d + 2i) covering gamma up to gamma_max (longdouble)."""
    n = max((gamma_max - d) // 2 + 2, 2)
    if d > 0:
        j = np.arange(1, d + 1, dtype=_LD)
        anchor = np.prod(2 * j / (2 * j - 1)) / _LD(2 * d + 1)
    else:
        anchor = _LD(1) / _LD(d + 1)
    g = d + 2 * np.arange(0, n - 1, dtype=_LD)
    r = (d + g + 1) / (d + g + 3) * (g + d + 2) / (g + d + 1) * (g - d + 1) / (g - d + 2)
    np.cumprod(r, out=r)
    vec = np.empty(n, dtype=_LD)
    vec[0] = anchor
    vec[1:] = anchor * r
    return vec


def toeplitz_generator(d: int) -> np.ndarray:
    """vec[i] = t(d, d - 2i) for all valid differences (longdouble)."""
    n = d // 2 + 1
    j = np.arange(1, d + 1, dtype=_LD)
    anchor = np.prod((2 * j - 1) / (2 * j)) / np.sqrt(_LD(2))
    a = d - 2 * np.arange(0, n - 1, dtype=_LD)
    r = ((d - a + 2) * (d - a + 1) / ((d + a) * (d + a - 1))
         * ((d + a) / 2) ** 2 / ((d - a) / 2 + 1) ** 2)
    np.cumprod(r, out=r)
    vec = np.empty(n, dtype=_LD)
    vec[0] = anchor
    vec[1:] = anchor * r
    return vec


def triple_product(a: int, b: int, c: int) -> float:
    """Integral of p_a p_b p_c over [-1, 1]; exact 0.0 under selection rules."""
    if min(a, b, c) < 0:
        raise ValueError("degrees must be >= 0")
    if _selection_zero(a, b, c):
        return 0.0
    scale = np.sqrt(_LD(2 * a + 1) * _LD(2 * b + 1) * _LD(2 * c + 1))
    return float(scale * _LD(hankel_entry(a, b + c)) * _LD(toeplitz_entry(a, abs(b - c))))


def triple_product_normalized(a: int, b: int, c: int) -> float:
    """Same integral for polynomials normalized to 1 at t = 1.

    Equals triple_product * sqrt(8 / ((2a+1)(2b+1)(2c+1))); in particular
    (0, k, k) gives 2/(2k+1).
    """
    if min(a, b, c) < 0:
        raise ValueError("degrees must be >= 0")
    if _selection_zero(a, b, c):
        return 0.0
    return float(np.sqrt(_LD(8)) * _LD(hankel_entry(a, b + c)) * _LD(toeplitz_entry(a, abs(b - c))))
