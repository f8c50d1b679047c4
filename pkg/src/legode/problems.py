"""Built-in benchmark problems and expression-based problem construction."""
from __future__ import annotations

import math

import numpy as np

from .solver import OdeProblem

__all__ = ["toy_problem", "polynomial_problem", "nmr_problem",
           "expression_problem", "BUILTINS"]


def toy_problem(omega: float = 5.0, beta: float = 10.0) -> OdeProblem:
    """f(t) = -i (omega/beta) sin(omega (t+1)) on [-1, 1].

    omega controls the oscillation, beta the amplitude; the solution is
    exp(-(i/beta)(1 - cos(omega t + omega))).
    """
    def f(t):
        return -1j * (omega / beta) * np.sin(omega * (np.asarray(t) + 1.0))

    def exact(t):
        return np.exp(-(1j / beta) * (1.0 - np.cos(omega * np.asarray(t) + omega)))

    return OdeProblem(f, (-1.0, 1.0), exact, name=f"toy(omega={omega:g},beta={beta:g})")


def polynomial_problem(t_end: float = 25.0) -> OdeProblem:
    """f(tau) = -i tau on [0, t_end]; solution exp(-i tau^2 / 2)."""
    def f(tau):
        return -1j * np.asarray(tau, dtype=float)

    def exact(tau):
        return np.exp(-0.5j * np.asarray(tau, dtype=float) ** 2)

    return OdeProblem(f, (0.0, t_end), exact, name=f"poly(t_end={t_end:g})")


def nmr_problem(nu: float = 5000.0, alpha: float = 0.05, beta: float = 3450.0,
                gamma: float = 3450.0, t_end: float = 1e-2,
                split: int | None = None) -> OdeProblem:
    """Spin-system-style coefficient function on [0, t_end]:

        f(tau) = -2 pi i (alpha + beta cos(2 pi nu tau) + gamma cos(4 pi nu tau))

    nu is the sample spinning rate.  ``split`` restricts the problem to the
    first of that many equal subintervals, the manual splitting used for
    the highest spinning rates.
    """
    if split is not None:
        if split < 1:
            raise ValueError("split must be >= 1")
        t_end = t_end / split

    def f(tau):
        tau = np.asarray(tau, dtype=float)
        return -2j * np.pi * (alpha + beta * np.cos(2 * np.pi * nu * tau)
                              + gamma * np.cos(4 * np.pi * nu * tau))

    def exact(tau):
        tau = np.asarray(tau, dtype=float)
        return np.exp(-2j * np.pi * (alpha * tau
                                     + beta * np.sin(2 * np.pi * nu * tau) / (2 * np.pi * nu)
                                     + gamma * np.sin(4 * np.pi * nu * tau) / (4 * np.pi * nu)))

    return OdeProblem(f, (0.0, t_end), exact,
                      name=f"nmr(nu={nu:g},t_end={t_end:g})")


_EXPR_NAMES = {
    "sin": np.sin, "cos": np.cos, "tan": np.tan, "exp": np.exp,
    "sinh": np.sinh, "cosh": np.cosh, "tanh": np.tanh, "sqrt": np.sqrt,
    "log": np.log, "abs": np.abs, "pi": math.pi, "e": math.e,
    "i": 1j, "j": 1j,
}


def expression_problem(expr: str, interval: tuple[float, float] = (-1.0, 1.0)) -> OdeProblem:
    """Problem from a coefficient-function expression in the variable t.

    The expression is evaluated with numpy semantics in a restricted
    namespace (sin, cos, exp, ..., pi, i).  Example: "-1j*5*sin(5*(t+1))".
    """
    if "__" in expr:
        raise ValueError("invalid expression")
    code = compile(expr, "<coefficient-function>", "eval")
    for name in code.co_names:
        if name not in _EXPR_NAMES and name != "t":
            raise ValueError(f"unknown name {name!r} in expression")

    def f(t):
        t = np.asarray(t, dtype=float)
        return np.broadcast_to(
            np.asarray(eval(code, {"__builtins__": {}}, {**_EXPR_NAMES, "t": t}),
                       dtype=complex), t.shape)

    f(np.linspace(interval[0], interval[1], 5))  # validate early
    return OdeProblem(f, interval, None, name=f"expr({expr})")


BUILTINS = {
    "toy": toy_problem,
    "poly": polynomial_problem,
    "nmr": nmr_problem,
}
