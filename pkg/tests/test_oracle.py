"""The quadrature oracles themselves, validated before anything relies on
them: closed-form subinterval integrals against full 2D quadrature, and the
scalar exp-integral solution against the registered analytic formulas."""
import numpy as np
import pytest

from legode import OdeProblem, basis_matrix_dense
from legode.legendre import eval_legendre
from legode.oracle import fourier_coeff_2d, fourier_coeff_reference, reference_solution
from legode.problems import nmr_problem, polynomial_problem, toy_problem
from legode.solver import rescale_to_reference


def test_constant_times_heaviside_coefficient():
    p0 = lambda t: np.full_like(np.asarray(t, float), 1 / np.sqrt(2), dtype=complex)
    val = fourier_coeff_reference(p0, 0, 0)
    assert abs(val - 1 / np.sqrt(2)) < 1e-13


@pytest.mark.parametrize("d", range(9))
def test_matches_basis_matrix_entries(d):
    f = lambda t, d=d: eval_legendre(d, np.asarray(t))
    B = basis_matrix_dense(d, 22)
    for k in range(0, 21, 3):
        for l in range(0, 21, 3):
            want = B.get(k, l) if max(k, l) < 22 else 0.0
            got = fourier_coeff_reference(f, k, l)
            assert abs(got - want) < 1e-12


def test_outside_band_is_zero():
    d = 3
    f = lambda t: eval_legendre(d, np.asarray(t))
    for (k, l) in [(0, 6), (10, 2), (17, 5)]:
        assert abs(k - l) > d + 1
        assert abs(fourier_coeff_reference(f, k, l)) < 1e-13


@pytest.mark.parametrize("d,k,l", [(2, 3, 4), (0, 1, 0), (5, 5, 5)])
def test_2d_quadrature_cross_check(d, k, l):
    f = lambda t: eval_legendre(d, np.asarray(t))
    a = fourier_coeff_reference(f, k, l)
    b = fourier_coeff_2d(f, k, l)
    assert abs(a - b) < 1e-12


@pytest.mark.parametrize("problem", [
    toy_problem(5.0, 10.0),
    toy_problem(2.0, 1.0),
    polynomial_problem(6.0),
    nmr_problem(nu=200.0, beta=20.0, gamma=15.0, t_end=1e-2),
])
def test_quadrature_solution_matches_analytic(problem):
    rng = np.random.default_rng(7)
    a, b = problem.interval
    ts = a + (b - a) * rng.random(100)
    exact = problem.exact_solution(ts)
    bare = OdeProblem(problem.f, problem.interval)  # drops the formula
    quad = reference_solution(bare, ts)
    assert np.abs(quad - exact).max() < 1e-12


def test_zero_coefficient_function_gives_one():
    prob = OdeProblem(lambda t: np.zeros_like(np.asarray(t, dtype=complex)))
    assert reference_solution(prob, 0.3) == pytest.approx(1.0)


def test_polynomial_solution_satisfies_its_ode():
    # The displayed closed form is checked by differentiation, not trusted:
    # (d/dt) u must equal f * u at interior points of the rescaled problem.
    ref = rescale_to_reference(polynomial_problem(25.0))
    h = 1e-6
    ts = np.linspace(-0.9, 0.9, 20)
    du = (np.asarray(ref.exact_solution(ts + h)) - ref.exact_solution(ts - h)) / (2 * h)
    rhs = np.asarray(ref.f(ts)) * ref.exact_solution(ts)
    assert np.abs(du - rhs).max() / np.abs(rhs).max() < 1e-7


def test_toy_solution_satisfies_its_ode():
    prob = toy_problem(5.0, 1.0)
    h = 1e-6
    ts = np.linspace(-0.95, 0.95, 20)
    du = (np.asarray(prob.exact_solution(ts + h)) - prob.exact_solution(ts - h)) / (2 * h)
    rhs = np.asarray(prob.f(ts)) * prob.exact_solution(ts)
    assert np.abs(du - rhs).max() / np.abs(rhs).max() < 1e-8
