import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legode import hankel_entry, toeplitz_entry, triple_product, triple_product_normalized
from legode.tripleprod import hankel_generator, toeplitz_generator

from conftest import quad_triple


def test_degree_zero_pairing():
    for k in (0, 1, 5, 40):
        assert triple_product(0, k, k) == pytest.approx(1 / np.sqrt(2), rel=1e-14)


def test_odd_sum_is_exact_zero():
    assert triple_product(1, 1, 1) == 0.0


def test_small_case_against_quadrature():
    assert triple_product(1, 1, 2) == pytest.approx(2 / np.sqrt(10), rel=1e-13)
    assert triple_product(1, 1, 2) == pytest.approx(quad_triple(1, 1, 2), rel=1e-13)


def test_permutation_symmetry():
    rng = np.random.default_rng(11)
    for _ in range(300):
        a, b, c = rng.integers(0, 41, size=3)
        vals = {triple_product(*p) for p in itertools.permutations((int(a), int(b), int(c)))}
        assert max(vals) - min(vals) <= 1e-15 * max(1.0, max(abs(v) for v in vals))


def test_selection_rules_bit_exact_zero():
    cases = [(1, 2, 4), (3, 0, 0), (0, 2, 5), (2, 9, 3), (7, 1, 1)]
    for a, b, c in cases:
        if (a + b + c) % 2 == 1 or b + c < a or a + c < b or a + b < c:
            assert triple_product(a, b, c) == 0.0
            assert triple_product_normalized(a, b, c) == 0.0


def test_quadrature_oracle_up_to_60(triple_quadrature_table):
    rng = np.random.default_rng(0)
    sample = rng.integers(0, 61, size=(4000, 3))
    for a, b, c in sample:
        got = triple_product(int(a), int(b), int(c))
        assert abs(got - triple_quadrature_table[a, b, c]) < 1e-12


def test_high_degree_accuracy_vs_quadrature():
    rng = np.random.default_rng(5)
    checked = 0
    while checked < 60:
        a, b = sorted(rng.integers(0, 301, size=2))
        c = int(rng.integers(abs(b - a), min(300, a + b) + 1))
        if (a + b + c) % 2:
            continue
        val = triple_product(int(a), int(b), int(c))
        ref = quad_triple(int(a), int(b), int(c))
        if abs(ref) > 1e-18:
            assert abs(val - ref) <= 1e-10 * max(abs(ref), 1e-6)
        checked += 1


def test_no_overflow_at_degree_2000():
    v = triple_product(2000, 1500, 700)
    assert np.isfinite(v) and v > 0
    assert np.isfinite(hankel_entry(2000, 2200))
    assert np.isfinite(toeplitz_entry(2000, 800))


# ----------------------------------------------------------- normalized form

def test_normalized_degree_zero():
    for k in (0, 1, 7, 30):
        assert triple_product_normalized(0, k, k) == pytest.approx(2 / (2 * k + 1), rel=1e-14)


def test_normalized_diagonal_bound():
    for d in range(0, 51, 5):
        for k in range(d + 1):
            assert triple_product_normalized(d, k, d - k) <= 2 / (2 * d + 1) + 1e-15


def test_normalized_small_case_vs_quadrature():
    want = quad_triple(2, 1, 3) * np.sqrt(8 / (5 * 3 * 7))
    assert triple_product_normalized(2, 1, 3) == pytest.approx(want, rel=1e-12)


def test_monotone_decay_along_diagonals():
    for d in range(0, 41, 4):
        for k in range(0, d + 1, 2):
            prev = triple_product_normalized(d, k, d - k)
            for i in range(1, 21, 4):
                cur = triple_product_normalized(d, k + i, d - k + i)
                assert prev > cur > 0
                prev = cur


# ----------------------------------------------------------- generators

def test_hankel_entry_values():
    assert hankel_entry(0, 4) == pytest.approx(1 / 5, rel=1e-15)
    assert hankel_entry(1, 3) == pytest.approx((1 / 5) * (4 / 3), rel=1e-14)


def test_toeplitz_entry_values():
    assert toeplitz_entry(0, 0) == pytest.approx(2 ** -0.5, rel=1e-15)
    # t(2, 0) via the reconstruction F(2, k, k) = sqrt(5) (2k+1) h(2, 2k) t(2, 0)
    k = 3
    t20 = quad_triple(2, k, k) / (np.sqrt(5) * (2 * k + 1) * hankel_entry(2, 2 * k))
    assert toeplitz_entry(2, 0) == pytest.approx(t20, rel=1e-12)


def test_generator_vectors_match_scalar_entries():
    for d in (0, 1, 2, 9, 24):
        hv = hankel_generator(d, 2 * d + 40)
        for i in range(len(hv) - 1):
            assert float(hv[i]) == pytest.approx(hankel_entry(d, d + 2 * i), rel=1e-15)
        tv = toeplitz_generator(d)
        for i in range(len(tv)):
            assert float(tv[i]) == pytest.approx(toeplitz_entry(d, d - 2 * i), rel=1e-15)


def test_factorization_reconstructs_triple_product():
    rng = np.random.default_rng(2)
    for _ in range(200):
        a = int(rng.integers(0, 31))
        b = int(rng.integers(0, 31))
        cmin, cmax = abs(a - b), a + b
        c = int(rng.integers(cmin, cmax + 1))
        if (a + b + c) % 2:
            continue
        want = np.sqrt((2 * a + 1) * (2 * b + 1) * (2 * c + 1)) \
            * hankel_entry(a, b + c) * toeplitz_entry(a, abs(b - c))
        assert triple_product(a, b, c) == pytest.approx(want, rel=5e-14)


def test_entry_preconditions():
    with pytest.raises(ValueError):
        hankel_entry(3, 2)
    with pytest.raises(ValueError):
        toeplitz_entry(2, 1)
    with pytest.raises(ValueError):
        triple_product(-1, 0, 1)


@given(st.integers(0, 50), st.integers(0, 50), st.integers(0, 50))
@settings(max_examples=200, deadline=None)
def test_selection_and_symmetry_property(a, b, c):
    v = triple_product(a, b, c)
    if (a + b + c) % 2 == 1 or b + c < a or a + c < b or a + b < c:
        assert v == 0.0
    else:
        assert v > 0
    assert v == pytest.approx(triple_product(b, c, a), rel=1e-13, abs=1e-300)
