import math

import numpy as np
import pytest

from splinenorm.gram import GramSpec, InverseGramClosedForm, gram_matrix
from splinenorm.oracle import (
    continuous_ab,
    hat_values,
    lebesgue_function,
    lebesgue_function_many,
    numeric_gram,
    numeric_inverse,
    oracle_norm,
)
from splinenorm.sequences import seq


def test_hat_partition_of_unity():
    xs = np.linspace(0, 1, 97)
    assert np.allclose(hat_values(7, xs).sum(axis=1), 1.0, atol=1e-15)


@pytest.mark.parametrize("n", [1, 2, 5, 16, 64])
def test_numeric_gram_matches_exact(n):
    exact = np.array([[float(v) for v in row] for row in gram_matrix(GramSpec(n)).dense()])
    assert np.max(np.abs(numeric_gram(n) - exact)) < 1e-14


def test_numeric_gram_small():
    assert np.allclose(numeric_gram(1), [[1 / 3, 1 / 6], [1 / 6, 1 / 3]], atol=1e-15, rtol=0)
    G = numeric_gram(6)
    assert abs(G[3].sum() - 1 / 6) < 1e-14


@pytest.mark.parametrize("n", [1, 3, 16, 40, 64])
def test_numeric_inverse_matches_closed_form(n):
    closed = np.array([[float(v) for v in row] for row in InverseGramClosedForm(GramSpec(n)).dense])
    rel = np.abs(numeric_inverse(n) - closed) / np.abs(closed)
    assert rel.max() < 1e-9


def test_lebesgue_function_values():
    assert abs(lebesgue_function(1, 0.0) - 5 / 3) < 1e-12
    assert abs(lebesgue_function(2, 0.0) - 17 / 9) < 1e-10
    with pytest.raises(ValueError):
        lebesgue_function(2, 1.5)


@pytest.mark.parametrize("n", [1, 2, 5])
def test_lebesgue_function_reflection(n):
    xs = np.linspace(0, 1, 64 * n + 1)
    vals = lebesgue_function_many(n, xs)
    assert np.max(np.abs(vals - vals[::-1])) < 1e-10


def test_lebesgue_function_against_quadrature():
    # independent cross-check of the sign-change integration by fine midpoint sums
    n, x = 3, 0.37
    inv = numeric_inverse(n)
    ys = (np.arange(200000) + 0.5) / 200000
    kern = hat_values(n, ys) @ (inv @ hat_values(n, [x])[0])
    assert abs(np.abs(kern).mean() - lebesgue_function(n, x)) < 1e-8


@pytest.mark.parametrize("n, grid, tol", [(1, 64, 1e-10), (2, 128, 1e-10), (8, 1024, 1e-8)])
def test_oracle_norm(n, grid, tol):
    res = oracle_norm(n, grid)
    assert res.deviation < tol
    assert res.gram_defect < 1e-9
    assert res.norm_estimate >= res.knot_max - 1e-12


def test_oracle_argmax_at_boundary():
    res = oracle_norm(8, 1024)
    assert abs(lebesgue_function(8, res.argmax_x) - res.norm_estimate) < 1e-15
    # ties between the two end knots are broken by rounding noise
    assert res.argmax_x in (0.0, 1.0)


def test_oracle_grid_requirements():
    with pytest.raises(ValueError):
        oracle_norm(4, 31)
    res = oracle_norm(3, 25)  # not a multiple of n: knots are merged in
    assert res.grid_size == 26 + 2


def test_continuous_ab_matches_sequences_and_lambda():
    lam = 2 + math.sqrt(3)
    for k in range(0, 15):
        a, b = continuous_ab(k)
        assert a == pytest.approx(seq(k).A, rel=1e-12)
        assert b == pytest.approx(seq(k).B, rel=1e-12, abs=1e-12)
    for x in (0.3, 1.7, 4.25):
        a, b = continuous_ab(x)
        assert a == pytest.approx((lam ** x + lam ** -x) / 2, rel=1e-13)
        assert b == pytest.approx((lam ** x - lam ** -x) / (2 * math.sqrt(3)), rel=1e-13)
