import math
import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fockhankel.errors import UnderTruncationWarning
from fockhankel.fock import FockParams, sup_norm_weighted
from fockhankel.hankel import (
    RadialDensity,
    boundedness_ratio,
    diagonal_exponent_probe,
    hankel_bilinear_form,
    hankel_conj_image,
    hankel_matrix,
    hs_norm_sq_formula,
    hs_norm_sq_L2,
    hs_norm_sq_truncated,
    hs_symbol_log_ratio,
    log_hs_norm_sq_formula,
    symbol_delta_comparator,
    symbol_delta_norm_sq,
    symbol_delta_norm_sq_exact,
    truncated_operator_norm,
)
from fockhankel.quad import inner_product
from fockhankel.symbol import TaylorSymbol

F11 = FockParams(1.0, 1)

symbols = st.lists(st.complex_numbers(max_magnitude=3, allow_nan=False), min_size=1, max_size=31)


def test_matrix_examples():
    assert np.array_equal(hankel_matrix([1], F11, 2).entries, [[1, 0], [0, 0]])
    H = hankel_matrix([0, 1], F11, 2).entries
    assert H[0, 1] == pytest.approx(1) and H[1, 0] == pytest.approx(1)
    H = hankel_matrix([0, 0, 1], FockParams(1, 2), 3).entries
    assert H[1, 1] == pytest.approx(math.sqrt(math.pi) / 2, rel=1e-14)


@given(symbols, st.integers(1, 4), st.floats(0.3, 3.0))
def test_matrix_band_and_symmetry(c, ell, alpha):
    b = TaylorSymbol(c)
    H = hankel_matrix(b, FockParams(alpha, ell), 2 * b.degree + 3).entries
    assert np.array_equal(H, H.T)
    m, n = np.indices(H.shape)
    assert np.all(H[m + n > b.degree] == 0)


def test_hs_formula_examples():
    assert hs_norm_sq_formula([2 - 1j], FockParams(1, 3)) == pytest.approx(5.0)
    assert hs_norm_sq_formula([0, 0, 0, 1], F11) == pytest.approx(48, rel=1e-14)
    assert hs_norm_sq_formula([0, 1, 1], F11) == pytest.approx(10, rel=1e-14)
    assert hs_norm_sq_truncated([1], F11, 4) == pytest.approx(1)
    assert hs_norm_sq_truncated([0, 1], F11, 4) == pytest.approx(2)
    assert hs_norm_sq_truncated([0, 0, 0, 1], F11, 8) == pytest.approx(48, rel=1e-14)


def test_hs_ell_one_collapse():
    for m in range(31):
        lv = log_hs_norm_sq_formula(TaylorSymbol.monomial(m), F11)
        assert lv == pytest.approx(m * math.log(2) + math.lgamma(m + 1), abs=1e-10 * max(1, lv))


@given(symbols, st.integers(1, 4), st.floats(0.25, 4.0))
def test_truncated_equals_formula(c, ell, alpha):
    b = TaylorSymbol(c)
    fp = FockParams(alpha, ell)
    if b.is_zero():
        return
    assert hs_norm_sq_truncated(b, fp, 2 * b.degree + 1) == pytest.approx(hs_norm_sq_formula(b, fp), rel=1e-10)


def test_under_truncation_warns():
    with pytest.warns(UnderTruncationWarning):
        hs_norm_sq_truncated([0, 0, 1], F11, 3)


def test_hs_alpha_scaling():
    # dilation: HS of h_{z^m} on F_alpha is alpha^(-m/ell) times the alpha = 1 value
    b = TaylorSymbol.monomial(5)
    for ell in (1, 2, 3):
        r = hs_norm_sq_formula(b, FockParams(2.5, ell)) / hs_norm_sq_formula(b, FockParams(1, ell))
        assert r == pytest.approx(2.5 ** (-5 / ell), rel=1e-12)


def test_hs_symbol_ratio_bracket():
    for ell in (2, 3, 4, 5):
        logs = [hs_symbol_log_ratio(m, ell) for m in range(8 * ell, 600, 7)]
        assert max(logs) - min(logs) < math.log(100)


def test_symbol_delta_norm():
    assert symbol_delta_norm_sq([1], 0.5, 1) == pytest.approx(2 * math.pi, rel=1e-12)
    assert symbol_delta_norm_sq([0, 1], 0.5, 1) == pytest.approx(4 * math.pi, rel=1e-12)
    assert symbol_delta_comparator(TaylorSymbol.monomial(4), 1) == pytest.approx(16 * 24)
    b = TaylorSymbol([1, 2, 3j, 0.5])
    for ell in (2, 3):
        assert symbol_delta_norm_sq(b, 0.5, ell) == pytest.approx(symbol_delta_norm_sq_exact(b, 0.5, ell), rel=1e-11)


def test_operator_norm_examples():
    assert truncated_operator_norm([1], F11, 4) == pytest.approx(1)
    assert truncated_operator_norm([0, 1], F11, 4) == pytest.approx(1, rel=1e-10)
    # z^2: antidiagonal (0,2),(1,1),(2,0) with entries sqrt(2), 2, sqrt(2)
    assert truncated_operator_norm([0, 0, 1], F11, 8) == pytest.approx(2, rel=1e-10)
    b = TaylorSymbol([0.3, -1, 2j, 0.5])
    H = hankel_matrix(b, FockParams(1, 2), 9).entries
    assert truncated_operator_norm(b, FockParams(1, 2), 9) == pytest.approx(np.linalg.norm(H, 2), rel=1e-8)


def test_operator_norm_monotone_in_n():
    b = TaylorSymbol([1, 0.5, -0.25j, 0.1, 0.3])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UnderTruncationWarning)
        vals = [truncated_operator_norm(b, FockParams(1, 2), n) for n in range(1, 12)]
    assert all(b2 >= b1 * (1 - 1e-10) for b1, b2 in zip(vals, vals[1:]))


def test_bilinear_form_examples():
    assert hankel_bilinear_form([1], [1], [1], F11) == pytest.approx(math.pi)
    assert hankel_bilinear_form([0, 1], [1], [0, 0, 1], FockParams(2, 3)) == 0
    assert hankel_bilinear_form([0, 1], [0, 1], [0, 0, 1], F11) == pytest.approx(2 * math.pi)


@given(symbols, symbols, symbols, st.integers(1, 3))
def test_bilinear_adjoint(f, g, b, ell):
    fp = FockParams(1.0, ell)
    f, g, b = TaylorSymbol(f[:6]), TaylorSymbol(g[:6]), TaylorSymbol(b[:10])
    lam = hankel_bilinear_form(f, g, b, fp)
    assert abs(lam - hankel_bilinear_form(g, f, b, fp)) <= 1e-12 * max(abs(lam), 1e-12) + 1e-13
    other = inner_product(g, hankel_conj_image(b, f, fp), fp)
    assert abs(lam - other) <= 1e-9 * max(abs(lam), 1e-12) + 1e-12


def test_l2_examples():
    assert hs_norm_sq_L2(RadialDensity((1.0,), 1.0), F11) == pytest.approx(1.0, rel=1e-10)
    for alpha in (0.5, 1.0, 3.0):
        got = hs_norm_sq_L2(RadialDensity((1.0,), 0.0, 2.5), FockParams(alpha, 1))
        assert got == pytest.approx(alpha * 2.5 ** 2, rel=1e-8)


def test_diagonal_exponent():
    for ell in (2, 3):
        probe = diagonal_exponent_probe(FockParams(1, ell), np.linspace(1, 4, 31))
        assert probe["flat_exponent"] == 2 * (ell - 1)
    probe = diagonal_exponent_probe(FockParams(1, 1), np.linspace(1, 4, 5))
    assert np.allclose(probe["diag"], 1 / math.pi, rtol=1e-14)


def test_boundedness_ratio_band():
    for ell in (1, 2):
        r = [boundedness_ratio(m, FockParams(1, ell)) for m in range(0, 21, 4)]
        assert max(r) / min(r) < 100
