import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fockhankel.errors import FockDomainError
from fockhankel.estimates import (
    chernoff_check,
    g0,
    g1,
    g_factor_norms,
    gamma_sum,
    gamma_sum_decomposed,
    gamma_sum_log_ratio,
    i_integral_series,
    i_parameter_sets,
    log_g_factor_norm,
    log_i_estimate_ratio,
    log_i_polar,
    log_i_proxy,
    log_i_quadrature,
    log_j_quadrature,
    log_j_series,
    s4_dominance_threshold,
    square_completion_residual,
)
from fockhankel.fock import FockParams, kernel_eval
from fockhankel.quad import QuadratureSpec

# radial integral of 2 pi I0(2 a |z|^l r^l) e^{-b r^(2l)} r^(c+1) at 30 digits (mpmath), frozen
J_ORACLE = [
    ((2, 0.25, 0.5, 2.0, 3.0), 78411.81416370849),
    ((3, 1 / 3, 2 / 3, 8 / 3, 2.0), 36575.31522606089),
]


def test_gamma_sum_binomial():
    assert math.exp(gamma_sum(5, 1)) == pytest.approx(32, rel=1e-14)
    for m in range(0, 201, 7):
        assert gamma_sum(m, 1) == pytest.approx(m * math.log(2), abs=1e-12 * max(1, m))
    with pytest.raises(FockDomainError):
        gamma_sum(0, 3)


def test_gamma_sum_direct_small():
    # exact sum with math.gamma for a small case
    m, ell = 16, 2
    direct = sum(math.gamma((m + 2 - ell) / ell) / (math.gamma((k + 1) / ell) * math.gamma((m - k + 1) / ell))
                 for k in range(m + 1))
    assert math.exp(gamma_sum(m, ell)) == pytest.approx(direct, rel=1e-13)
    assert 0.1 <= direct / 2 ** 8 <= 10


def test_gamma_sum_large_is_finite():
    assert np.isfinite(gamma_sum_log_ratio(2000, 4))


@given(st.integers(1, 5), st.integers(0, 400))
def test_partition_exact(ell, extra):
    m = 8 * ell + extra
    bd = gamma_sum_decomposed(m, ell)
    assert abs(math.expm1(bd.recombined - bd.total)) <= 1e-12


def test_decomposition_binomial_tail():
    # ell = 1: S1 = C(64,0), S2 = C(64,64), S3 = sum_{1<=i<=16} C(64,i)
    bd = gamma_sum_decomposed(64, 1)
    assert bd.parts[0] == 0.0 and bd.parts[1] == 0.0
    s3 = sum(math.comb(64, i) for i in range(1, 17))
    assert math.exp(bd.parts[2]) == pytest.approx(s3, rel=1e-12)
    s4 = sum(math.comb(64, i) for i in range(17, 48))
    assert math.exp(bd.parts[3]) == pytest.approx(s4, rel=1e-12)
    assert bd.s4_dominates
    with pytest.raises(FockDomainError):
        gamma_sum_decomposed(20, 3)
    assert gamma_sum_decomposed(24, 3).m == 24


def test_s4_threshold():
    for ell in (1, 2, 3):
        assert s4_dominance_threshold(ell, 200) == 8 * ell


def test_chernoff_examples():
    assert chernoff_check(0) == (1, 1.0, True)
    lhs, rhs, ok = chernoff_check(8)
    assert lhs == 37 and rhs == pytest.approx(256 / math.e) and ok
    lhs, rhs, ok = chernoff_check(64)
    assert lhs == sum(math.comb(64, i) for i in range(17)) and ok
    assert all(chernoff_check(n)[2] for n in range(0, 513))


def test_j_series_closed_forms():
    for zm in (0.0, 0.5, 2.0, 3.7):
        assert i_integral_series(1, 0.5, 1.0, 0.0, zm) == pytest.approx(math.pi * math.exp(zm ** 2 / 4), rel=1e-13)
    for ell, b, c in ((2, 0.7, 1.0), (3, 2.0, 4.0)):
        expect = math.pi / ell * b ** (-(c + 2) / (2 * ell)) * math.gamma((c + 2) / (2 * ell))
        assert i_integral_series(ell, 0.3, b, c, 0.0) == pytest.approx(expect, rel=1e-14)


@pytest.mark.parametrize("args, ref", J_ORACLE)
def test_j_series_oracle(args, ref):
    assert i_integral_series(*args) == pytest.approx(ref, rel=1e-12)
    assert math.exp(log_j_quadrature(*args)) == pytest.approx(ref, rel=1e-10)


def test_j_polar_grid_matches():
    q = QuadratureSpec(400, 512, 6.0)
    assert log_i_polar(2, 0.25, 0.5, 2.0, 3.0, q, plus_one=False) == pytest.approx(
        log_j_series(2, 0.25, 0.5, 2.0, 3.0), abs=1e-10)
    # only |z| matters
    a = log_i_polar(2, 0.25, 0.5, 2.0, 3.0 * np.exp(0.7j), q)
    b = log_i_polar(2, 0.25, 0.5, 2.0, 3.0, q)
    assert a == pytest.approx(b, abs=1e-10)
    assert a == pytest.approx(log_i_quadrature(2, 0.25, 0.5, 2.0, 3.0), abs=1e-10)


def test_i_estimate_and_proxy_brackets():
    for ell in (1, 2, 3):
        for p in (1.0, 2.0, 4.0):
            for a, b, c in i_parameter_sets(p, ell):
                r = [log_i_estimate_ratio(ell, a, b, c, zm) for zm in np.linspace(0, 4, 9)]
                assert max(r) - min(r) < math.log(100)
                prox = [log_i_quadrature(ell, a, b, c, zm) - log_i_proxy(ell, a, b, c, zm)
                        for zm in np.linspace(0, 4, 9)]
                assert max(prox) - min(prox) < math.log(100)


def test_parameter_sets():
    assert i_parameter_sets(1.0, 2) == [(0.25, 0.5, 0.0)]
    sets = i_parameter_sets(4.0, 3)
    assert sets[1] == pytest.approx((1 / 3, 2 / 3, 8 / 3))


@given(st.complex_numbers(max_magnitude=5), st.complex_numbers(max_magnitude=5), st.integers(1, 4))
def test_square_completion(z, w, ell):
    assert abs(square_completion_residual(z, w, ell)) <= 1e-12


def test_g0_sup_norm():
    for ell in (1, 2):
        for z in (0j, 1 + 0.5j, 2j):
            assert math.exp(log_g_factor_norm(z, ell, math.inf, "G0")) == pytest.approx(
                math.exp(abs(z) ** (2 * ell) / 8), rel=1e-8)


def test_g_norms_ell_one():
    for z in (0j, 1.2 - 0.4j, 2.5j):
        ref = math.sqrt(math.pi) * math.exp(abs(z) ** 2 / 8)
        fp = FockParams(1, 1, 2)
        assert g_factor_norms(z, fp, "G0") == pytest.approx(ref, rel=1e-10)
        assert math.exp(log_g_factor_norm(z, 1, 2, "G0", series=False)) == pytest.approx(ref, rel=1e-10)
        assert g_factor_norms(z, fp, "G1") == pytest.approx(ref / math.pi, rel=1e-10)
    with pytest.raises(FockDomainError):
        g_factor_norms(1j, FockParams(2, 1, 2), "G0")


def test_g1_quadrature_vs_series_ell_one_p_four():
    # for ell = 1, G1 = e^{w conj z/2}/pi, so its F^p norm is the G0 norm over pi
    z = 1.5 + 1j
    a = log_g_factor_norm(z, 1, 4 / 3, "G1")
    b = log_g_factor_norm(z, 1, 4 / 3, "G0") - math.log(math.pi)
    assert a == pytest.approx(b, abs=1e-10)


def test_factorization(rng):
    for ell in (1, 2, 3):
        w = rng.uniform(-1.5, 1.5, 1000) + 1j * rng.uniform(-1.5, 1.5, 1000)
        z = rng.uniform(-1.5, 1.5, 1000) + 1j * rng.uniform(-1.5, 1.5, 1000)
        k = kernel_eval(w, z, FockParams(1, ell))
        assert np.max(np.abs(g0(w, z, ell) * g1(w, z, ell) - k) / np.abs(k)) <= 1e-12
