import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fockhankel.errors import FockDomainError
from fockhankel.fock import (
    FockParams,
    dilate,
    kernel_eval,
    kernel_pointwise_ratio,
    log_monomial_norm_sq,
    monomial_norm_sq,
    sup_norm_weighted,
)
from fockhankel.quad import inner_product
from fockhankel.symbol import TaylorSymbol


def test_params_validation():
    with pytest.raises(FockDomainError):
        FockParams(alpha=0)
    with pytest.raises(FockDomainError):
        FockParams(ell=1.5)
    with pytest.raises(FockDomainError):
        FockParams(p=0.5)
    assert FockParams(p=1).p_conjugate == math.inf
    assert FockParams(p=4).p_conjugate == pytest.approx(4 / 3)
    assert FockParams(p=math.inf).p_conjugate == 1


def test_monomial_norms():
    assert monomial_norm_sq(0, FockParams()) == pytest.approx(math.pi)
    assert monomial_norm_sq(3, FockParams()) == pytest.approx(6 * math.pi)
    # ell=2, alpha=1: pi/2 Gamma(1) for m=1
    assert monomial_norm_sq(1, FockParams(1, 2)) == pytest.approx(math.pi / 2)
    assert monomial_norm_sq(2, FockParams(2, 1)) == pytest.approx(math.pi / 8 * 2)
    with pytest.raises(OverflowError):
        monomial_norm_sq(400, FockParams())
    assert np.isfinite(log_monomial_norm_sq(400, FockParams()))


def test_kernel_ell_one(rng):
    z = rng.normal(size=20) + 1j * rng.normal(size=20)
    w = rng.normal(size=20) + 1j * rng.normal(size=20)
    k = kernel_eval(z, w, FockParams(2.0, 1))
    assert np.allclose(k, 2 / math.pi * np.exp(2 * z * np.conj(w)), rtol=1e-13)


def test_kernel_at_origin():
    for ell in (1, 2, 3):
        assert kernel_eval(0, 0, FockParams(1, ell)) == pytest.approx(ell / math.pi / math.gamma(1 / ell))


@given(st.integers(1, 3), st.floats(0.2, 5.0), st.complex_numbers(max_magnitude=1.5),
       st.complex_numbers(max_magnitude=1.5))
def test_kernel_dilation_law(ell, alpha, z, w):
    sc = alpha ** (1 / (2 * ell))
    lhs = kernel_eval(z, w, FockParams(alpha, ell))
    rhs = alpha ** (1 / ell) * kernel_eval(sc * z, sc * w, FockParams(1, ell))
    assert abs(lhs - rhs) <= 1e-11 * abs(rhs)


def test_kernel_series_definition():
    # K(z, w) = sum_m (z conj w)^m / ||z^m||^2
    fp = FockParams(1.5, 3)
    z, w = 0.8 + 0.4j, -0.3 + 0.9j
    m = np.arange(200)
    ref = np.sum((z * np.conj(w)) ** m / monomial_norm_sq(m, fp))
    assert abs(kernel_eval(z, w, fp) - ref) <= 1e-13 * abs(ref)


def test_kernel_overflow():
    with pytest.raises(OverflowError):
        kernel_eval(30.0, 30.0, FockParams())


def test_pointwise_ratio_bounded(rng):
    z = rng.uniform(-3, 3, 300) + 1j * rng.uniform(-3, 3, 300)
    w = rng.uniform(-3, 3, 300) + 1j * rng.uniform(-3, 3, 300)
    for ell in (1, 2, 3):
        r = kernel_pointwise_ratio(z, w, FockParams(1, ell))
        assert np.all(r >= 0) and np.max(r) < 10


@given(st.floats(0.2, 5.0), st.integers(1, 3))
def test_dilation_isometry(lam, ell):
    fp = FockParams(1.3, ell)
    f = TaylorSymbol([1, 2j, -0.5, 0.25])
    g = dilate(f, lam, fp, normalize=True)
    n1 = inner_product(f, f, fp).real
    n2 = inner_product(g, g, fp.replace(alpha=lam * fp.alpha)).real
    assert n2 == pytest.approx(n1, rel=1e-12)


def test_sup_norm_values():
    # |z|^m e^{-beta r^(2 ell)/2} peaks at r^(2 ell) = m/(beta ell)
    assert sup_norm_weighted([0, 0, 0, 0, 0, 1], 0.5, 1) == pytest.approx(
        10 ** 2.5 * math.exp(-2.5), rel=1e-9)
    assert sup_norm_weighted([0, 0, 1], 1.0, 2) == pytest.approx(math.exp(-0.5), rel=1e-9)
    assert sup_norm_weighted([1], 1.0, 1) == pytest.approx(1.0)
