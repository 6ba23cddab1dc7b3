import math
import warnings

import numpy as np
import pytest

from fockhankel.errors import FockDomainError, TailWarning
from fockhankel.fock import FockParams
from fockhankel.symbol import TaylorSymbol
from fockhankel.quad import (
    QuadratureSpec,
    bergman_project_mixed,
    bergman_project_quadrature,
    fock_p_norm,
    inner_product,
    inner_product_quadrature,
    integrate,
    polar_grid,
    reproduce_check,
    reproduce_quadrature,
)


def test_spec_validation():
    with pytest.raises(FockDomainError):
        QuadratureSpec(n_radial=4)
    with pytest.raises(FockDomainError):
        QuadratureSpec(n_angular=33)


def test_gaussian_integral():
    q = QuadratureSpec(64, 16, 8.0)
    z, _ = polar_grid(q)
    assert integrate(np.exp(-np.abs(z) ** 2), q) == pytest.approx(math.pi, rel=1e-13)


def test_fock_norms_of_one():
    assert fock_p_norm([1], FockParams(1, 1, 2)) == pytest.approx(math.sqrt(math.pi), rel=1e-12)
    assert fock_p_norm([1], FockParams(1, 1, 1)) == pytest.approx(2 * math.pi, rel=1e-12)
    assert fock_p_norm([1], FockParams(1, 1, math.inf)) == pytest.approx(1.0)


def test_p_norm_matches_inner_product():
    fp = FockParams(0.7, 2, 2)
    f = TaylorSymbol([1, -1j, 0.5, 0.3])
    assert fock_p_norm(f, fp) ** 2 == pytest.approx(inner_product(f, f, fp).real, rel=1e-11)


def test_tail_warning():
    with pytest.warns(TailWarning):
        fock_p_norm([1], FockParams(), QuadratureSpec(32, 16, 2.0))


def test_inner_product_quadrature(rng):
    for ell in (1, 2, 3):
        fp = FockParams(1.4, ell)
        f = TaylorSymbol(rng.normal(size=6) + 1j * rng.normal(size=6))
        g = TaylorSymbol(rng.normal(size=5) + 1j * rng.normal(size=5))
        a, b = inner_product(f, g, fp), inner_product_quadrature(f, g, fp)
        assert abs(a - b) <= 1e-11 * abs(a)


def test_mixed_projection():
    fp = FockParams(1, 1)
    # P(w^3 conj(w)) = ||w^3||^2/||w^2||^2 z^2 = 3 z^2
    proj = bergman_project_mixed(3, 1, fp)
    assert proj.degree == 2 and proj.coeff(2) == pytest.approx(3, rel=1e-14)
    assert bergman_project_mixed(1, 2, fp).is_zero()
    z0 = 0.6 - 0.3j
    got = bergman_project_quadrature(lambda w: w ** 3 * np.conj(w), z0, fp,
                                     QuadratureSpec(96, 32, 7.0))
    assert abs(got - 3 * z0 ** 2) < 1e-10


@pytest.mark.parametrize("alpha, ell", [(1.0, 1), (2.0, 2), (1.0, 3)])
@pytest.mark.parametrize("z0", [0j, 1 + 1j, 2j])
def test_reproducing_property(alpha, ell, z0):
    fp = FockParams(alpha, ell)
    got = reproduce_quadrature(z0, fp, degrees=tuple(range(11)))
    for m in range(11):
        assert abs(got[m] - z0 ** m) <= 1e-8 * (1 + abs(z0) ** m)


def test_reproduce_check_scalar():
    assert abs(reproduce_check(4, 1.5, FockParams(1, 2)) - 1.5 ** 4) < 1e-8 * 1.5 ** 4
