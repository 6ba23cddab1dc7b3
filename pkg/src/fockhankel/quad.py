"""Polar quadrature over the complex plane and the Bergman projection.

Inner products of polynomials are computed exactly on the coefficient side;
quadrature is kept as an independent cross-check and for quantities with no
closed form.
"""
from dataclasses import dataclass
import math
import warnings

import numpy as np
from scipy.special import gammaln, roots_laguerre

from .errors import FockDomainError, TailWarning
from .fock import (
    kernel_parts,
    log_monomial_norm_sq,
    monomial_norm_sq,
    sup_norm_weighted,
)
from .specfun import DEFAULT_CONTROL, combine_scaled
from .symbol import TaylorSymbol, as_symbol

GAUSS_LEGENDRE = "gauss-legendre"
GAUSS_LAGUERRE = "gauss-laguerre"


@dataclass(frozen=True)
class QuadratureSpec:
    """Tensor polar grid: a radial rule times the trapezoid rule in angle.

    ``gauss-legendre`` integrates over ``[0, r_max]``.  ``gauss-laguerre``
    substitutes ``t = r**2`` and integrates over the whole half line; it is
    only accurate for integrands with Gaussian decay, and ``r_max`` is then
    used only for tail diagnostics.
    """

    n_radial: int = 128
    n_angular: int = 128
    r_max: float = 8.0
    radial_rule: str = GAUSS_LEGENDRE

    def __post_init__(self):
        if self.n_radial < 8 or self.n_angular < 8:
            raise FockDomainError("need n_radial >= 8 and n_angular >= 8")
        if self.n_angular % 2:
            raise FockDomainError("n_angular must be even")
        if not self.r_max > 0:
            raise FockDomainError("r_max must be positive")
        if self.radial_rule not in (GAUSS_LEGENDRE, GAUSS_LAGUERRE):
            raise FockDomainError(f"unknown radial rule {self.radial_rule!r}")
        if self.radial_rule == GAUSS_LAGUERRE and self.n_radial > 150:
            raise FockDomainError("gauss-laguerre weights underflow beyond 150 nodes")

    def radial(self):
        """Radial nodes and weights, including the Jacobian ``r``."""
        if self.radial_rule == GAUSS_LEGENDRE:
            x, w = np.polynomial.legendre.leggauss(self.n_radial)
            r = 0.5 * self.r_max * (x + 1)
            return r, 0.5 * self.r_max * w * r
        t, w = roots_laguerre(self.n_radial)
        return np.sqrt(t), 0.5 * w * np.exp(t)

    def angular(self):
        theta = 2 * np.pi * np.arange(self.n_angular) / self.n_angular
        return theta, np.full(self.n_angular, 2 * np.pi / self.n_angular)

    def refined(self, factor=2):
        return QuadratureSpec(self.n_radial * factor, self.n_angular * factor,
                              self.r_max, self.radial_rule)


def polar_grid(q):
    """Grid points ``z`` and area weights, both shaped ``(n_radial, n_angular)``."""
    r, wr = q.radial()
    theta, wt = q.angular()
    z = r[:, None] * np.exp(1j * theta)[None, :]
    return z, wr[:, None] * wt[None, :]


def integrate(fvals, q):
    """Integral over the plane of values sampled on :func:`polar_grid`."""
    fvals = np.asarray(fvals)
    expected = (q.n_radial, q.n_angular)
    if fvals.shape[-2:] != expected:
        raise FockDomainError(f"samples have shape {fvals.shape}, grid is {expected}")
    _, w = polar_grid(q)
    out = np.sum(fvals * w, axis=(-2, -1))
    return out.item() if np.ndim(out) == 0 else out


def default_radius(fp, degree):
    """Radius past which ``|z|**(2d) exp(-alpha |z|**(2 ell))`` is negligible."""
    return (2.0 * (degree + 20) / (fp.alpha * fp.ell)) ** (1.0 / (2 * fp.ell)) + 2.0


def default_quadrature(fp, degree, n_radial=160, n_angular=None):
    if n_angular is None:
        n_angular = max(64, 2 * (2 * degree + 32))
    return QuadratureSpec(n_radial, n_angular, default_radius(fp, degree))


def _check_tail(integrand_at, q, total, rel_tol, what):
    theta, _ = q.angular()
    ring = q.r_max * np.exp(1j * theta)
    edge = float(np.max(np.abs(integrand_at(ring)))) * 2 * np.pi * q.r_max
    if edge > rel_tol * abs(total):
        warnings.warn(
            f"{what}: integrand at r_max={q.r_max:g} is {edge:.3g}, "
            f"above {rel_tol:g} x integral",
            TailWarning, stacklevel=3,
        )


def fock_p_norm(f, fp, q=None, tail_tol=1e-12):
    """``(int |f(z) exp(-alpha |z|**(2 ell)/2)|**p dA)**(1/p)`` by quadrature.

    ``p = inf`` is delegated to :func:`fockhankel.fock.sup_norm_weighted`.
    """
    f = as_symbol(f)
    if fp.p == math.inf:
        return sup_norm_weighted(f, fp.alpha, fp.ell)
    if q is None:
        q = default_quadrature(fp, f.degree)
    p = fp.p

    def integrand(z):
        return np.abs(f(z) * np.exp(-fp.alpha * np.abs(z) ** (2 * fp.ell) / 2)) ** p

    z, _ = polar_grid(q)
    total = integrate(integrand(z), q)
    _check_tail(integrand, q, total, tail_tol, "fock_p_norm")
    return total ** (1.0 / p)


def inner_product(f, g, fp):
    """``<f, g> = int f conj(g) exp(-alpha |z|**(2 ell)) dA``, exact via orthogonality."""
    f, g = as_symbol(f), as_symbol(g)
    n = min(f.coeffs.size, g.coeffs.size)
    if n == 0:
        return 0j
    m = np.arange(n)
    return complex(np.sum(f.coeffs[:n] * np.conj(g.coeffs[:n]) * monomial_norm_sq(m, fp)))


def inner_product_quadrature(f, g, fp, q=None):
    """Quadrature twin of :func:`inner_product`."""
    f, g = as_symbol(f), as_symbol(g)
    if q is None:
        q = default_quadrature(fp, max(f.degree, g.degree))
    z, _ = polar_grid(q)
    return complex(integrate(f(z) * np.conj(g(z)) * np.exp(-fp.alpha * np.abs(z) ** (2 * fp.ell)), q))


def bergman_project_mixed(j, k, fp):
    """Bergman projection of ``w**j conj(w)**k``.

    Equals ``||w**j||**2 / ||w**(j-k)||**2 * z**(j-k)`` for ``j >= k`` and 0 otherwise.
    """
    if j < 0 or k < 0:
        raise FockDomainError("exponents must be nonnegative")
    if j < k:
        return TaylorSymbol([0])
    coef = math.exp(log_monomial_norm_sq(j, fp) - log_monomial_norm_sq(j - k, fp))
    return TaylorSymbol.monomial(j - k, coef)


def weighted_kernel_grid(z0, fp, q, ctl=DEFAULT_CONTROL):
    """``K(z0, w) exp(-alpha |w|**(2 ell))`` on the polar grid, without overflow."""
    w, _ = polar_grid(q)
    pref, lead, rem, x = kernel_parts(z0, w, fp, ctl)
    weight_exp = fp.alpha * np.abs(w) ** (2 * fp.ell)
    return w, pref * combine_scaled(lead, rem, x, weight_exp)


def bergman_project_quadrature(phi, z0, fp, q, ctl=DEFAULT_CONTROL):
    """``P phi(z0) = int K(z0, w) phi(w) exp(-alpha |w|**(2 ell)) dA(w)`` by quadrature.

    ``phi`` is a callable on complex arrays.
    """
    w, kw = weighted_kernel_grid(z0, fp, q, ctl)
    return complex(integrate(kw * phi(w), q))


def kernel_mode_cutoff(z0_abs, k, fp, eps=1e-17):
    """Highest angular frequency that matters in ``K(z0, w) |w|**k exp(-alpha |w|**(2 ell))``.

    Mode ``n`` of the kernel, integrated radially against ``r**k`` and the
    weight, has size ``|z0|**n * Gamma((n + k + 2)/(2 ell)) / Gamma((n + 1)/ell)``
    up to factors independent of ``n``; modes below ``eps`` times the largest
    one are dropped.
    """
    n = np.arange(0, 20000, dtype=float)
    a = fp.alpha ** (1.0 / fp.ell) * max(z0_abs, 1e-300)
    s = (n + k + 2) / (2 * fp.ell)
    logm = n * math.log(a) + gammaln(s) - s * math.log(fp.alpha) - gammaln((n + 1) / fp.ell)
    keep = np.flatnonzero(logm >= logm.max() + math.log(eps))
    return int(keep[-1])


def kernel_quadrature(z0, fp, degree, eps=1e-17):
    """Grid resolving ``K(z0, w) w**m exp(-alpha |w|**(2 ell))`` for ``m <= degree``.

    The trapezoid rule in angle is exact for frequencies below ``n_angular``,
    so ``n_angular`` exceeds the largest significant kernel mode; the radius
    covers the peak of the highest mode.
    """
    n_hi = kernel_mode_cutoff(abs(z0), degree, fp, eps)
    n_angular = 2 * ((n_hi + degree + 16) // 2 + 1)
    r_max = default_radius(fp, n_hi + degree) + 1.0
    n_radial = max(96, (n_hi + degree) // 2 + 96)
    return QuadratureSpec(n_radial, n_angular, r_max)


_LD_PI = np.arccos(np.longdouble(-1))


def angular_kernel_sums(z0, fp, q, degrees, ctl=DEFAULT_CONTROL):
    """Angular sums ``sum_theta K(z0, w) w**m exp(-alpha |w|**(2 ell)) dtheta`` per radius.

    The sums cancel down to a tiny fraction of the integrand's mass, so the
    exponential part of the kernel, the grid angles and the accumulation are
    carried in extended precision (``np.longdouble``); the Mittag-Leffler
    remainder is small and stays in double.

    Returns an array shaped ``(len(degrees), n_radial)`` and the radial nodes
    and weights.
    """
    r, wr = q.radial()
    w_dbl, _ = polar_grid(q)
    pref, lead, rem, _ = kernel_parts(z0, w_dbl, fp, ctl)

    n = q.n_angular
    theta = 2 * _LD_PI * np.arange(n, dtype=np.longdouble) / n
    r_ld = r.astype(np.longdouble)[:, None]
    w = r_ld * (np.cos(theta) + 1j * np.sin(theta))[None, :]
    a = np.longdouble(fp.alpha) ** (np.longdouble(1) / fp.ell)
    lam = a * np.clongdouble(z0) * np.conj(w)
    lam_pow = np.ones_like(lam)
    for _ in range(fp.ell - 1):
        lam_pow = lam_pow * lam
    x = lam_pow * lam
    weight_exp = np.longdouble(fp.alpha) * r_ld ** (2 * fp.ell)
    principal = lead != 0
    main = np.where(principal, fp.ell * lam_pow * np.exp(np.where(principal, x, 0) - weight_exp), 0)
    vals = np.longdouble(pref) * (main + rem * np.exp(-weight_exp))

    dtheta = 2 * _LD_PI / n
    out = np.empty((len(degrees), q.n_radial), dtype=np.clongdouble)
    for i, m in enumerate(degrees):
        out[i] = np.sum(vals * w ** m, axis=1) * dtheta
    return out, r, wr


def reproduce_quadrature(z0, fp, q=None, degrees=(0,), ctl=DEFAULT_CONTROL):
    """``P(w**m)(z0)`` by quadrature for every ``m`` in ``degrees`` on one kernel grid."""
    degrees = list(degrees)
    if q is None:
        q = kernel_quadrature(z0, fp, max(degrees))
    sums, r, wr = angular_kernel_sums(z0, fp, q, degrees, ctl)
    out = np.array([complex(np.sum(s * wr.astype(np.longdouble))) for s in sums])
    theta, _ = q.angular()
    ring = q.r_max * np.exp(1j * theta)
    _, kr = weighted_kernel_grid_at(z0, ring, fp, ctl)
    edge = float(np.max(np.abs(kr) * q.r_max ** max(degrees))) * 2 * np.pi * q.r_max
    if edge > 1e-14:
        warnings.warn(f"reproduce: integrand not negligible at r_max={q.r_max:g}",
                      TailWarning, stacklevel=2)
    return out


def weighted_kernel_grid_at(z0, w, fp, ctl=DEFAULT_CONTROL):
    pref, lead, rem, x = kernel_parts(z0, w, fp, ctl)
    return w, pref * combine_scaled(lead, rem, x, fp.alpha * np.abs(w) ** (2 * fp.ell))


def reproduce_check(m, z0, fp, q=None, ctl=DEFAULT_CONTROL):
    """``int K(z0, w) w**m exp(-alpha |w|**(2 ell)) dA(w)``; should equal ``z0**m``."""
    return complex(reproduce_quadrature(z0, fp, q, degrees=(m,), ctl=ctl)[0])
