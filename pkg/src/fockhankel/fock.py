"""Fock space parameters, monomial norms, the Bergman kernel and dilations.

The space ``F^{p,ell}_alpha`` consists of entire functions with
``|f(z)| exp(-alpha |z|**(2 ell) / 2)`` in ``L^p`` of Lebesgue area measure.
"""
from dataclasses import dataclass
import math
import warnings

import numpy as np
from scipy.optimize import minimize
from scipy.special import gammaln

from .errors import BoundaryWarning, FockDomainError
from .specfun import DEFAULT_CONTROL, combine_scaled, log_abs_parts, mittag_leffler_parts
from .symbol import TaylorSymbol, as_symbol

_LOG_MAX = math.log(np.finfo(float).max)


@dataclass(frozen=True)
class FockParams:
    """Weight strength ``alpha``, weight power ``ell`` and exponent ``p``.

    ``p = math.inf`` stands for the sup-norm space.
    """

    alpha: float = 1.0
    ell: int = 1
    p: float = 2.0

    def __post_init__(self):
        if not self.alpha > 0 or not math.isfinite(self.alpha):
            raise FockDomainError(f"alpha must be positive and finite, got {self.alpha}")
        if int(self.ell) != self.ell or self.ell < 1:
            raise FockDomainError(f"ell must be a positive integer, got {self.ell}")
        object.__setattr__(self, "ell", int(self.ell))
        if not 1 <= self.p <= math.inf:
            raise FockDomainError(f"p must lie in [1, inf], got {self.p}")

    @property
    def p_conjugate(self):
        """Hoelder conjugate exponent ``p'``."""
        if self.p == 1:
            return math.inf
        if self.p == math.inf:
            return 1.0
        return self.p / (self.p - 1)

    def replace(self, **kw):
        d = {"alpha": self.alpha, "ell": self.ell, "p": self.p}
        d.update(kw)
        return FockParams(**d)


def log_monomial_norm_sq(m, fp):
    """``log ||z**m||**2 = log(pi / (ell alpha**((m+1)/ell)) Gamma((m+1)/ell))``."""
    m = np.asarray(m, dtype=float)
    if np.any(m < 0):
        raise FockDomainError("monomial degree must be nonnegative")
    s = (m + 1) / fp.ell
    out = math.log(math.pi / fp.ell) - s * math.log(fp.alpha) + gammaln(s)
    return float(out) if out.ndim == 0 else out


def monomial_norm_sq(m, fp):
    """``||z**m||**2`` in ``F^{2,ell}_alpha``; raises ``OverflowError`` past double range."""
    lv = log_monomial_norm_sq(m, fp)
    if np.any(np.asarray(lv) > _LOG_MAX):
        raise OverflowError("monomial norm exceeds double range; use log_monomial_norm_sq")
    return np.exp(lv) if isinstance(lv, np.ndarray) else math.exp(lv)


def kernel_prefactor(fp):
    return fp.ell * fp.alpha ** (1.0 / fp.ell) / math.pi


def kernel_parts(z, w, fp, ctl=DEFAULT_CONTROL):
    """Pieces of ``K(z, w) = pref * (lead * exp(x) + rem)``.

    Returns ``pref, lead, rem, x`` with ``x = alpha (z conj(w))**ell``.
    """
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    lam = fp.alpha ** (1.0 / fp.ell) * z * np.conj(w)
    lead, rem, x, _ = mittag_leffler_parts(fp.ell, lam, ctl)
    return kernel_prefactor(fp), lead, rem, x


def kernel_eval(z, w, fp, ctl=DEFAULT_CONTROL):
    """Bergman kernel ``K^ell_alpha(z, w)`` of ``F^{2,ell}_alpha``.

    Broadcasts over ``z`` and ``w``.  Raises ``OverflowError`` when the value
    leaves double range (see :func:`kernel_parts`).
    """
    pref, lead, rem, x = kernel_parts(z, w, fp, ctl)
    big = (lead != 0) & (x.real > _LOG_MAX - 50)
    if np.any(big):
        raise OverflowError("kernel value exceeds double range; use kernel_parts")
    val = pref * combine_scaled(lead, rem, x, 0.0)
    return complex(val) if val.ndim == 0 else val


def log_abs_kernel(z, w, fp, ctl=DEFAULT_CONTROL):
    pref, lead, rem, x = kernel_parts(z, w, fp, ctl)
    return math.log(pref) + log_abs_parts(lead, rem, x)


def kernel_pointwise_ratio(z, w, fp, ctl=DEFAULT_CONTROL):
    """``|K(z,w)| / ((1 + |z w|)**(ell-1) (exp(alpha Re((z conj w)**ell)) + 1))``."""
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    pref, lead, rem, x = kernel_parts(z, w, fp, ctl)
    shift = np.maximum(x.real, 0.0)
    num = pref * np.abs(combine_scaled(lead, rem, x, shift))
    den = (1 + np.abs(z * w)) ** (fp.ell - 1) * (np.exp(x.real - shift) + np.exp(-shift))
    return num / den


def dilate(f, lam, fp, normalize=False):
    """Coefficients of ``f(lam**(1/(2 ell)) z)``, optionally times ``lam**(1/(p ell))``.

    With ``normalize=True`` this is an isometry ``F^{p,ell}_alpha -> F^{p,ell}_{lam alpha}``.
    """
    if not lam > 0:
        raise FockDomainError("dilation parameter must be positive")
    f = as_symbol(f)
    m = np.arange(f.coeffs.size)
    c = f.coeffs * lam ** (m / (2.0 * fp.ell))
    if normalize and fp.p != math.inf:
        c = c * lam ** (1.0 / (fp.p * fp.ell))
    return TaylorSymbol(c)


def weighted_sup(log_modulus, r_hi, n_radial=400, n_angular=256, n_polish=4):
    """Supremum over the plane of ``exp(log_modulus(z))`` by grid search plus polishing.

    ``log_modulus`` maps a complex array to real log-values.  The coarse grid
    is uniform in angle and mixes linear and logarithmic radii up to
    ``r_hi``; the best few grid points are refined with Nelder-Mead in the
    Cartesian plane.

    Returns
    -------
    value : float
        Logarithm of the supremum.
    argmax : complex
    """
    radii = np.unique(np.concatenate([
        [0.0],
        np.linspace(0.0, r_hi, n_radial // 2),
        np.geomspace(1e-3 * r_hi, r_hi, n_radial - n_radial // 2),
    ]))
    theta = 2 * np.pi * np.arange(n_angular) / n_angular
    grid = radii[:, None] * np.exp(1j * theta)[None, :]
    vals = np.asarray(log_modulus(grid), dtype=float)
    vals = np.where(np.isnan(vals), -np.inf, vals)
    flat = np.argsort(vals.ravel())[::-1][:n_polish]
    best_v, best_z = -np.inf, 0j
    for idx in flat:
        i, _ = np.unravel_index(idx, vals.shape)
        z0 = grid.ravel()[idx]
        if i == radii.size - 1:
            warnings.warn(
                f"supremum attained on the grid boundary r={r_hi:g}; enlarge the grid",
                BoundaryWarning, stacklevel=2,
            )

        def obj(xy):
            v = log_modulus(np.array([xy[0] + 1j * xy[1]]))[0]
            return -v if np.isfinite(v) else np.inf

        res = minimize(obj, [z0.real, z0.imag], method="Nelder-Mead",
                       options={"xatol": 1e-9, "fatol": 1e-14, "maxiter": 2000})
        v = -res.fun if res.fun < -vals.ravel()[idx] else vals.ravel()[idx]
        zbest = complex(res.x[0], res.x[1]) if res.fun < -vals.ravel()[idx] else z0
        if v > best_v:
            best_v, best_z = float(v), zbest
    return best_v, best_z


def default_sup_radius(degree, beta, ell):
    """Outer radius covering the maximizer ``r**(2 ell) = m / (beta ell)`` with margin."""
    return 1.5 * (max(degree, 1) / (beta * ell)) ** (1.0 / (2 * ell)) + 1.0


def sup_norm_weighted(b, beta, ell, n_radial=400, n_angular=256, r_hi=None):
    """``sup_z |b(z)| exp(-beta |z|**(2 ell) / 2)`` for a polynomial symbol.

    With ``beta = alpha / 2`` this is the norm of ``F^{inf,ell}_{alpha/2}``.
    """
    b = as_symbol(b)
    if not beta > 0:
        raise FockDomainError("beta must be positive")
    if b.is_zero():
        return 0.0
    if r_hi is None:
        r_hi = default_sup_radius(b.degree, beta, ell)

    def logmod(z):
        r = np.abs(z)
        with np.errstate(divide="ignore"):
            return np.log(np.abs(b(z))) - beta * r ** (2 * ell) / 2

    v, _ = weighted_sup(logmod, r_hi, n_radial, n_angular)
    return math.exp(v)
