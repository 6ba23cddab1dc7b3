"""Scalar special functions: log-Gamma, Gamma ratios and E_{1/l,1/l}.

The Mittag-Leffler function used throughout the package is

    E(lam) = sum_k lam**k / Gamma((k + 1) / ell),   ell a positive integer.

Near the origin it is summed directly.  Away from the origin the series
cancels catastrophically outside the exponential sector, so it is split
exactly along residue classes of ``k mod ell``:

    E(lam) = [lam in principal sector] * ell * lam**(ell-1) * exp(lam**ell)
             + sum_{j<ell-1} lam**j * R_j(lam**ell)

where ``R_j(x) = sin(pi b)/pi * int_0^inf exp(-t) t**(1-b) / (x + t) dt`` with
``b = (j + 1)/ell``.  The integrals are smooth once ``|x|`` is moderate and
are computed with generalized Gauss-Laguerre nodes on a ray tilted away from
the pole ``t = -x``.  Callers that need values beyond double range use
:func:`mittag_leffler_parts`, which returns the two pieces separately.
"""
from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np
from scipy.special import gammaln, logsumexp, rgamma, roots_genlaguerre

from .errors import FockDomainError, SeriesTruncationError

_TINY = np.finfo(float).tiny

BRANCH_SERIES = "series"
BRANCH_SPLIT = "split"
BRANCH_ASYMPTOTIC = "asymptotic"


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for the infinite series in the package.

    Parameters
    ----------
    max_terms : int
        Hard cap on the number of summed terms.
    rel_tol : float
        A series stops once the last term is below ``rel_tol`` times the
        running sum.
    asym_threshold : float
        ``|lam|`` above which the leading exponential term alone may be
        returned, provided the remainder is provably below ``rel_tol``.
    split_threshold : float
        ``|lam**ell|`` above which the exact exponential/remainder split
        replaces the plain series.
    n_laguerre : int
        Number of Gauss-Laguerre nodes for the remainder integrals.
    """

    max_terms: int = 100_000
    rel_tol: float = 1e-14
    asym_threshold: float = 30.0
    split_threshold: float = 4.0
    n_laguerre: int = 128

    def __post_init__(self):
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise FockDomainError(f"max_terms must be a positive integer, got {self.max_terms}")
        if not 0.0 < self.rel_tol < 1.0:
            raise FockDomainError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if not self.asym_threshold > 0:
            raise FockDomainError(f"asym_threshold must be positive, got {self.asym_threshold}")
        if not self.split_threshold > 0:
            raise FockDomainError(f"split_threshold must be positive, got {self.split_threshold}")
        if self.n_laguerre < 8:
            raise FockDomainError("n_laguerre must be at least 8")


DEFAULT_CONTROL = SeriesControl()


def log_gamma(x):
    """Natural logarithm of Gamma on the positive axis.

    Accepts scalars or arrays; raises :class:`FockDomainError` if any entry is
    not strictly positive.
    """
    arr = np.asarray(x, dtype=float)
    if np.any(~(arr > 0)):
        raise FockDomainError("log_gamma is only defined here for x > 0")
    out = gammaln(arr)
    return float(out) if out.ndim == 0 else out


def stirling_ratio(s, t, delta):
    """Return ``Gamma(s + t) / (s**t * Gamma(s))`` for ``s >= 2 delta``, ``|t| <= delta``."""
    if not delta > 0:
        raise FockDomainError("delta must be positive")
    if s < 2 * delta or abs(t) > delta:
        raise FockDomainError(f"need s >= 2*delta and |t| <= delta; got s={s}, t={t}, delta={delta}")
    return math.exp(gammaln(s + t) - t * math.log(s) - gammaln(s))


def log_exp_weighted_sum(s, a, ctl=DEFAULT_CONTROL):
    """Logarithm of ``sum_k s**k / k! / (k + 1)**a`` for ``s >= 0``."""
    if s < 0:
        raise FockDomainError("s must be nonnegative")
    if s == 0:
        return 0.0
    log_s = math.log(s)
    # the terms peak near k = s; past the peak they decay faster than geometrically
    n = int(s + 12 * math.sqrt(s) + 60)
    while True:
        n = min(n, ctl.max_terms)
        k = np.arange(n, dtype=float)
        logt = k * log_s - gammaln(k + 1) - a * np.log1p(k)
        total = logsumexp(logt)
        if logt[-1] - total < math.log(ctl.rel_tol) and k[-1] > s:
            return float(total)
        if n >= ctl.max_terms:
            raise SeriesTruncationError(
                "exp_weighted_sum did not converge", partial=float(np.exp(total)), n_terms=n
            )
        n *= 2


def exp_weighted_sum(s, a, ctl=DEFAULT_CONTROL):
    """``f_a(s) = sum_k s**k / k! / (k + 1)**a``."""
    return math.exp(log_exp_weighted_sum(s, a, ctl))


# --------------------------------------------------------------------------
# Mittag-Leffler E_{1/ell, 1/ell}


def int_power(z, n):
    """``z**n`` for a nonnegative integer ``n`` by repeated multiplication."""
    out = np.ones_like(z)
    for _ in range(n):
        out = out * z
    return out


@lru_cache(maxsize=None)
def _laguerre(n, a):
    nodes, weights = roots_genlaguerre(n, a)
    return nodes, weights


def _principal_arg(x):
    # the negative real axis belongs to the upper side, arg = +pi
    ang = np.angle(x)
    return np.where((x.imag == 0) & (x.real < 0), np.pi, ang)


def _in_principal_sector(lam, x, ell):
    """True where ``lam`` is the principal ``ell``-th root of ``x``."""
    shift = (np.angle(lam) - _principal_arg(x) / ell) * ell / (2 * np.pi)
    return np.mod(np.rint(shift), ell) == 0


def _remainder(beta, x, n_nodes, chunk=4096):
    """``sin(pi b)/pi * int_0^inf exp(-t) t**(1-b) / (x + t) dt``.

    The ray of integration is rotated by +-pi/4 to the side away from the
    pole at ``t = -x``; Cauchy's theorem leaves the value unchanged.
    """
    x = np.asarray(x, dtype=complex)
    flat = x.ravel()
    out = np.empty_like(flat)
    nodes, weights = _laguerre(n_nodes, 1.0 - beta)
    c = math.cos(math.pi / 4)
    pref = math.sin(math.pi * beta) / math.pi / c ** (2.0 - beta)
    for start in range(0, flat.size, chunk):
        xs = flat[start:start + chunk]
        th = np.where(xs.imag >= 0, math.pi / 4, -math.pi / 4)[:, None]
        e = np.exp(1j * th)
        s = nodes[None, :] / c
        f = np.exp(-1j * s * np.sin(th)) * e ** (2.0 - beta) / (xs[:, None] + s * e)
        out[start:start + chunk] = pref * (f @ weights)
    return out.reshape(x.shape)


def _series(ell, lam, ctl):
    """Kahan-compensated direct summation, vectorized over ``lam``."""
    total = np.zeros_like(lam)
    comp = np.zeros_like(lam)
    power = np.ones_like(lam)
    for k in range(ctl.max_terms):
        term = power * rgamma((k + 1) / ell)
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        if k >= ell and np.all(np.abs(term) <= ctl.rel_tol * (np.abs(total) + _TINY)):
            return total
        power = power * lam
    raise SeriesTruncationError(
        f"Mittag-Leffler series did not converge in {ctl.max_terms} terms",
        partial=total, n_terms=ctl.max_terms,
    )


def mittag_leffler_series(ell, lam, ctl=DEFAULT_CONTROL):
    """Plain series for ``E_{1/ell,1/ell}``; accurate only where it does not cancel."""
    lam = np.asarray(lam, dtype=complex)
    out = _series(int(ell), lam.ravel(), ctl).reshape(lam.shape)
    return complex(out) if out.ndim == 0 else out


def mittag_leffler_parts(ell, lam, ctl=DEFAULT_CONTROL):
    """Split ``E_{1/ell,1/ell}(lam) = lead * exp(x) + rem`` with ``x = lam**ell``.

    Returns
    -------
    lead, rem, x : ndarray of complex
        ``lead`` is ``ell * lam**(ell - 1)`` in the principal sector and 0
        elsewhere.
    branch : ndarray of str
        ``"series"``, ``"split"`` or ``"asymptotic"`` per entry.
    """
    ell = int(ell)
    if ell < 1:
        raise FockDomainError("ell must be a positive integer")
    lam = np.asarray(lam, dtype=complex)
    shape = lam.shape
    lam = lam.ravel()
    x = int_power(lam, ell)
    absx = np.abs(x)
    lead = np.zeros_like(lam)
    rem = np.zeros_like(lam)
    branch = np.full(lam.shape, BRANCH_SPLIT, dtype=object)

    small = absx <= ctl.split_threshold
    if np.any(small):
        rem[small] = _series(ell, lam[small], ctl)
        branch[small] = BRANCH_SERIES

    big = ~small
    if np.any(big):
        lb, xb = lam[big], x[big]
        principal = _in_principal_sector(lb, xb, ell)
        lead_b = np.where(principal, ell * int_power(lb, ell - 1), 0.0)
        absl = np.abs(lb)
        with np.errstate(divide="ignore"):
            # |rem| <= 4 ell |lam|**(ell-2) / |x|; drop it once it is below rel_tol
            negligible = (
                principal
                & (absl > ctl.asym_threshold)
                & (np.abs(np.angle(lb)) <= np.pi / (2 * ell))
                & (xb.real >= np.log(4.0 / (ctl.rel_tol * absl ** (ell + 1))))
            )
        rem_b = np.zeros_like(lb)
        need = ~negligible
        if ell > 1 and np.any(need):
            acc = np.zeros(int(need.sum()), dtype=complex)
            lpow = np.ones_like(acc)
            for j in range(ell - 1):
                acc += lpow * _remainder((j + 1) / ell, xb[need], ctl.n_laguerre)
                lpow = lpow * lb[need]
            rem_b[need] = acc
        lead[big] = lead_b
        rem[big] = rem_b
        branch[big] = np.where(negligible, BRANCH_ASYMPTOTIC, BRANCH_SPLIT)

    return lead.reshape(shape), rem.reshape(shape), x.reshape(shape), branch.reshape(shape)


def combine_scaled(lead, rem, x, shift):
    """``exp(-shift) * (lead * exp(x) + rem)`` without intermediate overflow."""
    lead, rem, x = np.broadcast_arrays(lead, rem, x)
    out = rem * np.exp(-np.asarray(shift, dtype=float))
    nz = lead != 0
    if np.any(nz):
        sh = np.broadcast_to(shift, x.shape)
        out = np.array(out, dtype=complex)
        out[nz] = out[nz] + lead[nz] * np.exp(x[nz] - sh[nz])
    return out


def log_abs_parts(lead, rem, x):
    """``log|lead * exp(x) + rem|`` evaluated in log domain."""
    lead, rem, x = np.broadcast_arrays(lead, rem, x)
    shift = np.where(lead != 0, np.maximum(x.real, 0.0), 0.0)
    with np.errstate(divide="ignore"):
        return shift + np.log(np.abs(combine_scaled(lead, rem, x, shift)))


def mittag_leffler(ell, lam, ctl=DEFAULT_CONTROL, *, return_branch=False):
    """Evaluate ``E_{1/ell,1/ell}(lam)`` for scalar or array ``lam``.

    Raises ``OverflowError`` if the value exceeds double range; use
    :func:`mittag_leffler_parts` in that regime.
    """
    lead, rem, x, branch = mittag_leffler_parts(ell, lam, ctl)
    with np.errstate(over="ignore", invalid="ignore"):
        val = rem + np.where(lead != 0, lead * np.exp(np.where(lead != 0, x, 0)), 0)
    if not np.all(np.isfinite(val)):
        raise OverflowError("Mittag-Leffler value exceeds double range")
    if val.ndim == 0:
        val, branch = complex(val), str(branch)
    return (val, branch) if return_branch else val
