"""Checkable forms of the analytic estimates.

Covers the I-integral, the norms of the two kernel factors ``G0`` and
``G1``, the square-completion identity, the Gamma sum ``S(m)`` with its
five-part split, and the tail bound for binomial coefficients.
"""
from dataclasses import dataclass
import math

import mpmath
import numpy as np
from scipy import integrate as spi
from scipy.special import gammaln, i0e, logsumexp

from .errors import FockDomainError, SeriesTruncationError
from .fock import FockParams, kernel_parts, weighted_sup
from .quad import QuadratureSpec, integrate, polar_grid
from .specfun import DEFAULT_CONTROL

# --------------------------------------------------------------------------
# Gamma sum


def _gamma_sum_terms(m, ell, k):
    num = gammaln((m + 2 - ell) / ell)
    return num - gammaln((k + 1) / ell) - gammaln((m - k + 1) / ell)


def gamma_sum(m, ell):
    """``log S(m)`` with ``S(m) = sum_k Gamma((m+2-ell)/ell) / (Gamma((k+1)/ell) Gamma((m-k+1)/ell))``."""
    if m + 2 - ell < 1:
        raise FockDomainError(f"gamma_sum needs m + 2 - ell >= 1, got m={m}, ell={ell}")
    return float(logsumexp(_gamma_sum_terms(m, ell, np.arange(m + 1))))


def gamma_sum_log_ratio(m, ell):
    """``log(S(m) / 2**(m/ell))``."""
    return gamma_sum(m, ell) - (m / ell) * math.log(2.0)


@dataclass(frozen=True)
class GammaSumBreakdown:
    """``S(m)`` and its five pieces, all as logarithms.

    With ``m = n ell + r`` and ``k = j ell + s``: ``S1`` is ``j = 0``, ``S2``
    is ``j = n`` (``s <= r``), and ``S3``, ``S4``, ``S5`` cover
    ``1 <= j <= n/4``, ``n/4 < j < 3n/4`` and ``3n/4 <= j <= n-1``.
    """

    m: int
    ell: int
    total: float
    parts: tuple
    ratio_to_2_pow: float

    @property
    def recombined(self):
        return float(logsumexp(self.parts))

    @property
    def s4_dominates(self):
        others = [p for i, p in enumerate(self.parts) if i != 3]
        return self.parts[3] >= float(logsumexp(others))


def gamma_sum_decomposed(m, ell):
    n, r = divmod(m, ell)
    if n < 8:
        raise FockDomainError(f"decomposition needs n = m // ell >= 8, got n={n}")
    k = np.arange(m + 1)
    j = k // ell
    logt = _gamma_sum_terms(m, ell, k)
    masks = [
        j == 0,
        j == n,
        (j >= 1) & (4 * j <= n),
        (4 * j > n) & (4 * j < 3 * n),
        (4 * j >= 3 * n) & (j <= n - 1),
    ]
    parts = tuple(float(logsumexp(logt[mk])) if mk.any() else -math.inf for mk in masks)
    total = float(logsumexp(logt))
    return GammaSumBreakdown(m, ell, total, parts, math.exp(total - (m / ell) * math.log(2.0)))


def s4_dominance_threshold(ell, m_max):
    """Smallest ``m0 >= 8 ell`` with ``S4`` dominating for every ``m`` in ``[m0, m_max]``.

    Returns ``None`` if it fails at ``m_max``.
    """
    m0 = None
    for m in range(m_max, 8 * ell - 1, -1):
        if not gamma_sum_decomposed(m, ell).s4_dominates:
            break
        m0 = m
    return m0


# --------------------------------------------------------------------------
# Chernoff bound


def chernoff_check(n):
    """``sum_{i <= n/4} C(n, i) <= 2**n exp(-n/8)`` with exact left side.

    Returns ``(lhs, rhs, holds)``; ``lhs`` is a Python integer and the
    comparison is carried out at 60 significant digits.
    """
    if n < 0:
        raise FockDomainError("n must be nonnegative")
    lhs, row = 0, 1
    for i in range(n // 4 + 1):
        lhs += row
        row = row * (n - i) // (i + 1)
    with mpmath.workdps(60):
        rhs = mpmath.mpf(2) ** n * mpmath.exp(-mpmath.mpf(n) / 8)
        holds = mpmath.mpf(lhs) <= rhs
    return lhs, float(rhs), bool(holds)


# --------------------------------------------------------------------------
# The I-integral
#
#   I(z) = int |exp(a (z conj w)**ell)|**2 exp(-b |w|**(2 ell)) (1 + |w|)**c dA(w)
#   J(z) = same with |w|**c in place of (1 + |w|)**c


def log_j_series(ell, a, b, c, z_mod, ctl=DEFAULT_CONTROL):
    """``log J`` from ``(pi/ell) b**(-(c+2)/(2 ell)) sum_k y**k Gamma(k + s0) / (k!)**2``.

    Here ``y = a**2 |z|**(2 ell) / b`` and ``s0 = (c + 2) / (2 ell)``.
    """
    if not (a > 0 and b > 0 and c >= 0 and z_mod >= 0):
        raise FockDomainError("need a, b > 0, c >= 0 and |z| >= 0")
    s0 = (c + 2) / (2 * ell)
    base = math.log(math.pi / ell) - s0 * math.log(b)
    if z_mod == 0:
        return base + float(gammaln(s0))
    log_y = 2 * math.log(a) + 2 * ell * math.log(z_mod) - math.log(b)
    y = math.exp(log_y) if log_y < 700 else math.inf
    n = int(min(y, 1e9) + 12 * math.sqrt(min(y, 1e9)) + 60)
    while True:
        n = min(n, ctl.max_terms)
        k = np.arange(n, dtype=float)
        logt = k * log_y + gammaln(k + s0) - 2 * gammaln(k + 1)
        total = float(logsumexp(logt))
        if logt[-1] - total < math.log(ctl.rel_tol) and logt[-1] < logt[-2]:
            return base + total
        if n >= ctl.max_terms:
            raise SeriesTruncationError("J series did not converge",
                                        partial=math.exp(base + total), n_terms=n)
        n *= 2


def i_integral_series(ell, a, b, c, z_mod, ctl=DEFAULT_CONTROL):
    """``J^ell_{a,b,c}(z)`` from its exact series (depends on ``|z|`` only)."""
    return math.exp(log_j_series(ell, a, b, c, z_mod, ctl))


def log_i_proxy(ell, a, b, c, z_mod, ctl=DEFAULT_CONTROL):
    """``log(J_{a,b,0} + J_{a,b,c})``, comparable to ``I`` up to constants."""
    return float(np.logaddexp(log_j_series(ell, a, b, 0, z_mod, ctl),
                              log_j_series(ell, a, b, c, z_mod, ctl)))


def _radial_log_quad(ell, a, b, z_mod, weight, epsrel=1e-12):
    """``log int 2 pi I0(2 a |z|**ell r**ell) exp(-b r**(2 ell)) weight(r) r dr``.

    The angular integral is done in closed form; the integrand is scaled by
    ``exp(-a**2 |z|**(2 ell) / b)`` so that it peaks at ``r**ell = a |z|**ell / b``
    with height of order one.
    """
    s = a * z_mod ** ell / b
    shift = a * a * z_mod ** (2 * ell) / b

    def f(r):
        x = 2 * a * z_mod ** ell * r ** ell
        return 2 * math.pi * i0e(x) * math.exp(-b * (r ** ell - s) ** 2) * weight(r) * r

    r_peak = s ** (1.0 / ell)
    width = 1.0 / (math.sqrt(b) * ell * max(r_peak, 1.0) ** (ell - 1))
    r_hi = (s + 12.0 / math.sqrt(b)) ** (1.0 / ell) + 1.0
    pts = sorted({0.0, max(r_peak - 8 * width, 0.0), r_peak, min(r_peak + 8 * width, r_hi), r_hi})
    total = 0.0
    for lo, hi in zip(pts[:-1], pts[1:]):
        if hi > lo:
            total += spi.quad(f, lo, hi, epsabs=0.0, epsrel=epsrel, limit=200)[0]
    total += spi.quad(f, r_hi, math.inf, epsabs=0.0, epsrel=epsrel, limit=200)[0]
    return shift + math.log(total)


def log_j_quadrature(ell, a, b, c, z_mod):
    """``log J`` by radial quadrature (weight ``|w|**c``)."""
    return _radial_log_quad(ell, a, b, z_mod, lambda r: r ** c)


def log_i_quadrature(ell, a, b, c, z_mod):
    """``log I`` by radial quadrature (weight ``(1 + |w|)**c``)."""
    return _radial_log_quad(ell, a, b, z_mod, lambda r: (1 + r) ** c)


def log_i_polar(ell, a, b, c, z, q, plus_one=True):
    """``log I`` (or ``log J`` with ``plus_one=False``) on a 2D polar grid."""
    w, _ = polar_grid(q)
    r = np.abs(w)
    shift = a * a * abs(z) ** (2 * ell) / b
    expo = 2 * a * np.real((z * np.conj(w)) ** ell) - b * r ** (2 * ell) - shift
    wt = (1 + r) ** c if plus_one else r ** c
    return shift + math.log(integrate(np.exp(expo) * wt, q))


def log_i_estimate_ratio(ell, a, b, c, z_mod):
    """``log[I / (exp(a**2 |z|**(2 ell) / b) (1 + |z|)**(c + 2 - 2 ell))]``."""
    return (log_i_quadrature(ell, a, b, c, z_mod) - a * a * z_mod ** (2 * ell) / b
            - (c + 2 - 2 * ell) * math.log1p(z_mod))


def i_parameter_sets(p, ell):
    """The ``(a, b, c)`` triples used for the two factor norms at exponent ``p``.

    The second triple belongs to the conjugate exponent and is omitted when
    that exponent is infinite.
    """
    out = [(p / 4, p / 2, 0.0)]
    pc = FockParams(1.0, ell, p).p_conjugate
    if math.isfinite(pc):
        out.append((pc / 4, pc / 2, pc * (ell - 1)))
    return out


# --------------------------------------------------------------------------
# Kernel factors G0 and G1 (alpha = 1)


def square_completion_residual(z, w, ell):
    """``Re((z conj w)**ell) - |w|**(2 ell) + |w**ell - z**ell/2|**2 - |z|**(2 ell)/4``.

    Returned relative to ``1 + |z|**(2 ell) + |w|**(2 ell)``; zero up to rounding.
    """
    z = np.asarray(z, dtype=complex)
    w = np.asarray(w, dtype=complex)
    lhs = np.real((z * np.conj(w)) ** ell) - np.abs(w) ** (2 * ell)
    rhs = -np.abs(w ** ell - z ** ell / 2) ** 2 + np.abs(z) ** (2 * ell) / 4
    return (lhs - rhs) / (1 + np.abs(z) ** (2 * ell) + np.abs(w) ** (2 * ell))


def g0(w, z, ell):
    return np.exp((np.asarray(w) * np.conj(z)) ** ell / 2)


def g1(w, z, ell, ctl=DEFAULT_CONTROL):
    """``exp(-(w conj z)**ell / 2) K^ell_1(w, z)``."""
    pref, lead, rem, x = kernel_parts(w, z, FockParams(1.0, ell), ctl)
    return pref * (lead * np.exp(x / 2) + rem * np.exp(-x / 2))


def _log_weighted_g(which, w, z, ell, ctl):
    """``log(|G(w, z)| exp(-|w|**(2 ell)/2))``."""
    r2l = np.abs(w) ** (2 * ell)
    if which == "G0":
        return np.real((w * np.conj(z)) ** ell) / 2 - r2l / 2
    pref, lead, rem, x = kernel_parts(w, z, FockParams(1.0, ell), ctl)
    shift = np.abs(x.real) / 2
    val = pref * (lead * np.exp(x / 2 - shift) + rem * np.exp(-x / 2 - shift))
    with np.errstate(divide="ignore"):
        return shift + np.log(np.abs(val)) - r2l / 2


def g_quadrature(z, ell, p, extra=0.0):
    """Polar grid adapted to ``|G(., z)|**p exp(-p |w|**(2 ell)/2)``."""
    zm = abs(z)
    peak = zm ** ell / 2
    r_max = (peak + math.sqrt(80.0 / p) + extra) ** (1.0 / ell) + 1.0
    n_ang = 2 * int(max(64, 8 * ell * (peak + 8) * (1 + zm))) // 2
    n_ang += n_ang % 2
    return QuadratureSpec(n_radial=256, n_angular=n_ang, r_max=r_max)


def log_g_factor_norm(z, ell, p, which, q=None, ctl=DEFAULT_CONTROL, series=True):
    """``log ||G(., z)||`` in ``F^{p,ell}_1``.

    ``G0`` with finite ``p`` uses the exact series for ``I_{p/4,p/2,0}``
    unless ``series=False``; other cases use a polar grid (finite ``p``) or
    the weighted supremum (``p = inf``).
    """
    if which not in ("G0", "G1"):
        raise FockDomainError("which must be 'G0' or 'G1'")
    z = complex(z)
    if p == math.inf:
        r_hi = (abs(z) ** ell / 2 + 8.0) ** (1.0 / ell) + 1.0
        v, _ = weighted_sup(lambda w: _log_weighted_g(which, w, z, ell, ctl), r_hi,
                            n_radial=400, n_angular=512)
        return v
    if which == "G0" and series:
        return log_j_series(ell, p / 4, p / 2, 0.0, abs(z), ctl) / p
    if q is None:
        q = g_quadrature(z, ell, p)
    w, _ = polar_grid(q)
    lv = p * _log_weighted_g(which, w, z, ell, ctl)
    shift = float(np.max(lv))
    return (shift + math.log(integrate(np.exp(lv - shift), q))) / p


def g_factor_norms(z, fp, which, q=None, ctl=DEFAULT_CONTROL):
    """``||G0(., z)||`` in ``F^{p,ell}_1`` or ``||G1(., z)||`` in ``F^{p',ell}_1``.

    ``fp.alpha`` must be 1.
    """
    if fp.alpha != 1:
        raise FockDomainError("factor norms are defined for alpha = 1")
    p = fp.p if which == "G0" else fp.p_conjugate
    return math.exp(log_g_factor_norm(z, fp.ell, p, which, q, ctl))


def log_g_estimate(z_mod, ell, p, which):
    """Log of the comparison function for each factor norm.

    ``(1+|z|)**(2(1-ell)/p) exp(|z|**(2 ell)/8)`` for ``G0`` and
    ``(1+|z|)**(2(ell-1)/p) exp(|z|**(2 ell)/8)`` for ``G1`` (``p`` is the
    exponent of ``G0``'s space in both cases).
    """
    sign = -1 if which == "G0" else 1
    pw = 0.0 if p == math.inf else 2 * sign * (ell - 1) / p
    if which == "G1" and p == 1:
        pw = 2 * (ell - 1)
    return pw * math.log1p(z_mod) + z_mod ** (2 * ell) / 8
