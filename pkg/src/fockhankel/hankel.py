"""The small Hankel operator in the orthonormal monomial basis.

For a polynomial symbol ``b = sum c_m z**m`` the operator
``h_b f = conj(P(b conj f))`` has matrix

    H[m, n] = c_{m+n} ||w**(m+n)||**2 / (||w**m|| ||w**n||)

with respect to ``e_n = z**n / ||z**n||``.  All Gamma-heavy quantities are
assembled in log domain.
"""
from dataclasses import dataclass
import math
import warnings

import numpy as np
from scipy.special import gammaln, logsumexp

from .errors import ConvergenceError, FockDomainError, UnderTruncationWarning
from .fock import FockParams, kernel_parts, log_monomial_norm_sq, sup_norm_weighted
from .quad import default_radius, integrate, inner_product, polar_grid, QuadratureSpec
from .specfun import DEFAULT_CONTROL, combine_scaled
from .symbol import TaylorSymbol, as_symbol

_LOG_MAX = math.log(np.finfo(float).max)


@dataclass(frozen=True)
class HankelMatrix:
    """Truncated matrix of ``conj(h_b)`` in the basis ``{e_m}``."""

    entries: np.ndarray
    fp: FockParams

    @property
    def trunc(self):
        return self.entries.shape[0]

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)


def hankel_matrix(b, fp, N):
    """``N x N`` matrix ``H[m, n] = c_{m+n} ||w**(m+n)||**2 / (||w**m|| ||w**n||)``."""
    if N < 1:
        raise FockDomainError("truncation N must be positive")
    b = as_symbol(b)
    idx = np.arange(N)
    s = idx[:, None] + idx[None, :]
    c = b.padded(2 * N - 1)[s]
    lognorm = log_monomial_norm_sq(np.arange(2 * N - 1), fp)
    half = 0.5 * lognorm[idx]
    # same operation order for (m, n) and (n, m) keeps the matrix exactly symmetric
    logratio = lognorm[s] - (half[:, None] + half[None, :])
    active = c != 0
    if np.any(logratio[active] > _LOG_MAX):
        raise OverflowError("Hankel matrix entry exceeds double range")
    entries = np.where(active, c * np.exp(np.where(active, logratio, 0.0)), 0)
    return HankelMatrix(entries, fp)


def log_hs_weight(m, ell):
    """``log[Gamma((m+1)/ell)**2 * sum_k 1/(Gamma((k+1)/ell) Gamma((m-k+1)/ell))]``."""
    k = np.arange(m + 1)
    inner = logsumexp(-gammaln((k + 1) / ell) - gammaln((m - k + 1) / ell))
    return float(2 * gammaln((m + 1) / ell) + inner)


def log_hs_norm_sq_formula(b, fp):
    """Log of the Hilbert-Schmidt norm squared of ``h_b`` on ``F^{2,ell}_alpha``.

    ``sum_m |c_m|**2 alpha**(-m/ell) Gamma((m+1)/ell)**2
    sum_{k<=m} 1/(Gamma((k+1)/ell) Gamma((m-k+1)/ell))``; at ``alpha = 1``
    this is the coefficient formula with no constants.
    """
    b = as_symbol(b)
    if b.is_zero():
        return -math.inf
    terms = []
    for m in np.flatnonzero(b.coeffs):
        terms.append(2 * math.log(abs(b.coeffs[m])) - (m / fp.ell) * math.log(fp.alpha)
                     + log_hs_weight(int(m), fp.ell))
    return float(logsumexp(terms))


def hs_norm_sq_formula(b, fp):
    lv = log_hs_norm_sq_formula(b, fp)
    if lv > _LOG_MAX:
        raise OverflowError("HS norm exceeds double range; use log_hs_norm_sq_formula")
    return math.exp(lv)


def hs_norm_sq_truncated(b, fp, N):
    """Sum of squared column norms of the ``N x N`` Hankel matrix."""
    b = as_symbol(b)
    if N <= 2 * b.degree:
        warnings.warn(f"N={N} <= 2*degree={2 * b.degree}; matrix may not capture the symbol",
                      UnderTruncationWarning, stacklevel=2)
    H = hankel_matrix(b, fp, N).entries
    return float(np.sum(np.abs(H) ** 2))


def log_delta_comparator(m, ell):
    """``log(2**(m/ell) Gamma(m/ell + 1))``, the monomial weight on the symbol side."""
    m = np.asarray(m, dtype=float)
    return (m / ell) * math.log(2.0) + gammaln(m / ell + 1)


def hs_symbol_log_ratio(m, ell):
    """``log`` of HS norm squared of ``h_{z**m}`` over ``2**(m/ell) Gamma(m/ell + 1)`` at ``alpha = 1``."""
    return log_hs_weight(m, ell) - float(log_delta_comparator(m, ell))


def symbol_delta_comparator(b, ell):
    """``sum_m |c_m|**2 2**(m/ell) Gamma(m/ell + 1)``."""
    b = as_symbol(b)
    m = np.arange(b.coeffs.size)
    return float(np.sum(np.abs(b.coeffs) ** 2 * np.exp(log_delta_comparator(m, ell))))


def symbol_delta_norm_sq_exact(b, beta, ell):
    """Closed form of ``int |b|**2 exp(-beta |z|**(2 ell)) (1 + |z|)**(2(ell-1)) dA``.

    Orthogonality on circles removes cross terms; expanding ``(1 + r)**(2 ell - 2)``
    binomially leaves Gamma integrals.
    """
    b = as_symbol(b)
    total = 0.0
    j = np.arange(2 * ell - 1)
    binom = np.array([math.comb(2 * ell - 2, int(i)) for i in j], dtype=float)
    for m in np.flatnonzero(b.coeffs):
        s = (2 * m + j + 2) / (2 * ell)
        radial = binom * np.exp(gammaln(s) - s * math.log(beta)) / (2 * ell)
        total += abs(b.coeffs[m]) ** 2 * 2 * math.pi * float(np.sum(radial))
    return total


def symbol_delta_norm_sq(b, beta, ell, q=None):
    """``||b||**2`` in ``F^{2,ell}_{beta,Delta}`` by polar quadrature."""
    b = as_symbol(b)
    if not beta > 0:
        raise FockDomainError("beta must be positive")
    if q is None:
        r_max = default_radius(FockParams(beta, ell), b.degree + ell)
        q = QuadratureSpec(160, max(64, 4 * b.degree + 16), r_max)
    z, _ = polar_grid(q)
    r = np.abs(z)
    vals = np.abs(b(z)) ** 2 * np.exp(-beta * r ** (2 * ell)) * (1 + r) ** (2 * (ell - 1))
    return float(integrate(vals, q))


# --------------------------------------------------------------------------
# Hilbert-Schmidt norm on L^2 and the kernel diagonal


@dataclass(frozen=True)
class RadialDensity:
    """``|phi(w)|**2 = poly(|w|) * exp(-gauss_rate |w|**2)`` on ``|w| <= r_cut``.

    ``poly`` holds coefficients in increasing powers of ``|w|``.
    """

    poly: tuple = (1.0,)
    gauss_rate: float = 0.0
    r_cut: float = math.inf

    def __call__(self, w):
        r = np.abs(w)
        val = np.polynomial.polynomial.polyval(r, self.poly) * np.exp(-self.gauss_rate * r ** 2)
        return np.where(r <= self.r_cut, val, 0.0)


def diagonal_weighted_kernel(r, fp, ctl=DEFAULT_CONTROL):
    """``K(w, w) exp(-alpha |w|**(2 ell))`` as a function of ``r = |w|``."""
    r = np.asarray(r, dtype=float)
    pref, lead, rem, x = kernel_parts(r.astype(complex), r.astype(complex), fp, ctl)
    return (pref * combine_scaled(lead, rem, x, fp.alpha * r ** (2 * fp.ell))).real


def hs_norm_sq_L2(phi, fp, q=None, ctl=DEFAULT_CONTROL):
    """``int |phi(w)|**2 K(w, w) exp(-alpha |w|**(2 ell)) dA(w)``.

    ``phi`` is a :class:`RadialDensity` or any callable giving ``|phi|**2``
    on complex arrays.
    """
    if q is None:
        r_cut = getattr(phi, "r_cut", math.inf)
        if math.isfinite(r_cut):
            q = QuadratureSpec(200, 64, r_cut)
        else:
            rate = max(getattr(phi, "gauss_rate", 0.0), 1e-3)
            deg = len(getattr(phi, "poly", (1,)))
            q = QuadratureSpec(200, 64, math.sqrt((40.0 + 2 * deg * 4) / rate) + 2.0)
    z, _ = polar_grid(q)
    diag = diagonal_weighted_kernel(np.abs(z), fp, ctl)
    return float(integrate(phi(z) * diag, q))


def diagonal_exponent_probe(fp, radii, ctl=DEFAULT_CONTROL):
    """Compare ``K(w,w) exp(-alpha|w|**(2 ell))`` against ``(1+|w|)**kappa``.

    Both candidate exponents ``kappa = ell - 1`` and ``kappa = 2(ell - 1)``
    are measured.  For each, the band (max/min of the ratio over ``radii``)
    and the log-log slope of the ratio against ``1 + r`` are reported; the
    flatter exponent is the one with the smaller band.
    """
    radii = np.asarray(radii, dtype=float)
    diag = diagonal_weighted_kernel(radii, fp, ctl)
    out = {"radii": radii, "diag": diag, "candidates": {}}
    for kappa in (fp.ell - 1, 2 * (fp.ell - 1)):
        ratio = diag / (1 + radii) ** kappa
        slope = float(np.polyfit(np.log1p(radii), np.log(ratio), 1)[0])
        out["candidates"][kappa] = {
            "ratio": ratio,
            "band": float(ratio.max() / ratio.min()),
            "slope": slope,
        }
    out["flat_exponent"] = min(out["candidates"], key=lambda k: out["candidates"][k]["band"])
    return out


# --------------------------------------------------------------------------
# Operator norms and the bilinear form


def truncated_operator_norm(b, fp, N, n_iter=2000, restarts=2, seed=0, tol=1e-14):
    """Largest singular value of the ``N x N`` Hankel matrix by power iteration.

    Iterates ``v <- H^* H v`` from random complex starts, keeping the best of
    ``restarts`` runs.  Raises :class:`ConvergenceError` if the Rayleigh
    quotient is not stationary to ``1e-8`` after ``n_iter`` steps.
    """
    b = as_symbol(b)
    if N <= 2 * b.degree:
        warnings.warn(f"N={N} <= 2*degree={2 * b.degree}", UnderTruncationWarning, stacklevel=2)
    H = hankel_matrix(b, fp, N).entries
    scale = float(np.max(np.abs(H)))
    if scale == 0:
        return 0.0
    A = H / scale
    G = A.conj().T @ A
    rng = np.random.default_rng(seed)
    best = 0.0
    for _ in range(restarts):
        v = rng.normal(size=N) + 1j * rng.normal(size=N)
        v /= np.linalg.norm(v)
        est, change = 0.0, math.inf
        for _ in range(n_iter):
            u = G @ v
            new = float(np.real(np.vdot(v, u)))
            nu = np.linalg.norm(u)
            if nu == 0:
                new = 0.0
                change = 0.0
                break
            v = u / nu
            change = abs(new - est) / max(new, 1e-300)
            est = new
            if change < tol:
                break
        if change > 1e-8:
            raise ConvergenceError(f"power iteration not stationary (last change {change:.2e})")
        best = max(best, est)
    return scale * math.sqrt(best)


def hankel_conj_image(b, f, fp):
    """Coefficients of ``conj(h_b f) = P(b conj f)``.

    ``d_k = sum_n c_{k+n} conj(f_n) ||z**(k+n)||**2 / ||z**k||**2``.
    """
    b, f = as_symbol(b), as_symbol(f)
    M = b.degree
    d = np.zeros(M + 1, dtype=complex)
    lognorm = log_monomial_norm_sq(np.arange(M + 1), fp)
    for k in range(M + 1):
        for n in range(min(f.degree, M - k) + 1):
            c = b.coeffs[k + n]
            if c != 0 and f.coeffs[n] != 0:
                d[k] += c * np.conj(f.coeffs[n]) * math.exp(lognorm[k + n] - lognorm[k])
    return TaylorSymbol(d)


def hankel_bilinear_form(f, g, b, fp):
    """``Lambda_b(f, g) = <f g, b>``, exact on the coefficient side."""
    return inner_product(as_symbol(f) * as_symbol(g), b, fp)


def boundedness_ratio(m, fp, N=None):
    """Truncated operator norm of ``h_{z**m}`` over ``||z**m||`` in ``F^{inf,ell}_{alpha/2}``."""
    b = TaylorSymbol.monomial(m)
    N = N if N is not None else max(4 * m, 2 * m + 1)
    return truncated_operator_norm(b, fp, N) / sup_norm_weighted(b, fp.alpha / 2, fp.ell)
