"""Named verification suites and ratio sweeps behind the command line.

Every suite returns a :class:`~fockhankel.reports.SuiteReport`; every sweep
returns a list of :class:`~fockhankel.reports.RatioReport`.  Tolerances come
from :data:`~fockhankel.defaults.DEFAULTS` only.  Randomness is drawn from a
generator seeded by the ``seed`` setting, so reruns are byte-identical.
"""
import math
import warnings

import mpmath
import numpy as np

from . import estimates as est
from . import hankel as hk
from .defaults import DEFAULTS, DEFAULTS_VERSION, RANGES
from .errors import BoundaryWarning
from .fock import FockParams, kernel_eval, kernel_parts, kernel_pointwise_ratio, sup_norm_weighted
from .quad import inner_product, reproduce_quadrature
from .reports import RatioReport, SuiteReport
from .specfun import SeriesControl, log_abs_parts, mittag_leffler, mittag_leffler_parts
from .symbol import TaylorSymbol


class Settings:
    """Defaults from :data:`RANGES` with user overrides layered on top."""

    def __init__(self, overrides=None):
        self.overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
        unknown = set(self.overrides) - set(RANGES)
        if unknown:
            raise ValueError(f"unknown setting(s): {sorted(unknown)}")
        self.values = {**RANGES, **self.overrides}

    def __getattr__(self, name):
        try:
            return self.values[name]
        except KeyError:
            raise AttributeError(name) from None

    def pick(self, name, default):
        """Override as a one-element list, else the suite's default list."""
        v = self.overrides.get(name)
        return [v] if v is not None else list(default)

    def scalar(self, name, default):
        v = self.overrides.get(name)
        return default if v is None else v

    @property
    def ctl(self):
        return SeriesControl(rel_tol=self.values["rel_tol"])

    @property
    def rng(self):
        return np.random.default_rng(self.values["seed"])

    def header(self, name):
        return {
            "name": name,
            "defaults_version": DEFAULTS_VERSION,
            "overrides": dict(sorted(self.overrides.items())),
            "settings": dict(sorted(self.values.items())),
        }


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def _loglog_slope(x, y):
    return float(np.polyfit(np.log(x), np.log(y), 1)[0])


def _mittag_leffler_mp(ell, lam):
    """Direct series at enough working precision to absorb the cancellation."""
    x = abs(lam) ** ell
    dps = 30 + int(x / 2.3)
    with mpmath.workdps(dps):
        lam = mpmath.mpc(lam)
        total, power, k = mpmath.mpc(0), mpmath.mpc(1), 0
        eps = mpmath.mpf(10) ** (-dps + 5)
        while True:
            term = power / mpmath.gamma(mpmath.mpf(k + 1) / ell)
            total += term
            if k > ell * x + 10 and abs(term) < eps:
                return complex(total)
            power *= lam
            k += 1


def _modulus_grid(s):
    return [float(v) for v in np.linspace(0.0, s.r_max, int(s.grid_r))]


# --------------------------------------------------------------------------
# suites


def suite_mittag_leffler(s):
    rep = SuiteReport("mittag-leffler", s.header("mittag-leffler"))
    ctl = s.ctl
    tol = DEFAULTS["ml_rel_tol"]

    # independent oracle: high-precision series
    worst = 0.0
    pts = [0.5, 3.0, 7.5 + 2j, -6.0, -3 + 4j, 8j]
    for ell in s.pick("ell", (1, 2, 3)):
        for lam in pts:
            ref = _mittag_leffler_mp(ell, lam)
            worst = max(worst, _rel(mittag_leffler(ell, lam, ctl), ref))
    rep.check("matches high-precision series", worst <= tol, f"worst rel err {worst:.3e}")

    lam = np.linspace(5.0, 20.0, 61)
    for ell in s.pick("ell", (2, 3)):
        lead, rem, x, _ = mittag_leffler_parts(ell, lam.astype(complex), ctl)
        dev = np.abs(rem) * lam
        slope = _loglog_slope(lam, dev)
        band = DEFAULTS["ml_asym_band"]
        rep.check(f"ell={ell}: |E - lead| |lam| bounded on [5,20]",
                  dev.max() <= band * dev.min() and slope <= 0.05,
                  f"min {dev.min():.4e} max {dev.max():.4e} slope {slope:.3f}")
        neg = np.abs(mittag_leffler(ell, -lam, ctl)) * lam
        slope = _loglog_slope(lam, neg)
        rep.check(f"ell={ell}: |E(-t)| t bounded on [5,20]",
                  neg.max() <= band * neg.min() and slope <= 0.05,
                  f"min {neg.min():.4e} max {neg.max():.4e} slope {slope:.3f}")
    return rep


def suite_kernel(s):
    rep = SuiteReport("kernel", s.header("kernel"))
    ctl = s.ctl
    rng = s.rng
    z = rng.normal(size=200) + 1j * rng.normal(size=200)
    w = rng.normal(size=200) + 1j * rng.normal(size=200)

    for alpha in s.pick("alpha", (1.0,)):
        k1 = kernel_eval(z, w, FockParams(alpha, 1), ctl)
        err = float(np.max(np.abs(k1 - alpha / math.pi * np.exp(alpha * z * np.conj(w)))
                           / np.abs(k1)))
        rep.check(f"alpha={alpha}: ell=1 kernel is alpha/pi exp(alpha z conj w)", err <= 1e-12,
                  f"max rel err {err:.3e}")

    tol = DEFAULTS["kernel_scaling_rel_tol"]
    for ell in s.pick("ell", (1, 2, 3)):
        for alpha in s.pick("alpha", (0.5, 2.0)):
            fp, fp1 = FockParams(alpha, ell), FockParams(1.0, ell)
            sc = alpha ** (1 / (2 * ell))
            lhs = kernel_eval(z, w, fp, ctl)
            rhs = alpha ** (1 / ell) * kernel_eval(sc * z, sc * w, fp1, ctl)
            err = float(np.max(np.abs(lhs - rhs) / np.abs(rhs)))
            rep.check(f"ell={ell} alpha={alpha}: dilation scaling law", err <= tol, f"{err:.3e}")
        herm = kernel_eval(z, w, FockParams(1.0, ell), ctl)
        herm2 = np.conj(kernel_eval(w, z, FockParams(1.0, ell), ctl))
        err = float(np.max(np.abs(herm - herm2) / np.abs(herm)))
        rep.check(f"ell={ell}: Hermitian symmetry", err <= 1e-12, f"{err:.3e}")

    for r in sweep_kernel_pointwise(s):
        rep.ratios.append(r)
        rep.check(f"ell={r.params['ell']}: |K| below its pointwise bound up to a constant",
                  r.max_ratio <= DEFAULTS["kernel_pointwise_max"],
                  f"max ratio {r.max_ratio:.4f}")
    return rep


def suite_reproduce(s):
    rep = SuiteReport("reproduce", s.header("reproduce"))
    tol = DEFAULTS["reproduce_tol"]
    m_max = int(s.scalar("m_max", 10))
    pairs = [(1.0, 1), (2.0, 2), (1.0, 3)]
    if "alpha" in s.overrides or "ell" in s.overrides:
        pairs = [(float(s.scalar("alpha", 1.0)), int(s.scalar("ell", 1)))]
    for alpha, ell in pairs:
        fp = FockParams(alpha, ell)
        for z0 in (0j, 1.5 + 0j, 1 + 1j, 2j):
            got = reproduce_quadrature(z0, fp, degrees=tuple(range(m_max + 1)), ctl=s.ctl)
            worst = 0.0
            for m in range(m_max + 1):
                worst = max(worst, abs(got[m] - z0 ** m) / (1 + abs(z0) ** m))
            rep.check(f"alpha={alpha} ell={ell} z0={z0}: P(z^m)(z0) = z0^m, m<={m_max}",
                      worst <= tol, f"worst scaled err {worst:.3e}")
    return rep


def suite_hankel_hs(s):
    rep = SuiteReport("hankel-hs", s.header("hankel-hs"))
    rng = s.rng
    m_max = int(s.scalar("m_max", 30))

    # ell = 1 collapse
    worst = 0.0
    for ell in s.pick("ell", (1,)):
        if ell != 1:
            continue
        fp = FockParams(1.0, 1)
        for m in range(m_max + 1):
            lv = hk.log_hs_norm_sq_formula(TaylorSymbol.monomial(m), fp)
            exact = m * math.log(2) + math.lgamma(m + 1)
            worst = max(worst, abs(math.expm1(lv - exact)))
        rep.check(f"HS(z^m) = 2^m m! for m<={m_max}", worst <= DEFAULTS["hs_exact_rel_tol"],
                  f"worst rel err {worst:.3e}")

    # matrix / formula agreement on random symbols
    worst = 0.0
    n_sym = int(DEFAULTS["hs_random_symbols"])
    for _ in range(n_sym):
        deg = int(rng.integers(0, 31))
        ell = int(s.scalar("ell", rng.integers(1, 5)))
        alpha = float(s.scalar("alpha", 1.0))
        b = TaylorSymbol(rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1))
        fp = FockParams(alpha, ell)
        N = int(s.scalar("trunc", 2 * b.degree + 1))
        worst = max(worst, _rel(hk.hs_norm_sq_truncated(b, fp, N), hk.hs_norm_sq_formula(b, fp)))
    rep.check(f"truncated matrix HS = formula on {n_sym} random symbols",
              worst <= DEFAULTS["hs_truncated_rel_tol"], f"worst rel err {worst:.3e}")

    # adjoint identity for the bilinear form
    worst = 0.0
    for _ in range(20):
        ell = int(rng.integers(1, 4))
        fp = FockParams(1.0, ell)
        f, g, b = (TaylorSymbol(rng.normal(size=d) + 1j * rng.normal(size=d))
                   for d in rng.integers(1, 8, size=3))
        lam = hk.hankel_bilinear_form(f, g, b, fp)
        other = inner_product(g, hk.hankel_conj_image(b, f, fp), fp)
        worst = max(worst, _rel(lam, other), _rel(lam, hk.hankel_bilinear_form(g, f, b, fp)))
    rep.check("bilinear form: symmetry and <g, conj(h_b f)>", worst <= DEFAULTS["bilinear_adjoint_tol"],
              f"worst rel err {worst:.3e}")

    for r in sweep_hs_vs_symbol(s):
        rep.ratios.append(r)
        rep.check(f"ell={r.params['ell']}: HS(z^m) vs symbol norm band", r.band <= DEFAULTS["hs_symbol_band"],
                  f"band {r.band:.3f}")

    # boundedness evidence
    for ell in s.pick("ell", (1, 2)):
        fp = FockParams(float(s.scalar("alpha", 1.0)), ell)
        rows = []
        for m in range(0, min(m_max, 20) + 1):
            N = int(s.scalar("trunc", max(4 * m, 2 * m + 1)))
            b = TaylorSymbol.monomial(m)
            on = hk.truncated_operator_norm(b, fp, N, seed=s.seed)
            sn = sup_norm_weighted(b, fp.alpha / 2, ell)
            rows.append((f"m={m}", on, sn, on / sn))
        r = RatioReport.from_samples("operator-norm-vs-sup", {"ell": ell, "alpha": fp.alpha}, rows)
        rep.ratios.append(r)
        rep.check(f"ell={ell}: ||h_(z^m)|| / ||z^m||_inf band", r.band <= DEFAULTS["boundedness_band"],
                  f"band {r.band:.4f}")

    # L2 diagonal
    for alpha in s.pick("alpha", (1.0, 2.0)):
        fp = FockParams(alpha, 1)
        R = 3.0
        got = hk.hs_norm_sq_L2(hk.RadialDensity((1.0,), 0.0, R), fp)
        err = _rel(got, alpha * R * R)
        rep.check(f"alpha={alpha}: ell=1 truncated unit symbol gives alpha R^2",
                  err <= DEFAULTS["diagonal_l2_rel_tol"], f"rel err {err:.3e}")
    for r in sweep_diagonal_exponent(s):
        rep.ratios.append(r)
    for ell in s.pick("ell", (2, 3)):
        if ell < 2:
            continue
        probe = hk.diagonal_exponent_probe(FockParams(1.0, ell), np.linspace(1, 4, 31), s.ctl)
        flat = probe["flat_exponent"]
        bands = {k: round(v["band"], 4) for k, v in probe["candidates"].items()}
        rep.check(f"ell={ell}: flat diagonal exponent is 2(ell-1)", flat == 2 * (ell - 1),
                  f"bands {bands}; the single-power form (ell-1) is not flat")
    return rep


def suite_gamma_sum(s):
    rep = SuiteReport("gamma-sum", s.header("gamma-sum"))
    worst = 0.0
    for m in range(0, 201):
        worst = max(worst, abs(math.expm1(est.gamma_sum(m, 1) - m * math.log(2))))
    rep.check("S(m) = 2^m for ell=1, m<=200", worst <= DEFAULTS["gamma_exact_rel_tol"],
              f"worst rel err {worst:.3e}")

    for r in sweep_gamma_sum_ratio(s):
        rep.ratios.append(r)
        logs = np.log([x[3] for x in r.samples])
        dec = max(1, len(logs) // 10)
        trend = abs(logs[:dec].mean() - logs[-dec:].mean())
        rep.check(f"ell={r.params['ell']}: S(m)/2^(m/ell) band", r.band <= DEFAULTS["gamma_band"],
                  f"band {r.band:.4f}")
        rep.check(f"ell={r.params['ell']}: no trend in log ratio", trend < DEFAULTS["gamma_decile_trend"],
                  f"decile mean difference {trend:.4f}")

    worst = 0.0
    for ell in s.pick("ell", (1, 2, 3, 4, 5)):
        for m in (8 * ell, 8 * ell + ell // 2, 80, 257, 1000):
            if m // ell < 8:
                continue
            bd = est.gamma_sum_decomposed(m, ell)
            worst = max(worst, abs(math.expm1(bd.recombined - bd.total)))
    rep.check("five-part split recombines to S(m)", worst <= DEFAULTS["gamma_partition_rel_tol"],
              f"worst rel err {worst:.3e}")
    for ell in s.pick("ell", (1, 2, 3, 4, 5)):
        m_top = int(s.scalar("m_max", 400))
        thr = est.s4_dominance_threshold(ell, m_top)
        rep.check(f"ell={ell}: S4 dominates the other parts from m={thr} to {m_top}", thr is not None,
                  f"threshold {thr}")
    return rep


def suite_chernoff(s):
    rep = SuiteReport("chernoff", s.header("chernoff"))
    n_max = int(s.scalar("m_max", 512))
    bad = [n for n in range(n_max + 1) if not est.chernoff_check(n)[2]]
    rep.check(f"binomial tail bound for n in [0, {n_max}]", not bad, f"failures {bad[:10]}")
    return rep


def suite_i_integral(s):
    rep = SuiteReport("i-integral", s.header("i-integral"))
    ctl = s.ctl
    worst = 0.0
    for ell in s.pick("ell", (1, 2, 3)):
        for p in s.pick("p", (1.0, 2.0, 4.0)):
            for a, b, c in est.i_parameter_sets(p, ell):
                for zm in _modulus_grid(s):
                    lj = est.log_j_series(ell, a, b, c, zm, ctl)
                    worst = max(worst, abs(math.expm1(lj - est.log_j_quadrature(ell, a, b, c, zm))))
    rep.check("J series = J quadrature on all parameter sets", worst <= DEFAULTS["i_series_quad_rel_tol"],
              f"worst rel err {worst:.3e}")
    for r in sweep_i_estimate(s):
        rep.ratios.append(r)
        rep.check(f"{r.params}: I estimate bracket", r.band <= DEFAULTS["i_estimate_band"],
                  f"band {r.band:.3f} [{r.min_ratio:.4f}, {r.max_ratio:.4f}]")
    return rep


def suite_g_factors(s):
    rep = SuiteReport("g-factors", s.header("g-factors"))
    ctl = s.ctl
    tol = DEFAULTS["g0_rel_tol"]
    zs = [0j, 0.7 + 0.2j, 1.5j, 2 - 1j, 3.0 + 0j]

    worst = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundaryWarning)
        for ell in s.pick("ell", (1, 2, 3)):
            for z in zs:
                if abs(z) ** (2 * ell) > 400:
                    continue
                lv = est.log_g_factor_norm(z, ell, math.inf, "G0", ctl=ctl)
                worst = max(worst, abs(math.expm1(lv - abs(z) ** (2 * ell) / 8)))
    rep.check("||G0||_inf = exp(|z|^(2 ell)/8)", worst <= tol, f"worst rel err {worst:.3e}")

    worst_s, worst_q, worst_g1 = 0.0, 0.0, 0.0
    for z in zs:
        ref = 0.5 * math.log(math.pi) + abs(z) ** 2 / 8
        worst_s = max(worst_s, abs(math.expm1(est.log_g_factor_norm(z, 1, 2.0, "G0", ctl=ctl) - ref)))
        worst_q = max(worst_q, abs(math.expm1(est.log_g_factor_norm(z, 1, 2.0, "G0", ctl=ctl,
                                                                    series=False) - ref)))
        worst_g1 = max(worst_g1, abs(math.expm1(est.log_g_factor_norm(z, 1, 2.0, "G1", ctl=ctl)
                                                - (ref - math.log(math.pi)))))
    rep.check("ell=1, p=2: ||G0|| = sqrt(pi) exp(|z|^2/8) (series)", worst_s <= tol, f"{worst_s:.3e}")
    rep.check("ell=1, p=2: ||G0|| = sqrt(pi) exp(|z|^2/8) (quadrature)", worst_q <= tol, f"{worst_q:.3e}")
    rep.check("ell=1, p=2: ||G1|| = exp(|z|^2/8)/sqrt(pi)", worst_g1 <= tol, f"{worst_g1:.3e}")

    rng = s.rng
    worst = 0.0
    for ell in s.pick("ell", (1, 2, 3)):
        w = rng.uniform(-1.5, 1.5, 1000) + 1j * rng.uniform(-1.5, 1.5, 1000)
        z = rng.uniform(-1.5, 1.5, 1000) + 1j * rng.uniform(-1.5, 1.5, 1000)
        k = kernel_eval(w, z, FockParams(1.0, ell), ctl)
        worst = max(worst, float(np.max(np.abs(est.g0(w, z, ell) * est.g1(w, z, ell, ctl) - k) / np.abs(k))))
    rep.check("G0 G1 = K on 1000 random pairs", worst <= DEFAULTS["g_factorization_rel_tol"],
              f"worst rel err {worst:.3e}")

    w = rng.normal(size=1000) * 2 + 1j * rng.normal(size=1000) * 2
    z = rng.normal(size=1000) * 2 + 1j * rng.normal(size=1000) * 2
    worst = max(float(np.max(np.abs(est.square_completion_residual(z, w, ell)))) for ell in (1, 2, 3))
    rep.check("square-completion identity", worst <= DEFAULTS["square_completion_tol"], f"{worst:.3e}")

    for r in sweep_g0_estimate(s) + sweep_g1_estimate(s):
        rep.ratios.append(r)
        rep.check(f"{r.quantity} {r.params}: bracket", r.band <= DEFAULTS["g_estimate_band"],
                  f"band {r.band:.3f}")
    return rep


SUITES = {
    "kernel": suite_kernel,
    "mittag-leffler": suite_mittag_leffler,
    "reproduce": suite_reproduce,
    "hankel-hs": suite_hankel_hs,
    "gamma-sum": suite_gamma_sum,
    "chernoff": suite_chernoff,
    "i-integral": suite_i_integral,
    "g-factors": suite_g_factors,
}


# --------------------------------------------------------------------------
# sweeps


def sweep_hs_vs_symbol(s):
    out = []
    for ell in s.pick("ell", (2, 3, 4, 5)):
        m_hi = int(s.scalar("m_max", 2000))
        rows = []
        for m in range(8 * ell, m_hi + 1):
            lv = hk.log_hs_weight(m, ell)
            lc = float(hk.log_delta_comparator(m, ell))
            rows.append((f"m={m}", lv, lc))
        out.append(RatioReport.from_log_samples("hs-vs-symbol", {"ell": ell, "alpha": 1.0}, rows))
    return out


def sweep_gamma_sum_ratio(s):
    out = []
    for ell in s.pick("ell", (2, 3, 4, 5)):
        m_hi = int(s.scalar("m_max", 2000))
        rows = [(f"m={m}", est.gamma_sum(m, ell), (m / ell) * math.log(2))
                for m in range(8 * ell, m_hi + 1)]
        out.append(RatioReport.from_log_samples("gamma-sum-ratio", {"ell": ell}, rows))
    return out


def sweep_g0_estimate(s):
    out = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundaryWarning)
        for ell in s.pick("ell", (1, 2)):
            for p in s.pick("p", (1.0, 2.0, math.inf)):
                rows = []
                for zm in _modulus_grid(s):
                    lv = est.log_g_factor_norm(complex(zm), ell, p, "G0", ctl=s.ctl)
                    rows.append((f"|z|={zm!r}", lv, est.log_g_estimate(zm, ell, p, "G0")))
                out.append(RatioReport.from_log_samples("g0-estimate", {"ell": ell, "p": p}, rows))
    return out


def sweep_g1_estimate(s):
    """``||G1(., z)||`` in ``F^{p'}`` over its upper estimate (one-sided)."""
    out = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundaryWarning)
        for ell in s.pick("ell", (1, 2)):
            for p in s.pick("p", (1.0, 2.0, 4.0)):
                pc = FockParams(1.0, ell, p).p_conjugate
                rows = []
                for zm in _modulus_grid(s):
                    zz = complex(zm) * np.exp(0.3j)
                    lv = est.log_g_factor_norm(zz, ell, pc, "G1", ctl=s.ctl)
                    rows.append((f"|z|={zm!r}", lv, est.log_g_estimate(zm, ell, p, "G1")))
                out.append(RatioReport.from_log_samples("g1-estimate", {"ell": ell, "p": p}, rows))
    return out


def sweep_i_estimate(s):
    out = []
    for ell in s.pick("ell", (1, 2, 3)):
        for p in s.pick("p", (1.0, 2.0, 4.0)):
            for a, b, c in est.i_parameter_sets(p, ell):
                rows = []
                for zm in _modulus_grid(s):
                    li = est.log_i_quadrature(ell, a, b, c, zm)
                    cmp_ = a * a * zm ** (2 * ell) / b + (c + 2 - 2 * ell) * math.log1p(zm)
                    rows.append((f"|z|={zm!r}", li, cmp_))
                params = {"ell": ell, "p": p, "a": a, "b": b, "c": c}
                out.append(RatioReport.from_log_samples("i-estimate", params, rows))
    return out


def sweep_kernel_pointwise(s):
    """``|K(z, w)|`` over its pointwise upper bound; the bound is one-sided.

    ``w`` is drawn with ``|z w|**ell <= 600`` so that the ratio, which is
    exponentially small off the growth sector, stays in double range.
    """
    out = []
    r = np.linspace(0.0, s.r_max, int(s.grid_r))
    th = 2 * np.pi * np.arange(int(s.grid_theta)) / int(s.grid_theta)
    z = (r[:, None] * np.exp(1j * th)[None, :]).ravel()
    for ell in s.pick("ell", (1, 2, 3)):
        rng = s.rng
        cap = np.minimum(s.r_max, 600.0 ** (1 / ell) / np.maximum(np.abs(z), 1e-300))
        w = rng.uniform(0, 1, z.size) * cap * np.exp(2j * np.pi * rng.uniform(size=z.size))
        for alpha in s.pick("alpha", (1.0,)):
            fp = FockParams(alpha, ell)
            pref, lead, rem, x = kernel_parts(z, w, fp, s.ctl)
            lk = math.log(pref) + log_abs_parts(lead, rem, x)
            lb = (ell - 1) * np.log1p(np.abs(z * w)) + np.logaddexp(x.real, 0.0)
            rows = [(f"z={complex(zi)!r};w={complex(wi)!r}", a, b) for zi, wi, a, b in zip(z, w, lk, lb)]
            out.append(RatioReport.from_log_samples(
                "kernel-pointwise", {"ell": ell, "alpha": alpha, "bound": "upper"}, rows))
    return out


def sweep_diagonal_exponent(s):
    out = []
    radii = np.linspace(1.0, s.r_max, max(int(s.grid_r), 2) * 4)
    for ell in s.pick("ell", (2, 3)):
        fp = FockParams(float(s.scalar("alpha", 1.0)), ell)
        probe = hk.diagonal_exponent_probe(fp, radii, s.ctl)
        for kappa, cand in probe["candidates"].items():
            rows = [(f"|w|={float(r)!r}", d, (1 + r) ** kappa, q)
                    for r, d, q in zip(radii, probe["diag"], cand["ratio"])]
            params = {"ell": ell, "alpha": fp.alpha, "exponent": kappa,
                      "flat_exponent": probe["flat_exponent"], "slope": cand["slope"]}
            out.append(RatioReport.from_samples("diagonal-exponent", params, rows))
    return out


SWEEPS = {
    "hs-vs-symbol": sweep_hs_vs_symbol,
    "gamma-sum-ratio": sweep_gamma_sum_ratio,
    "g0-estimate": sweep_g0_estimate,
    "i-estimate": sweep_i_estimate,
    "kernel-pointwise": sweep_kernel_pointwise,
    "diagonal-exponent": sweep_diagonal_exponent,
}


def report_stem(r):
    """File stem unique within one sweep."""
    keys = [k for k in ("ell", "alpha", "p", "a", "b", "c", "exponent") if k in r.params]
    tag = "_".join(f"{k}{r.params[k]:g}" for k in keys)
    return f"{r.quantity}_{tag}" if tag else r.quantity
