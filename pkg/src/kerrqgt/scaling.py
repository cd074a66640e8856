"""Finite-size-scaling toolkit: peaks, extrapolations, exponents, data collapse.

All fitters are deterministic, closed-form least squares combined with scanned
and golden-section 1D searches; no stochastic optimization is used anywhere.
The end-to-end pipelines assemble the critical point, the correlation-length
exponent, the scaling dimensions of the geometric tensor, the data-collapse
qualities, and the cutoff-scaling study without Kerr nonlinearity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.optimize import minimize

from .errors import BracketError, FitError, WindowError
from .model import ModelParams
from .qgt import qgt_spectral, QGTResult

GOLDEN = (np.sqrt(5.0) - 1.0) / 2.0

DEFAULT_SIZES = (300, 400, 500, 600, 700)
DEFAULT_N_CUT = 800
DEFAULT_PEAK_BRACKET = (0.99, 1.40)
DEFAULT_COLLAPSE_WINDOW = (0.95, 1.06)
DEFAULT_COLLAPSE_STEP = 1e-3
DEFAULT_K0_CUTOFFS = (200, 283, 400, 566, 800, 1131, 1600)
DRIFT_EXPONENT_RANGE = (0.1, 3.0)


# ---------------------------------------------------------------------------
# 1D searches

def golden_section_max(f: Callable[[float], float], lo: float, hi: float,
                       tol: float) -> tuple[float, float]:
    c = hi - GOLDEN * (hi - lo)
    d = lo + GOLDEN * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - GOLDEN * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + GOLDEN * (hi - lo)
            fd = f(d)
    return (c, fc) if fc > fd else (d, fd)


def golden_section_min(f: Callable[[float], float], lo: float, hi: float,
                       tol: float) -> tuple[float, float]:
    x, y = golden_section_max(lambda t: -f(t), lo, hi, tol)
    return x, -y


def locate_peak(evaluate: Callable[[float], float], bracket: tuple[float, float],
                *, coarse: int = 22, tol: float = 1e-5) -> tuple[float, float]:
    """Maximize a unimodal curve: coarse scan, golden section, parabolic polish.

    Raises BracketError when the coarse scan puts the maximum on a bracket
    endpoint (no interior peak).
    """
    lo, hi = bracket
    if not hi > lo:
        raise BracketError(f"empty bracket {bracket}")
    xs = np.linspace(lo, hi, coarse)
    ys = np.array([evaluate(x) for x in xs])
    i = int(np.argmax(ys))
    if i == 0 or i == coarse - 1:
        raise BracketError(
            f"no interior maximum in bracket {bracket}; best sample at edge {xs[i]:.6g}")
    x0, y0 = golden_section_max(evaluate, xs[i - 1], xs[i + 1], tol)

    h = tol
    ym, yp = evaluate(x0 - h), evaluate(x0 + h)
    denom = ym - 2.0 * y0 + yp
    if denom < 0.0:
        xq = x0 + 0.5 * h * (ym - yp) / denom
        if lo < xq < hi:
            yq = evaluate(xq)
            if yq > y0:
                return xq, yq
    return x0, y0


# ---------------------------------------------------------------------------
# Fits

@dataclass(frozen=True)
class ShiftedPowerFit:
    """Least-squares fit of y = limit + amplitude * x^exponent."""

    limit: float
    amplitude: float
    exponent: float
    residual: float
    boundary_warning: bool


def fit_shifted_power(x: np.ndarray, y: np.ndarray,
                      exponent_range: tuple[float, float] = DRIFT_EXPONENT_RANGE,
                      n_scan: int = 61) -> ShiftedPowerFit:
    """Profiled linear least squares over (limit, amplitude) with a scanned and
    golden-refined search over the exponent."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if len(x) < 3:
        raise FitError("shifted power fit needs at least 3 points")
    if np.ptp(y) == 0.0:
        raise FitError("constant data leaves the exponent unidentifiable")

    def residual(b):
        basis = np.column_stack([np.ones_like(x), x**b])
        coef, *_ = np.linalg.lstsq(basis, y, rcond=None)
        return float(np.sum((basis @ coef - y) ** 2))

    b_lo, b_hi = exponent_range
    grid = np.linspace(b_lo, b_hi, n_scan)
    values = np.array([residual(b) for b in grid])
    i = int(np.argmin(values))
    b, _ = golden_section_min(residual, grid[max(i - 1, 0)], grid[min(i + 1, n_scan - 1)],
                              tol=1e-10)
    basis = np.column_stack([np.ones_like(x), x**b])
    coef, *_ = np.linalg.lstsq(basis, y, rcond=None)
    boundary = bool(i == 0 or i == n_scan - 1)
    return ShiftedPowerFit(limit=float(coef[0]), amplitude=float(coef[1]),
                           exponent=float(b), residual=residual(b),
                           boundary_warning=boundary)


def extrapolate_critical_point(sizes: Sequence[float],
                               eps_c_of_size: Sequence[float]) -> ShiftedPowerFit:
    """Fit eps_c(L) = eps_c* + a L^{-b}; the limit field is eps_c*."""
    sizes = np.asarray(sizes, dtype=float)
    eps_c = np.asarray(eps_c_of_size, dtype=float)
    if len(sizes) < 4:
        raise FitError("critical-point extrapolation needs at least 4 sizes")
    return fit_shifted_power(1.0 / sizes, eps_c)


@dataclass(frozen=True)
class PowerLawFit:
    exponent: float
    prefactor: float
    r_squared: float


def fit_power_law(x: Sequence[float], y: Sequence[float]) -> PowerLawFit:
    """Ordinary least squares on (ln x, ln y)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(x <= 0) or np.any(y <= 0):
        raise FitError("power-law fit requires strictly positive data")
    lx, ly = np.log(x), np.log(y)
    slope, intercept = np.polyfit(lx, ly, 1)
    model = slope * lx + intercept
    ss_res = float(np.sum((ly - model) ** 2))
    ss_tot = float(np.sum((ly - np.mean(ly)) ** 2))
    r2 = 1.0 if ss_tot == 0.0 and ss_res == 0.0 else 1.0 - ss_res / max(ss_tot, 1e-300)
    return PowerLawFit(exponent=float(slope), prefactor=float(np.exp(intercept)),
                       r_squared=float(r2))


def nu_convergence(sizes: Sequence[float], values: Sequence[float]) -> ShiftedPowerFit:
    """Extrapolate per-size estimates to the infinite-size limit.

    Fits values = a (1/size)^b + c and returns c in the limit field; used for
    the correlation-length exponent and any other drifting local estimate.
    Three points make the fit exactly determined (the minimum-length case of
    secant slopes from four sizes); more points overdetermine it.
    """
    sizes = np.asarray(sizes, dtype=float)
    values = np.asarray(values, dtype=float)
    if len(sizes) < 3:
        raise FitError("convergence extrapolation needs at least 3 points")
    return fit_shifted_power(1.0 / sizes, values)


def pair_slopes(sizes: np.ndarray, values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Log-log secant slopes of consecutive size pairs.

    Each secant is a centered estimate of d ln y / d ln L at the geometric
    mean of its pair, which is returned as the effective size.
    """
    sizes = np.asarray(sizes, dtype=float)
    values = np.asarray(values, dtype=float)
    slopes = np.diff(np.log(values)) / np.diff(np.log(sizes))
    effective = np.sqrt(sizes[1:] * sizes[:-1])
    return effective, slopes


def perturbation_dimensions(delta_ee: float, delta_pp: float,
                            delta_ep: float) -> tuple[float, float, float]:
    """Scaling dimensions of the two drive perturbations and a consistency gap.

    delta_j = (2 - delta_jj) / 2 for j in (eps, phi); the returned consistency
    is |delta_ep - (2 - delta_eps - delta_phi)|.
    """
    delta_eps = (2.0 - delta_ee) / 2.0
    delta_phi = (2.0 - delta_pp) / 2.0
    consistency = abs(delta_ep - (2.0 - delta_eps - delta_phi))
    return delta_eps, delta_phi, consistency


# ---------------------------------------------------------------------------
# Data collapse

@dataclass(frozen=True)
class CurveFamily:
    """Observable curves on a shared eps grid, one row per size."""

    sizes: np.ndarray
    eps_grid: np.ndarray
    values: np.ndarray
    observable: str

    def __post_init__(self):
        sizes = np.asarray(self.sizes, dtype=float)
        grid = np.asarray(self.eps_grid, dtype=float)
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != (len(sizes), len(grid)):
            raise ValueError("values must have shape (n_sizes, n_grid)")
        order = np.argsort(sizes, kind="stable")
        sizes, vals = sizes[order], vals[order]
        if np.any(np.diff(sizes) <= 0):
            raise ValueError("sizes must be distinct")
        if np.any(np.diff(grid) <= 0):
            raise ValueError("eps grid must be strictly increasing")
        if not np.all(np.isfinite(vals)):
            raise ValueError("family contains non-finite values")
        object.__setattr__(self, "sizes", sizes)
        object.__setattr__(self, "eps_grid", grid)
        object.__setattr__(self, "values", vals)


def collapse_objective(family: CurveFamily, delta_jk: float, nu: float,
                       eps_c_star: float) -> float:
    """Spread of the rescaled curves around their pooled master curve.

    Curves are rescaled to y L^{-delta_jk} against x = (eps - eps_c*) L^{1/nu};
    each curve is compared with the piecewise-linear interpolant through all
    other curves' points, restricted to their abscissa range.  The mean squared
    deviation is normalized by the mean squared rescaled value, making the
    objective invariant under a common rescaling and hence comparable across
    different delta_jk.  Lower is better; zero means exact collapse.
    """
    sizes = family.sizes
    xs = [(family.eps_grid - eps_c_star) * L ** (1.0 / nu) for L in sizes]
    ys = [family.values[i] * sizes[i] ** (-delta_jk) for i in range(len(sizes))]
    total, count = 0.0, 0
    for i in range(len(sizes)):
        other_x = np.concatenate([xs[k] for k in range(len(sizes)) if k != i])
        other_y = np.concatenate([ys[k] for k in range(len(sizes)) if k != i])
        order = np.argsort(other_x, kind="stable")
        other_x, other_y = other_x[order], other_y[order]
        inside = (xs[i] >= other_x[0]) & (xs[i] <= other_x[-1])
        if not np.any(inside):
            continue
        interp = np.interp(xs[i][inside], other_x, other_y)
        total += float(np.sum((ys[i][inside] - interp) ** 2))
        count += int(np.sum(inside))
    if count == 0:
        raise WindowError("rescaled curves share no abscissa overlap")
    scale = float(np.mean(np.concatenate(ys) ** 2))
    if scale == 0.0:
        raise WindowError("rescaled family is identically zero")
    return (total / count) / scale


@dataclass(frozen=True)
class CollapseOptimum:
    nu: float
    eps_c_star: float
    quality: float
    boundary_warning: bool


def optimize_collapse(family: CurveFamily, delta_jk: float | None,
                      nu_range: tuple[float, float],
                      ec_range: tuple[float, float],
                      *, coarse: tuple[int, int] = (15, 9)) -> CollapseOptimum:
    """Minimize the collapse objective over (nu, eps_c*).

    delta_jk is held fixed when given; delta_jk=None ties it to 2/nu during
    the search.  A coarse grid seeds a Nelder-Mead polish with a fixed initial
    simplex, so the result is deterministic.
    """

    def objective(point):
        nu, ec = float(point[0]), float(point[1])
        if not (nu_range[0] <= nu <= nu_range[1] and ec_range[0] <= ec <= ec_range[1]):
            return np.inf
        d = 2.0 / nu if delta_jk is None else delta_jk
        try:
            return collapse_objective(family, d, nu, ec)
        except WindowError:
            return np.inf

    nus = np.linspace(nu_range[0], nu_range[1], coarse[0])
    ecs = np.linspace(ec_range[0], ec_range[1], coarse[1])
    best = min(((objective((n, e)), n, e) for n in nus for e in ecs),
               key=lambda t: t[0])
    if not np.isfinite(best[0]):
        raise WindowError("collapse objective is undefined everywhere on the seed grid")
    result = minimize(objective, [best[1], best[2]], method="Nelder-Mead",
                      options=dict(xatol=1e-7, fatol=1e-16, maxiter=800))
    nu, ec = float(result.x[0]), float(result.x[1])
    margin = 1e-3
    boundary = bool(
        nu - nu_range[0] < margin * (nu_range[1] - nu_range[0])
        or nu_range[1] - nu < margin * (nu_range[1] - nu_range[0])
        or ec - ec_range[0] < margin * (ec_range[1] - ec_range[0])
        or ec_range[1] - ec < margin * (ec_range[1] - ec_range[0]))
    return CollapseOptimum(nu=nu, eps_c_star=ec, quality=float(result.fun),
                           boundary_warning=boundary)


# ---------------------------------------------------------------------------
# End-to-end pipelines

@dataclass(frozen=True)
class ScalingReport:
    """Fitted critical point, exponent, and scaling dimensions with diagnostics.

    delta_ee is the converged (size-extrapolated) dimension, matching the
    convention that nu and delta_ee describe the infinite-size limit; the raw
    five-point fit is kept in diagnostics as delta_ee_global.  delta_pp and
    delta_ep are plain log-log fits of the values at the pseudo-critical
    points, where the drift is mild.
    """

    eps_c_star: float
    fit_a: float
    fit_b: float
    nu: float
    delta_ee: float
    delta_pp: float
    delta_ep: float
    delta_eps: float
    delta_phi: float
    collapse_quality_gee: float
    collapse_quality_fep: float
    diagnostics: dict = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "eps_c_star": self.eps_c_star,
            "fit_a": self.fit_a,
            "fit_b": self.fit_b,
            "nu": self.nu,
            "delta_ee": self.delta_ee,
            "delta_pp": self.delta_pp,
            "delta_ep": self.delta_ep,
            "delta_eps": self.delta_eps,
            "delta_phi": self.delta_phi,
            "collapse_quality_gee": self.collapse_quality_gee,
            "collapse_quality_fep": self.collapse_quality_fep,
            "diagnostics": self.diagnostics,
        }


def _point(size: float, eps: float, n_cut: int, delta: float) -> QGTResult:
    return qgt_spectral(ModelParams.from_size(size, eps, n_cut=n_cut, delta=delta))


def sweep_family(sizes: Sequence[float], eps_grid: np.ndarray, n_cut: int,
                 delta: float = 1.0,
                 point_map: Callable | None = None) -> list[list[QGTResult]]:
    """Evaluate the spectral tensor on sizes x eps_grid, optionally in parallel.

    point_map(func, items) may be an ordered parallel mapper; results keep
    grid order either way.
    """
    tasks = [(L, e) for L in sizes for e in eps_grid]
    fn = lambda t: _point(t[0], t[1], n_cut, delta)
    results = list(point_map(fn, tasks)) if point_map is not None else [fn(t) for t in tasks]
    n = len(eps_grid)
    return [results[i * n:(i + 1) * n] for i in range(len(sizes))]


def scaling_pipeline(sizes: Sequence[float] = DEFAULT_SIZES,
                     n_cut: int = DEFAULT_N_CUT,
                     delta: float = 1.0,
                     peak_bracket: tuple[float, float] = DEFAULT_PEAK_BRACKET,
                     collapse_window: tuple[float, float] = DEFAULT_COLLAPSE_WINDOW,
                     collapse_step: float = DEFAULT_COLLAPSE_STEP,
                     point_map: Callable | None = None) -> ScalingReport:
    """Full finite-size-scaling analysis at the given sizes.

    Stages: per-size peak location of g_ee, critical-point extrapolation,
    exponent fits (converged delta_ee and nu from secant slopes, global fits
    for delta_pp and delta_ep at the pseudo-critical points), the data-collapse
    qualities on a shared eps window, and the curvature-collapse optimum.
    """
    sizes = np.asarray(sorted(sizes), dtype=float)
    if len(sizes) < 4:
        raise FitError("the scaling pipeline needs at least 4 sizes")

    warnings: list[str] = []
    peak_eps, peak_results = [], []
    for L in sizes:
        ec, _ = locate_peak(lambda e: _point(L, e, n_cut, delta).g_ee, peak_bracket)
        res = _point(L, ec, n_cut, delta)
        if res.cutoff_warning:
            warnings.append(f"cutoff-inadequate point excluded: L={L:g} eps={ec:.6f}")
        peak_eps.append(ec)
        peak_results.append(res)

    keep = np.array([not r.cutoff_warning for r in peak_results])
    degraded = bool(np.any(~keep))
    sizes_kept = sizes[keep]
    if len(sizes_kept) < 4:
        raise FitError("fewer than 4 sizes survive the cutoff-adequacy gate")
    ecs = np.array(peak_eps)[keep]
    g_peak = np.array([r.g_ee for r in peak_results])[keep]
    gpp_peak = np.array([r.g_pp for r in peak_results])[keep]
    fep_peak = np.abs([r.f_ep for r in peak_results])[keep]
    nbar_peak = np.array([r.mean_n for r in peak_results])[keep]

    crit = extrapolate_critical_point(sizes_kept, ecs)
    if crit.boundary_warning:
        warnings.append("critical-point drift exponent at search-range boundary")

    eff_sizes, slopes = pair_slopes(sizes_kept, g_peak)
    dee_fit = nu_convergence(eff_sizes, slopes)
    nu_fit = nu_convergence(eff_sizes, 2.0 / slopes)
    dee_global = fit_power_law(sizes_kept, g_peak)
    dpp_fit = fit_power_law(sizes_kept, gpp_peak)
    dep_fit = fit_power_law(sizes_kept, fep_peak)
    delta_eps, delta_phi, consistency = perturbation_dimensions(
        dee_fit.limit, dpp_fit.exponent, dep_fit.exponent)

    eps_grid = np.arange(collapse_window[0], collapse_window[1] + collapse_step / 2,
                         collapse_step)
    grid_results = sweep_family(sizes_kept, eps_grid, n_cut, delta, point_map)
    flagged = [(L, e) for L, row in zip(sizes_kept, grid_results)
               for e, r in zip(eps_grid, row) if r.cutoff_warning]
    if flagged:
        degraded = True
        warnings.extend(f"cutoff-inadequate family point: L={L:g} eps={e:.6f}"
                        for L, e in flagged[:20])

    fam_g = CurveFamily(sizes=sizes_kept, eps_grid=eps_grid,
                        values=np.array([[r.g_ee for r in row] for row in grid_results]),
                        observable="g_ee")
    fam_f = CurveFamily(sizes=sizes_kept, eps_grid=eps_grid,
                        values=np.abs([[r.f_ep for r in row] for row in grid_results]),
                        observable="f_ep")
    quality_gee = collapse_objective(fam_g, dee_fit.limit, nu_fit.limit, crit.limit)
    quality_fep = collapse_objective(fam_f, dep_fit.exponent, nu_fit.limit, crit.limit)

    ec_span = (min(crit.limit - 0.01, float(np.min(ecs)) - 0.02),
               float(np.max(ecs)) + 0.01)
    f_optimum = optimize_collapse(fam_f, 1.0, (1.2, 1.9), ec_span)
    if f_optimum.boundary_warning:
        warnings.append("curvature collapse optimum at a search boundary")

    diagnostics = {
        "sizes": [float(s) for s in sizes_kept],
        "n_cut": int(n_cut),
        "delta": float(delta),
        "peak_bracket": [float(peak_bracket[0]), float(peak_bracket[1])],
        "collapse_window": [float(collapse_window[0]), float(collapse_window[1])],
        "collapse_step": float(collapse_step),
        "eps_c_by_size": [float(v) for v in ecs],
        "g_ee_peak": [float(v) for v in g_peak],
        "g_pp_at_peak": [float(v) for v in gpp_peak],
        "f_ep_at_peak": [float(v) for v in fep_peak],
        "nbar_at_peak": [float(v) for v in nbar_peak],
        "pair_sizes": [float(v) for v in eff_sizes],
        "pair_slopes_gee": [float(v) for v in slopes],
        "delta_ee_global": dee_global.exponent,
        "delta_ee_sigma": abs(dee_global.exponent - dee_fit.limit),
        "delta_ee_fit": {"amplitude": dee_fit.amplitude, "exponent": dee_fit.exponent,
                         "residual": dee_fit.residual},
        "nu_fit": {"amplitude": nu_fit.amplitude, "exponent": nu_fit.exponent,
                   "residual": nu_fit.residual},
        "crit_fit_residual": crit.residual,
        "r_squared": {"delta_ee_global": dee_global.r_squared,
                      "delta_pp": dpp_fit.r_squared, "delta_ep": dep_fit.r_squared},
        "berry_dimension_consistency": consistency,
        "f_collapse_optimum": {"nu": f_optimum.nu, "eps_c_star": f_optimum.eps_c_star,
                               "quality": f_optimum.quality},
        "family_eps_grid": [float(v) for v in eps_grid],
        "family_g_ee": [[float(v) for v in row] for row in fam_g.values],
        "family_f_ep": [[float(v) for v in row] for row in fam_f.values],
        "degraded": degraded,
        "warnings": warnings,
    }
    return ScalingReport(
        eps_c_star=crit.limit, fit_a=crit.amplitude, fit_b=crit.exponent,
        nu=nu_fit.limit, delta_ee=dee_fit.limit, delta_pp=dpp_fit.exponent,
        delta_ep=dep_fit.exponent, delta_eps=delta_eps, delta_phi=delta_phi,
        collapse_quality_gee=quality_gee, collapse_quality_fep=quality_fep,
        diagnostics=diagnostics,
    )


@dataclass(frozen=True)
class K0Report:
    """Cutoff-scaling study at zero Kerr nonlinearity, tied back to the
    finite-Kerr pipeline through the photon-number scaling relations."""

    gamma1: float
    gamma2: float
    alpha_exp: float
    delta_nbar: float
    beta1: float
    beta2: float
    beta1_prime: float
    beta2_prime: float
    flagged: bool
    diagnostics: dict = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "gamma1": self.gamma1,
            "gamma2": self.gamma2,
            "alpha_exp": self.alpha_exp,
            "delta_nbar": self.delta_nbar,
            "beta1": self.beta1,
            "beta2": self.beta2,
            "beta1_prime": self.beta1_prime,
            "beta2_prime": self.beta2_prime,
            "flagged": self.flagged,
            "diagnostics": self.diagnostics,
        }


def k0_pipeline(ncut_list: Sequence[int] = DEFAULT_K0_CUTOFFS,
                sizes: Sequence[float] = DEFAULT_SIZES,
                delta: float = 1.0,
                scaling: ScalingReport | None = None,
                n_cut: int = DEFAULT_N_CUT,
                point_map: Callable | None = None) -> K0Report:
    """Cutoff scaling of the tensor at the K=0 critical drive eps = 1.

    Without Kerr nonlinearity the truncation itself plays the role of the
    system size, so the tail-weight gate is deliberately not applied here.
    eps is never taken above 1 in this mode.  The finite-Kerr part (the
    photon-number dimension and the scaling dimensions entering beta-prime)
    reuses a ScalingReport, which is computed on demand when not supplied.
    """
    ncut_list = sorted(int(n) for n in ncut_list)
    if len(ncut_list) < 5:
        raise FitError("the cutoff study needs at least 5 cutoffs")
    if scaling is None:
        scaling = scaling_pipeline(sizes=sizes, n_cut=n_cut, delta=delta,
                                   point_map=point_map)

    points = [qgt_spectral(ModelParams(delta=delta, kerr=0.0, eps=1.0, n_cut=nc))
              for nc in ncut_list]
    g_fit = fit_power_law(ncut_list, [p.g_ee for p in points])
    f_fit = fit_power_law(ncut_list, [abs(p.f_ep) for p in points])
    n_fit = fit_power_law(ncut_list, [p.mean_n for p in points])
    flagged = bool(min(g_fit.r_squared, f_fit.r_squared, n_fit.r_squared) < 0.99)

    diag = scaling.diagnostics
    eff_sizes, n_slopes = pair_slopes(np.asarray(diag["sizes"]),
                                      np.asarray(diag["nbar_at_peak"]))
    dn_fit = nu_convergence(eff_sizes, n_slopes)
    delta_nbar = dn_fit.limit

    beta1 = n_fit.exponent * g_fit.exponent
    beta2 = n_fit.exponent * f_fit.exponent
    beta1_prime = scaling.delta_ee / delta_nbar
    beta2_prime = scaling.delta_ep / delta_nbar

    diagnostics = {
        "ncut_list": [int(n) for n in ncut_list],
        "g_ee": [float(p.g_ee) for p in points],
        "f_ep": [float(abs(p.f_ep)) for p in points],
        "nbar": [float(p.mean_n) for p in points],
        "r_squared": {"gamma1": g_fit.r_squared, "gamma2": f_fit.r_squared,
                      "alpha": n_fit.r_squared},
        "nbar_pair_sizes": [float(v) for v in eff_sizes],
        "nbar_pair_slopes": [float(v) for v in n_slopes],
        "delta_nbar_fit": {"amplitude": dn_fit.amplitude, "exponent": dn_fit.exponent,
                           "residual": dn_fit.residual,
                           "boundary_warning": dn_fit.boundary_warning},
        "scaling_eps_c_star": scaling.eps_c_star,
        "scaling_delta_ee": scaling.delta_ee,
        "scaling_delta_ep": scaling.delta_ep,
    }
    return K0Report(gamma1=g_fit.exponent, gamma2=f_fit.exponent,
                    alpha_exp=n_fit.exponent, delta_nbar=delta_nbar,
                    beta1=beta1, beta2=beta2,
                    beta1_prime=beta1_prime, beta2_prime=beta2_prime,
                    flagged=flagged, diagnostics=diagnostics)
