"""Parameter sweeps with parallel execution, CSV/JSON persistence and manifests.

Work units are single grid points (pure functions of their parameters); a
fixed-size thread pool maps over them and results are merged in grid order, so
output files are byte-identical for any worker count.  Every file is written
to a temporary name and renamed atomically; the manifest is written last, so
its presence certifies a completed run.
"""

from __future__ import annotations

import concurrent.futures
import datetime
import hashlib
import json
import os
from dataclasses import dataclass, asdict
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from . import __version__
from .eigensolver import ground_state
from .errors import SchemaError
from .model import ModelParams, mean_photon
from .qgt import berry_plaquette, metric_overlap, qgt_spectral
from .scaling import (
    CurveFamily,
    ScalingReport,
    DEFAULT_COLLAPSE_STEP,
    DEFAULT_COLLAPSE_WINDOW,
    DEFAULT_K0_CUTOFFS,
    DEFAULT_N_CUT,
    DEFAULT_PEAK_BRACKET,
    DEFAULT_SIZES,
    k0_pipeline,
    optimize_collapse,
    scaling_pipeline,
)

PHASE_DIAGRAM_COLUMNS = ["eps", "phi", "L", "ncut", "mean_n", "rho", "warn"]
QGT_COLUMNS = ["L", "eps", "phi", "ncut", "method", "g_ee", "g_pp", "g_ep",
               "f_ep", "gap", "mean_n", "warn"]
SCALING_REPORT_NAME = "scaling_report.json"
K0_REPORT_NAME = "k0_report.json"


# ---------------------------------------------------------------------------
# Deterministic serialization (floats at 17 significant digits)

def fmt_float(x: float) -> str:
    return f"{float(x):.17g}"


def _to_json(obj, indent: int = 0) -> str:
    pad = "  " * indent
    pad_in = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad_in}{json.dumps(str(k))}: {_to_json(v, indent + 1)}'
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad_in}{_to_json(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(obj)
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    raise TypeError(f"cannot serialize {type(obj)}")


def dumps_json(obj) -> str:
    return _to_json(obj) + "\n"


def atomic_write_text(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)


def sha256_file(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def write_csv(path: Path, columns: Sequence[str], rows: Iterable[Sequence]) -> None:
    lines = [",".join(columns)]
    for row in rows:
        cells = []
        for value in row:
            if isinstance(value, bool):
                cells.append("1" if value else "0")
            elif isinstance(value, (int, np.integer)):
                cells.append(str(int(value)))
            elif isinstance(value, (float, np.floating)):
                cells.append(fmt_float(value))
            else:
                cells.append(str(value))
        lines.append(",".join(cells))
    atomic_write_text(path, "\n".join(lines) + "\n")


def read_csv(path: Path) -> tuple[list[str], list[list[str]]]:
    lines = path.read_text().strip().splitlines()
    header = lines[0].split(",")
    return header, [line.split(",") for line in lines[1:]]


# ---------------------------------------------------------------------------
# Parallel mapping (ordered, deterministic)

def ordered_parallel_map(fn: Callable, items: Sequence, threads: int) -> list:
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# Configuration and manifest

@dataclass(frozen=True)
class SweepConfig:
    """One run's full parameter set; echoed verbatim into the manifest."""

    mode: str
    out_dir: str
    threads: int = 1
    force: bool = False
    delta: float = 1.0
    n_cut: int = DEFAULT_N_CUT
    size: float = 2000.0
    sizes: tuple = DEFAULT_SIZES
    eps_range: tuple = (0.0, 1.5, 31)
    phi_range: tuple = (0.0, 2.0 * np.pi, 24)
    phi: float = 0.0
    method: str = "spectral"
    ncut_list: tuple = DEFAULT_K0_CUTOFFS
    peak_bracket: tuple = DEFAULT_PEAK_BRACKET
    collapse_window: tuple = DEFAULT_COLLAPSE_WINDOW
    collapse_step: float = DEFAULT_COLLAPSE_STEP
    input_path: str | None = None
    observable: str = "g_ee"
    delta_jk: float | None = None
    nu_range: tuple = (1.2, 1.9)
    ec_range: tuple | None = None

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.method not in ("spectral", "fd", "both"):
            raise ValueError(f"unknown method {self.method!r}")
        for rng in (self.eps_range, self.phi_range):
            if len(rng) != 3 or rng[1] < rng[0] or int(rng[2]) < 1:
                raise ValueError(f"malformed grid range {rng}")

    def echo(self) -> dict:
        raw = asdict(self)
        return {k: list(v) if isinstance(v, tuple) else v for k, v in raw.items()}


def _manifest_path(out: Path, mode: str) -> Path:
    return out / f"manifest_{mode}.json"


def _write_manifest(out: Path, config: SweepConfig, started: str,
                    warnings: list[str], outputs: list[Path]) -> Path:
    manifest = {
        "mode": config.mode,
        "version": __version__,
        "config": config.echo(),
        "started_at": started,
        "finished_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "warnings": warnings,
        "outputs": {p.name: sha256_file(p) for p in outputs},
    }
    path = _manifest_path(out, config.mode)
    atomic_write_text(path, dumps_json(manifest))
    return path


def manifest_is_current(out: Path, config: SweepConfig) -> bool:
    """True when a completed manifest matches this config and its files verify."""
    path = _manifest_path(out, config.mode)
    if not path.exists():
        return False
    try:
        manifest = json.loads(path.read_text())
    except json.JSONDecodeError:
        return False
    if dumps_json(manifest.get("config")) != dumps_json(config.echo()):
        return False
    for name, digest in manifest.get("outputs", {}).items():
        target = out / name
        if not target.exists() or sha256_file(target) != digest:
            return False
    return True


def _utcnow() -> str:
    return datetime.datetime.now(datetime.timezone.utc).isoformat()


def _prepare(config: SweepConfig) -> tuple[Path, str] | None:
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if not config.force and manifest_is_current(out, config):
        return None
    return out, _utcnow()


# ---------------------------------------------------------------------------
# Runners

def run_phase_diagram(config: SweepConfig) -> list[Path]:
    """Order-parameter grid rho(eps, phi) at fixed effective size."""
    setup = _prepare(config)
    if setup is None:
        return []
    out, started = setup

    eps_grid = np.linspace(*config.eps_range[:2], int(config.eps_range[2]))
    phi_grid = np.linspace(*config.phi_range[:2], int(config.phi_range[2]))
    eps_max = float(np.max(eps_grid))
    if eps_max > 1.0:
        required = int(np.ceil(config.size * (eps_max - 1.0) / 2.0 * 1.3 + 50))
        if config.n_cut < required:
            raise ValueError(
                f"cutoff check failed at grid corner eps={eps_max:g}, "
                f"phi={float(phi_grid[-1]):g}: need n_cut >= {required}, "
                f"got {config.n_cut}")

    points = [(e, p) for e in eps_grid for p in phi_grid]

    def work(point):
        eps, phi = point
        params = ModelParams.from_size(config.size, eps, phi=phi,
                                       n_cut=config.n_cut, delta=config.delta)
        gs = ground_state(params)
        n_mean = mean_photon(gs.fock_vector)
        return (eps, phi, config.size, config.n_cut, n_mean,
                n_mean / config.size, "cutoff" if gs.cutoff_warning else "")

    rows = ordered_parallel_map(work, points, config.threads)
    warnings = [f"cutoff-inadequate point: eps={r[0]:g} phi={r[1]:g}"
                for r in rows if r[6]]
    csv_path = out / "phase_diagram.csv"
    write_csv(csv_path, PHASE_DIAGRAM_COLUMNS, rows)
    _write_manifest(out, config, started, warnings, [csv_path])
    return [csv_path]


def run_qgt_sweep(config: SweepConfig) -> list[Path]:
    """Tensor components on a (size, eps) grid at fixed phi."""
    setup = _prepare(config)
    if setup is None:
        return []
    out, started = setup

    eps_grid = np.linspace(*config.eps_range[:2], int(config.eps_range[2]))
    points = [(L, e) for L in config.sizes for e in eps_grid]
    methods = {"spectral": ("spectral",), "fd": ("fd",),
               "both": ("spectral", "fd")}[config.method]

    def work(point):
        size, eps = point
        params = ModelParams.from_size(size, eps, phi=config.phi,
                                       n_cut=config.n_cut, delta=config.delta)
        rows, failures = [], []
        try:
            spectral = qgt_spectral(params)
        except Exception as exc:
            failures.append(f"L={size:g} eps={eps:g}: {exc}")
            return rows, failures
        warn = "cutoff" if spectral.cutoff_warning else ""
        if "spectral" in methods:
            rows.append((size, eps, config.phi, config.n_cut, "spectral",
                         spectral.g_ee, spectral.g_pp, spectral.g_ep,
                         spectral.f_ep, spectral.gap, spectral.mean_n, warn))
        if "fd" in methods:
            try:
                g = metric_overlap(params)
                f = berry_plaquette(params)
                rows.append((size, eps, config.phi, config.n_cut, "fd",
                             float(g[0, 0]), float(g[1, 1]), float(g[0, 1]), f,
                             spectral.gap, spectral.mean_n, warn))
            except Exception as exc:
                failures.append(f"L={size:g} eps={eps:g} (fd): {exc}")
        return rows, failures

    results = ordered_parallel_map(work, points, config.threads)
    rows = [row for point_rows, _ in results for row in point_rows]
    warnings = [msg for _, failures in results for msg in failures]
    warnings += [f"cutoff-inadequate point: L={r[0]:g} eps={r[1]:g}"
                 for r in rows if r[11]]
    csv_path = out / "qgt.csv"
    write_csv(csv_path, QGT_COLUMNS, rows)
    _write_manifest(out, config, started, warnings, [csv_path])
    return [csv_path]


def run_scaling(config: SweepConfig) -> list[Path]:
    """Full scaling analysis; the JSON report carries the curve families."""
    setup = _prepare(config)
    if setup is None:
        return []
    out, started = setup

    mapper = lambda fn, items: ordered_parallel_map(fn, items, config.threads)
    report = scaling_pipeline(
        sizes=config.sizes, n_cut=config.n_cut, delta=config.delta,
        peak_bracket=tuple(config.peak_bracket),
        collapse_window=tuple(config.collapse_window),
        collapse_step=config.collapse_step, point_map=mapper)
    path = out / SCALING_REPORT_NAME
    atomic_write_text(path, dumps_json(report.to_dict()))
    _write_manifest(out, config, started, list(report.diagnostics["warnings"]), [path])
    return [path]


def load_scaling_report(path: Path) -> ScalingReport:
    data = json.loads(Path(path).read_text())
    return ScalingReport(
        eps_c_star=data["eps_c_star"], fit_a=data["fit_a"], fit_b=data["fit_b"],
        nu=data["nu"], delta_ee=data["delta_ee"], delta_pp=data["delta_pp"],
        delta_ep=data["delta_ep"], delta_eps=data["delta_eps"],
        delta_phi=data["delta_phi"],
        collapse_quality_gee=data["collapse_quality_gee"],
        collapse_quality_fep=data["collapse_quality_fep"],
        diagnostics=data["diagnostics"])


def run_k0(config: SweepConfig) -> list[Path]:
    """Cutoff-scaling study; reuses a matching scaling report when present."""
    setup = _prepare(config)
    if setup is None:
        return []
    out, started = setup

    scaling = None
    existing = out / SCALING_REPORT_NAME
    if existing.exists():
        candidate = load_scaling_report(existing)
        diag = candidate.diagnostics
        if (diag.get("sizes") == [float(s) for s in config.sizes]
                and diag.get("n_cut") == config.n_cut
                and diag.get("delta") == config.delta):
            scaling = candidate

    mapper = lambda fn, items: ordered_parallel_map(fn, items, config.threads)
    report = k0_pipeline(ncut_list=config.ncut_list, sizes=config.sizes,
                         delta=config.delta, scaling=scaling,
                         n_cut=config.n_cut, point_map=mapper)
    path = out / K0_REPORT_NAME
    atomic_write_text(path, dumps_json(report.to_dict()))
    warnings = ["a power-law fit has r^2 < 0.99"] if report.flagged else []
    _write_manifest(out, config, started, warnings, [path])
    return [path]


def family_from_report(report: ScalingReport, observable: str) -> CurveFamily:
    diag = report.diagnostics
    key = {"g_ee": "family_g_ee", "f_ep": "family_f_ep"}.get(observable)
    if key is None or key not in diag:
        raise SchemaError(f"scaling report carries no curve family for {observable!r}")
    return CurveFamily(sizes=np.asarray(diag["sizes"], dtype=float),
                       eps_grid=np.asarray(diag["family_eps_grid"], dtype=float),
                       values=np.asarray(diag[key], dtype=float),
                       observable=observable)


def run_collapse(config: SweepConfig) -> list[Path]:
    """Collapse optimization on a stored curve family."""
    setup = _prepare(config)
    if setup is None:
        return []
    out, started = setup

    source = Path(config.input_path) if config.input_path else out / SCALING_REPORT_NAME
    report = load_scaling_report(source)
    family = family_from_report(report, config.observable)
    delta_jk = config.delta_jk
    if delta_jk is None:
        delta_jk = {"g_ee": report.delta_ee, "f_ep": 1.0}[config.observable]
    ec_range = config.ec_range
    if ec_range is None:
        lo = min(report.eps_c_star - 0.01, float(np.min(family.eps_grid)))
        hi = float(np.max(family.eps_grid))
        ec_range = (lo, hi)

    optimum = optimize_collapse(family, delta_jk, tuple(config.nu_range),
                                tuple(ec_range))
    payload = {
        "observable": config.observable,
        "delta_jk": delta_jk,
        "nu": optimum.nu,
        "eps_c_star": optimum.eps_c_star,
        "quality": optimum.quality,
        "boundary_warning": optimum.boundary_warning,
        "source": source.name,
    }
    path = out / f"collapse_{config.observable}.json"
    atomic_write_text(path, dumps_json(payload))
    warn = ["collapse optimum at a search boundary"] if optimum.boundary_warning else []
    _write_manifest(out, config, started, warn, [path])
    return [path]
