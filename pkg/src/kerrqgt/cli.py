"""Command-line interface for the sweep runners.

Subcommands: phase-diagram, qgt, scaling, collapse, k0, plots.  Options may
also come from a JSON config file (--config); explicit command-line flags
take precedence over file entries, which take precedence over built-in
defaults.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .plots import emit_plots
from .scaling import (
    DEFAULT_COLLAPSE_STEP,
    DEFAULT_COLLAPSE_WINDOW,
    DEFAULT_K0_CUTOFFS,
    DEFAULT_N_CUT,
    DEFAULT_PEAK_BRACKET,
    DEFAULT_SIZES,
)
from .sweep import (
    SweepConfig,
    run_collapse,
    run_k0,
    run_phase_diagram,
    run_qgt_sweep,
    run_scaling,
)

MODE_DEFAULTS = {
    "phase-diagram": dict(size=2000.0, eps_range=(0.0, 1.5, 31),
                          phi_range=(0.0, 2.0 * np.pi, 24), n_cut=DEFAULT_N_CUT),
    "qgt": dict(sizes=DEFAULT_SIZES, eps_range=(0.95, 1.06, 23), phi=0.0,
                method="spectral", n_cut=DEFAULT_N_CUT),
    "scaling": dict(sizes=DEFAULT_SIZES, n_cut=DEFAULT_N_CUT,
                    peak_bracket=DEFAULT_PEAK_BRACKET,
                    collapse_window=DEFAULT_COLLAPSE_WINDOW,
                    collapse_step=DEFAULT_COLLAPSE_STEP),
    "k0": dict(ncut_list=DEFAULT_K0_CUTOFFS, sizes=DEFAULT_SIZES, n_cut=DEFAULT_N_CUT,
               peak_bracket=DEFAULT_PEAK_BRACKET,
               collapse_window=DEFAULT_COLLAPSE_WINDOW,
               collapse_step=DEFAULT_COLLAPSE_STEP),
    "collapse": dict(observable="g_ee", nu_range=(1.2, 1.9)),
    "plots": dict(),
}

RUNNERS = {
    "phase-diagram": run_phase_diagram,
    "qgt": run_qgt_sweep,
    "scaling": run_scaling,
    "k0": run_k0,
    "collapse": run_collapse,
}


def parse_range(text: str) -> tuple:
    """Parse 'min:max:steps' into (float, float, int)."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected min:max:steps, got {text!r}")
    lo, hi, steps = float(parts[0]), float(parts[1]), int(parts[2])
    if steps < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}")
    return lo, hi, steps


def parse_pair(text: str) -> tuple:
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    lo, hi = float(parts[0]), float(parts[1])
    if hi <= lo:
        raise argparse.ArgumentTypeError(f"invalid interval {text!r}")
    return lo, hi


def parse_int_list(text: str) -> tuple:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated ints: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help="worker count")
    common.add_argument("--config", type=str, default=None, help="JSON config file")
    common.add_argument("--out", type=str, default=None, help="output directory")
    common.add_argument("--force", action="store_true", default=None,
                        help="rerun even if a matching manifest exists")
    common.add_argument("--delta", type=float, default=None, help="detuning scale")

    parser = argparse.ArgumentParser(
        prog="kerrqgt",
        description="Geometric-tensor sweeps for the driven Kerr resonator.")
    sub = parser.add_subparsers(dest="mode", required=True)

    p = sub.add_parser("phase-diagram", parents=[common],
                       help="order-parameter grid over (eps, phi)")
    p.add_argument("--L", dest="size", type=float, default=None)
    p.add_argument("--eps", dest="eps_range", type=parse_range, default=None,
                   metavar="MIN:MAX:STEPS")
    p.add_argument("--phi", dest="phi_range", type=parse_range, default=None,
                   metavar="MIN:MAX:STEPS")
    p.add_argument("--ncut", dest="n_cut", type=int, default=None)

    p = sub.add_parser("qgt", parents=[common], help="tensor components on a grid")
    p.add_argument("--L-list", dest="sizes", type=parse_int_list, default=None)
    p.add_argument("--eps", dest="eps_range", type=parse_range, default=None,
                   metavar="MIN:MAX:STEPS")
    p.add_argument("--phi", dest="phi", type=float, default=None)
    p.add_argument("--method", choices=["spectral", "fd", "both"], default=None)
    p.add_argument("--ncut", dest="n_cut", type=int, default=None)

    p = sub.add_parser("scaling", parents=[common], help="finite-size-scaling report")
    p.add_argument("--L-list", dest="sizes", type=parse_int_list, default=None)
    p.add_argument("--ncut", dest="n_cut", type=int, default=None)
    p.add_argument("--bracket", dest="peak_bracket", type=parse_pair, default=None,
                   metavar="LO:HI")
    p.add_argument("--eps-window", dest="collapse_window", type=parse_pair,
                   default=None, metavar="LO:HI")
    p.add_argument("--eps-step", dest="collapse_step", type=float, default=None)

    p = sub.add_parser("k0", parents=[common], help="cutoff-scaling study at K=0")
    p.add_argument("--ncut-list", dest="ncut_list", type=parse_int_list, default=None)
    p.add_argument("--L-list", dest="sizes", type=parse_int_list, default=None)
    p.add_argument("--ncut", dest="n_cut", type=int, default=None)

    p = sub.add_parser("collapse", parents=[common],
                       help="collapse optimization on a stored family")
    p.add_argument("--input", dest="input_path", type=str, default=None,
                   help="scaling_report.json to read (default: <out>/scaling_report.json)")
    p.add_argument("--observable", choices=["g_ee", "f_ep"], default=None)
    p.add_argument("--delta-jk", dest="delta_jk", type=float, default=None)
    p.add_argument("--nu-range", dest="nu_range", type=parse_pair, default=None,
                   metavar="LO:HI")
    p.add_argument("--ec-range", dest="ec_range", type=parse_pair, default=None,
                   metavar="LO:HI")

    sub.add_parser("plots", parents=[common], help="emit plot scripts for existing outputs")
    return parser


def assemble_config(args: argparse.Namespace) -> SweepConfig:
    settings = dict(mode=args.mode, out_dir="runs", threads=1, force=False, delta=1.0)
    settings.update(MODE_DEFAULTS[args.mode])

    if args.config:
        loaded = json.loads(Path(args.config).read_text())
        for key, value in loaded.items():
            settings[key] = tuple(value) if isinstance(value, list) else value

    overrides = {k: v for k, v in vars(args).items()
                 if k not in ("mode", "config") and v is not None}
    if "out" in overrides:
        overrides["out_dir"] = overrides.pop("out")
    settings.update(overrides)

    fields = set(SweepConfig.__dataclass_fields__)
    filtered = {k: v for k, v in settings.items() if k in fields}
    return SweepConfig(**filtered)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = assemble_config(args)

    if args.mode == "plots":
        written = emit_plots(config.out_dir)
        if not written:
            print(f"no plottable outputs found in {config.out_dir}")
        for path in written:
            print(f"wrote {path}")
        return 0

    runner = RUNNERS[args.mode]
    written = runner(config)
    if not written:
        print(f"{args.mode}: outputs in {config.out_dir} are current "
              f"(manifest verified); use --force to rerun")
    for path in written:
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
