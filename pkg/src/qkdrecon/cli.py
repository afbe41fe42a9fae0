"""Command-line entry point: construct / sweep / thresholds / plot.

Exit codes: 0 success, 2 configuration error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

from .harness import (ConfigError, ExperimentConfig, SchemaError,
                      emit_plot_script, load_config, run_sweep, run_thresholds)


def _sweep_parser(sub):
    p = sub.add_parser("sweep", help="Monte Carlo efficiency sweep over a QBER grid")
    p.add_argument("--config", help="experiment file ([experiment] etc.)")
    p.add_argument("--mode", choices=("ldpc", "cascade"))
    p.add_argument("--qber-grid", nargs="+", type=float)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--output")
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--codes", nargs="+", help="alist files, ascending R0")
    p.add_argument("--delta", type=float)
    p.add_argument("--efficiency", type=float)
    p.add_argument("--efficiency-table")
    p.add_argument("--reveal-fraction", type=float)
    p.add_argument("--max-iter", type=int)
    p.add_argument("--passes", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--trial-log")


def _thresholds_parser(sub):
    p = sub.add_parser("thresholds", help="density-evolution threshold curves")
    p.add_argument("--config")
    p.add_argument("--distributions", nargs="+")
    p.add_argument("--qber-grid", nargs="+", type=float)
    p.add_argument("--delta", type=float)
    p.add_argument("--efficiency", type=float)
    p.add_argument("--efficiency-table")
    p.add_argument("--output")
    p.add_argument("--seed", type=int)


def _construct_parser(sub):
    p = sub.add_parser("construct", help="build a parity-check matrix (PEG)")
    p.add_argument("--distribution", required=True, help="lambda/rho file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True, help="alist path to write")


def _plot_parser(sub):
    p = sub.add_parser("plot", help="emit a plot script for a sweep CSV")
    p.add_argument("csv")
    p.add_argument("--output", help="script path (default: <csv>_plot.py)")


_OVERRIDES = {
    "mode": "mode", "qber_grid": "qbers", "trials": "trials", "seed": "seed",
    "output": "output", "n": "n", "t": "t", "codes": "code_paths",
    "distributions": "distribution_paths", "delta": "delta",
    "efficiency": "efficiency", "efficiency_table": "efficiency_table",
    "reveal_fraction": "reveal_fraction", "max_iter": "max_iter",
    "passes": "passes", "workers": "workers", "trial_log": "trial_log",
}


def _merge_config(args, default_mode: str) -> ExperimentConfig:
    base = load_config(args.config) if args.config else None
    fields = (dataclasses.asdict(base) if base
              else {"mode": default_mode, "qbers": (), "trials": 100,
                    "seed": 0, "output": "sweep.csv"})
    for flag, field in _OVERRIDES.items():
        value = getattr(args, flag, None)
        if value is not None:
            fields[field] = tuple(value) if isinstance(value, list) else value
    fields.setdefault("mode", default_mode)
    return ExperimentConfig(**fields)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="qkdrecon",
        description="Rate-compatible LDPC reconciliation experiments")
    sub = parser.add_subparsers(dest="command", required=True)
    _sweep_parser(sub)
    _thresholds_parser(sub)
    _construct_parser(sub)
    _plot_parser(sub)
    args = parser.parse_args(argv)

    try:
        if args.command == "sweep":
            config = _merge_config(args, default_mode="ldpc")
            records = run_sweep(config)
            for r in records:
                status = "ok" if r.fer <= 0.5 else "mostly failing"
                print(f"qber={r.qber:.4g} f={r.mean_f:.4f} fer={r.fer:.3f} "
                      f"msgs={r.mean_channel_uses:.1f} [{status}]")
            print(f"wrote {config.output}")
        elif args.command == "thresholds":
            config = _merge_config(args, default_mode="thresholds")
            rows = run_thresholds(config)
            for label, qber, pi, sigma, rate, eps_star, f_th in rows:
                print(f"{label}: qber={qber:.4g} pi={pi:.4f} sigma={sigma:.4f} "
                      f"eps*={eps_star:.4f} f_th={f_th:.4f}")
            print(f"wrote {config.output}")
        elif args.command == "construct":
            from .ldpc import load_degree_distribution, peg_construct, store_alist
            dist = load_degree_distribution(args.distribution)
            m = round(args.n * (1.0 - dist.design_rate))
            H = peg_construct(args.n, m, dist, args.seed)
            store_alist(H, args.output)
            print(f"wrote [{H.n},{H.k}] code ({H.num_edges} edges) to {args.output}")
        elif args.command == "plot":
            path = emit_plot_script(args.csv, args.output)
            print(f"wrote {path}")
    except (ConfigError, SchemaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
