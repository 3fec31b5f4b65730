import argparse

from ...core.exceptions import ConfigError
from ...experiments.runner import run_scan
from ..options import resolve_config

DEFAULTS = {"trials": 200, "ensemble": {"ensemble": "brickwork", "qubits": 6, "depth": 0}}


def parse_depths(value: str) -> list[int]:
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{value}'") from exc


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("scan-depth", help="2-design deviation and anticoncentration against depth")
    parser.add_argument("--config", help="JSON experiment config; flags override its values")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--threads", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--trials", type=int)
    parser.add_argument("--qubits", type=int)
    parser.add_argument("--source", choices=("haar", "bis"))
    parser.add_argument("--depths", type=parse_depths, help="comma-separated depths (default 0,n,4n,16n)")
    parser.add_argument("--alpha", type=float, default=0.5)
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    config = resolve_config(args, ensemble="brickwork", defaults=DEFAULTS)
    n = config.ensemble.n
    depths = args.depths or [0, n, 4 * n, 16 * n]
    if any(d < 0 for d in depths):
        raise ConfigError(f"Depths must be non-negative, got {depths}")
    summary, _ = run_scan(
        config.ensemble, depths, config.trials, config.seed, config.out, config.threads, config.statistics.alpha
    )
    print(f"{'depth':>6} {'delta2':>10} {'se':>9} {'frac':>7}")
    for row in summary.rows:
        print(f"{row.depth:>6} {row.delta2:>10.4f} {row.se:>9.4f} {row.frac:>7.3f}")
    print(
        f"monotone within {summary.slack} SE: {summary.monotone}; strictly decreasing: {summary.strictly_decreasing}; "
        f"first converged depth: {summary.first_converged_depth}"
    )
    return 0 if summary.monotone else 1
