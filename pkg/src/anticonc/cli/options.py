"""
Shared flags and configuration resolution.

Precedence is command-line flags, then the JSON file given with ``--config``, then settings.
Flags default to ``None`` so that only flags actually given override the file.
"""

import argparse
import json
from typing import Any

from pydantic import ValidationError

from ..core.config import ColoringParity, ReadoutMode
from ..core.exceptions import ConfigError
from ..schemas.experiment import ExperimentConfig, StatisticSelection, ToleranceOverrides

ENSEMBLES = ("haar", "brickwork", "iqp", "diagonal", "quench")

# flag destination -> ensemble spec field
ENSEMBLE_FIELDS = {
    "qubits": "qubits",
    "depth": "depth",
    "source": "source",
    "structure": "structure",
    "m": "m",
    "column_base": "column_base",
    "coloring_parity": "coloring_parity",
    "readout": "readout",
}

STATISTIC_FIELDS = ("moments", "anticonc", "paley_zygmund", "ks_porter_thomas", "design", "alpha", "epsilon")


# -------------- flags --------------
def add_run_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JSON experiment config; flags override its values")
    parser.add_argument("--out", help="output directory")
    parser.add_argument("--threads", type=int, help="worker processes (default: ANTICONC_THREADS or 1)")
    parser.add_argument("--seed", type=int, help="64-bit master seed")
    parser.add_argument("--trials", type=int, help="number of Monte Carlo trials")


def add_ensemble_arguments(parser: argparse.ArgumentParser, ensemble: bool = True) -> None:
    if ensemble:
        parser.add_argument("--ensemble", choices=ENSEMBLES)
    parser.add_argument("--qubits", type=int)
    parser.add_argument("--depth", type=int)
    parser.add_argument("--source", choices=("haar", "bis"), help="two-qubit gate source of brickwork circuits")
    parser.add_argument("--structure", choices=("complete", "chain"), help="pair structure of diagonal circuits")
    add_quench_arguments(parser)


def add_quench_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, help="quench lattice rows")
    parser.add_argument("--column-base", type=int, choices=(0, 1))
    parser.add_argument("--coloring-parity", choices=[p.value for p in ColoringParity])
    parser.add_argument("--readout", choices=[r.value for r in ReadoutMode])


def add_statistic_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--moments", action="store_true", default=None, help="first and second moments")
    parser.add_argument("--anticonc", action="store_true", default=None, help="fraction above alpha(1-eps)/N")
    parser.add_argument("--paley-zygmund", action="store_true", default=None)
    parser.add_argument("--ks-pt", dest="ks_porter_thomas", action="store_true", default=None)
    parser.add_argument("--design", action="store_true", default=None, help="2-design deviation delta2")
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--epsilon", type=float)


# -------------- resolution --------------
def load_config_file(path: str | None) -> dict[str, Any]:
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise ConfigError(f"Cannot read config file {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be a JSON object")
    return data


def _validation_message(exc: ValidationError) -> str:
    first = exc.errors()[0]
    location = ".".join(str(part) for part in first["loc"]) or "config"
    return f"{location}: {first['msg']}"


def merge_ensemble(base: dict[str, Any], args: argparse.Namespace, ensemble: str | None = None) -> dict[str, Any]:
    chosen = ensemble or getattr(args, "ensemble", None)
    spec = dict(base) if not chosen or base.get("ensemble") == chosen else {}
    if chosen:
        spec["ensemble"] = chosen
    for dest, field in ENSEMBLE_FIELDS.items():
        value = getattr(args, dest, None)
        if value is not None:
            spec[field] = value
    return spec


def merge_statistics(base: dict[str, Any], args: argparse.Namespace) -> dict[str, Any]:
    merged = dict(base)
    for field in STATISTIC_FIELDS:
        value = getattr(args, field, None)
        if value is not None:
            merged[field] = value
    return merged


def resolve_config(
    args: argparse.Namespace,
    ensemble: str | None = None,
    defaults: dict[str, Any] | None = None,
) -> ExperimentConfig:
    """Fully resolved :class:`ExperimentConfig` from ``defaults``, ``--config`` and the flags."""
    data = {**(defaults or {}), **load_config_file(getattr(args, "config", None))}
    data["ensemble"] = merge_ensemble(data.get("ensemble", {}), args, ensemble)
    for field in ("trials", "seed", "outcome", "out", "threads"):
        value = getattr(args, field, None)
        if value is not None:
            data[field] = value
    data["statistics"] = merge_statistics(data.get("statistics", {}), args)
    if "seed" not in data:
        raise ConfigError("A seed is required (--seed or \"seed\" in the config file)")
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(_validation_message(exc)) from exc


def resolve_statistics(args: argparse.Namespace) -> tuple[StatisticSelection, ToleranceOverrides]:
    """Statistic selection and tolerance overrides for commands that take no ensemble."""
    data = load_config_file(getattr(args, "config", None))
    try:
        selection = StatisticSelection.model_validate(merge_statistics(data.get("statistics", {}), args))
        tolerances = ToleranceOverrides.model_validate(data.get("tolerances", {}))
    except ValidationError as exc:
        raise ConfigError(_validation_message(exc)) from exc
    return selection, tolerances
