import argparse
import json

import pytest

from src.anticonc.cli.options import load_config_file, merge_ensemble, resolve_config, resolve_statistics
from src.anticonc.core.config import ReadoutMode
from src.anticonc.core.exceptions import ConfigError


def _args(**values) -> argparse.Namespace:
    return argparse.Namespace(**values)


class TestLoadConfigFile:
    def test_no_path(self):
        assert load_config_file(None) == {}

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "c.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_config_file(str(path))

    def test_top_level_must_be_object(self, tmp_path):
        path = tmp_path / "c.json"
        path.write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_config_file(str(path))


class TestMergeEnsemble:
    """Ensemble flags on top of the config file section."""

    def test_flags_override(self):
        spec = merge_ensemble({"ensemble": "brickwork", "qubits": 4, "depth": 2}, _args(depth=8))
        assert spec == {"ensemble": "brickwork", "qubits": 4, "depth": 8}

    def test_switching_ensemble_drops_file_fields(self):
        spec = merge_ensemble({"ensemble": "brickwork", "qubits": 4, "depth": 2}, _args(ensemble="haar", qubits=3))
        assert spec == {"ensemble": "haar", "qubits": 3}


class TestResolveConfig:
    """Defaults, then the config file, then flags."""

    def test_defaults_apply(self):
        config = resolve_config(_args(m=1), ensemble="quench", defaults={"trials": 100, "seed": 0})
        assert config.trials == 100
        assert config.ensemble.m == 1
        assert config.ensemble.readout == ReadoutMode.EFFECTIVE

    def test_file_and_flags(self, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(
            json.dumps({"ensemble": {"ensemble": "haar", "qubits": 2}, "trials": 5, "seed": 3}), encoding="utf-8"
        )
        config = resolve_config(_args(config=str(path), seed=9, threads=2, alpha=0.25))
        assert (config.trials, config.seed, config.threads) == (5, 9, 2)
        assert config.statistics.alpha == 0.25

    def test_seed_required(self):
        with pytest.raises(ConfigError):
            resolve_config(_args(ensemble="haar", qubits=2, trials=3))

    def test_validation_error_is_config_error(self):
        with pytest.raises(ConfigError) as exc:
            resolve_config(_args(ensemble="haar", qubits=2, trials=0, seed=1))
        assert "trials" in exc.value.message


class TestResolveStatistics:
    def test_tolerances_from_file(self, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"statistics": {"design": True}, "tolerances": {"se_slack": 4.0}}), encoding="utf-8")
        selection, tolerances = resolve_statistics(_args(config=str(path), moments=True))
        assert selection.design and selection.moments
        assert tolerances.se_slack == 4.0

    def test_unknown_statistic(self, tmp_path):
        path = tmp_path / "c.json"
        path.write_text(json.dumps({"statistics": {"median": True}}), encoding="utf-8")
        with pytest.raises(ConfigError):
            resolve_statistics(_args(config=str(path)))
