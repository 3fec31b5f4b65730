import pytest
from pydantic import ValidationError

from src.anticonc.core.config import ColoringParity, ReadoutMode, Settings, settings


class TestSettingsDefaults:
    """Defaults used when neither flags nor the environment say otherwise."""

    def test_statistics(self):
        assert settings.SIGNIFICANCE == 0.01
        assert settings.KS_CRITICAL_VALUE == 1.628
        assert settings.SE_SLACK == 3.0
        assert settings.DESIGN_TOLERANCE == 0.1

    def test_quench_defaults(self):
        assert settings.COLUMN_BASE == 1
        assert settings.COLORING_PARITY == ColoringParity.DEFAULT
        assert settings.READOUT == ReadoutMode.EFFECTIVE
        assert settings.MAX_EXACT_M == 3


class TestSettingsEnvironment:
    """Values read from the environment."""

    def test_threads_alias(self, monkeypatch):
        monkeypatch.setenv("ANTICONC_THREADS", "3")
        assert Settings().THREADS == 3

    def test_readout_from_env(self, monkeypatch):
        monkeypatch.setenv("READOUT", "literal")
        assert Settings().READOUT == ReadoutMode.LITERAL

    def test_invalid_threads(self, monkeypatch):
        monkeypatch.setenv("ANTICONC_THREADS", "0")
        with pytest.raises(ValidationError):
            Settings()
