"""Tests for ProofKit configuration."""

from pathlib import Path

import pytest

from proofkit.schemas import ProverOptions, SolverChoice
from proofkit.utils.config import (
    ProofKitSettings,
    get_config,
    reset_config,
)
from proofkit.utils.exceptions import ConfigError


class TestProofKitSettings:
    def test_default_settings(self, monkeypatch):
        """Test default configuration values."""
        for name in ("PROOFKIT_TIME_LIMIT", "PROOFKIT_MAX_LEN", "PROOFKIT_SOLVER", "PROOFKIT_LOG_LEVEL"):
            monkeypatch.delenv(name, raising=False)

        settings = ProofKitSettings(_env_file=None)

        assert settings.time_limit == 100.0
        assert settings.max_len == 8
        assert settings.num_abducts == 0
        assert settings.abduct_enumeration_cap == 200
        assert settings.solver == "auto"
        assert settings.pysat_engine == "glucose4"
        assert settings.external_solver is None
        assert settings.log_level == "WARNING"

    def test_custom_settings(self, monkeypatch):
        """Test custom configuration from environment."""
        monkeypatch.setenv("PROOFKIT_TIME_LIMIT", "30")
        monkeypatch.setenv("PROOFKIT_MAX_LEN", "12")
        monkeypatch.setenv("PROOFKIT_SOLVER", "builtin")
        monkeypatch.setenv("PROOFKIT_EXTERNAL_SOLVER", "/opt/kissat")
        monkeypatch.setenv("PROOFKIT_LOG_LEVEL", "DEBUG")

        settings = ProofKitSettings(_env_file=None)

        assert settings.time_limit == 30.0
        assert settings.max_len == 12
        assert settings.solver == "builtin"
        assert settings.external_solver == Path("/opt/kissat")
        assert settings.log_level == "DEBUG"


class TestConfigSingleton:
    def test_get_config_returns_same_instance(self):
        """Test that get_config returns singleton."""
        config1 = get_config()
        config2 = get_config()

        assert config1 is config2

    def test_reset_config(self, monkeypatch):
        """Test that reset_config rereads the environment."""
        monkeypatch.setenv("PROOFKIT_MAX_LEN", "5")
        config1 = get_config()
        monkeypatch.setenv("PROOFKIT_MAX_LEN", "6")
        reset_config()
        config2 = get_config()

        assert config1 is not config2
        assert config1.max_len == 5
        assert config2.max_len == 6


class TestProverOptionsFromSettings:
    def test_settings_flow_into_options(self, monkeypatch):
        """Test that settings become prover options."""
        monkeypatch.setenv("PROOFKIT_MAX_LEN", "4")
        monkeypatch.setenv("PROOFKIT_SOLVER", "builtin")

        options = ProverOptions.from_settings(ProofKitSettings(_env_file=None))

        assert options.max_len == 4
        assert options.solver == SolverChoice.BUILTIN

    def test_overrides_win_over_settings(self, monkeypatch):
        """Test that explicit values take precedence and None is ignored."""
        monkeypatch.setenv("PROOFKIT_MAX_LEN", "4")

        options = ProverOptions.from_settings(
            ProofKitSettings(_env_file=None), max_len=9, time_limit=None
        )

        assert options.max_len == 9
        assert options.time_limit == 100.0

    def test_invalid_solver_rejected(self, monkeypatch):
        """Test that an unknown backend name fails validation."""
        monkeypatch.setenv("PROOFKIT_SOLVER", "minisat-ish")

        with pytest.raises(ValueError):
            ProverOptions.from_settings(ProofKitSettings(_env_file=None))

    def test_malformed_setting_raises_config_error(self, monkeypatch):
        """Test that unparsable environment values surface as ConfigError."""
        monkeypatch.setenv("PROOFKIT_MAX_LEN", "eight")
        reset_config()

        with pytest.raises(ConfigError, match="PROOFKIT_"):
            get_config()
        reset_config()
