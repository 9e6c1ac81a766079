#!/usr/bin/env python3
"""
Unit tests for PANCAKE_* configuration validation
"""

import pytest
import sys
import os

# Add parent directory to path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from core.config import (
    DEFAULT_MAX_NODES,
    DEFAULT_TIMEOUT_SECONDS,
    ConfigValidator,
    load_settings,
    resolve_threads,
)
from core.errors import ConfigurationError
from solver.instance import SearchBudget


def test_defaults():
    """An empty environment gives the documented defaults."""
    settings = load_settings(environ={})
    assert settings.timeout == DEFAULT_TIMEOUT_SECONDS
    assert settings.max_nodes == DEFAULT_MAX_NODES
    assert settings.seed == 0
    assert settings.log_level == 'WARNING'
    assert settings.threads >= 1
    assert settings.report_file is None


def test_environment_values():
    environ = {
        'PANCAKE_THREADS': '2',
        'PANCAKE_TIMEOUT': '30',
        'PANCAKE_MAX_NODES': '1000',
        'PANCAKE_SEED': '7',
        'PANCAKE_LOG_LEVEL': 'debug',
        'PANCAKE_REPORT_FILE': 'out/report.json',
    }
    settings = load_settings(environ=environ)
    assert settings.threads == 2
    assert settings.timeout == 30.0
    assert settings.max_nodes == 1000
    assert settings.seed == 7
    assert settings.log_level == 'DEBUG'
    assert settings.report_file == 'out/report.json'

    budget = SearchBudget.from_settings(settings)
    assert (budget.max_seconds, budget.max_nodes, budget.seed) == (30.0, 1000, 7)

    flagged = SearchBudget.from_settings(settings, timeout=5.0, seed=0)
    assert (flagged.max_seconds, flagged.max_nodes, flagged.seed) == (5.0, 1000, 0), "flags win over PANCAKE_*"


def test_env_file_is_loaded(tmp_path, monkeypatch):
    """A dotenv file feeds the process environment."""
    monkeypatch.delenv('PANCAKE_SEED', raising=False)
    env_file = tmp_path / '.env'
    env_file.write_text('PANCAKE_SEED=42\n')
    settings = load_settings(env_file=str(env_file))
    assert settings.seed == 42
    monkeypatch.delenv('PANCAKE_SEED', raising=False)


def test_threads_flag_wins():
    settings = load_settings(environ={'PANCAKE_THREADS': '3'})
    assert resolve_threads(None, settings) == 3
    assert resolve_threads(1, settings) == 1
    with pytest.raises(ConfigurationError):
        resolve_threads(0, settings)


class TestConfigErrors:
    """Every invalid value is collected before raising."""

    def test_invalid_threads(self):
        with pytest.raises(ConfigurationError):
            load_settings(environ={'PANCAKE_THREADS': '0'})

    def test_non_numeric_timeout(self):
        with pytest.raises(ConfigurationError):
            load_settings(environ={'PANCAKE_TIMEOUT': 'soon'})

    def test_negative_seed(self):
        with pytest.raises(ConfigurationError):
            load_settings(environ={'PANCAKE_SEED': '-1'})

    def test_bad_log_level(self):
        with pytest.raises(ConfigurationError):
            load_settings(environ={'PANCAKE_LOG_LEVEL': 'LOUD'})

    def test_report_file_is_directory(self, tmp_path):
        with pytest.raises(ConfigurationError):
            load_settings(environ={'PANCAKE_REPORT_FILE': str(tmp_path)})

    def test_errors_are_collected(self):
        validator = ConfigValidator(environ={'PANCAKE_THREADS': 'x', 'PANCAKE_LOG_LEVEL': 'LOUD'})
        assert not validator.validate_all()
        assert len(validator.validation_errors) == 2
