#!/usr/bin/env python3
"""
Configuration Management for pancake-coloring
Reads PANCAKE_* environment variables (optionally from .env) and validates them
"""

import os
import sys
import logging
from typing import Dict, List, Optional
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

from core.errors import ConfigurationError

logger = logging.getLogger(__name__)

DEFAULT_TIMEOUT_SECONDS = 600.0
DEFAULT_MAX_NODES = 50_000_000


@dataclass
class ConfigLimits:
    """Admissible ranges for configuration values."""
    max_threads: int = 512
    max_timeout_seconds: float = 7 * 24 * 3600.0
    valid_log_levels: List[str] = None

    def __post_init__(self):
        if self.valid_log_levels is None:
            self.valid_log_levels = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']


@dataclass
class PancakeSettings:
    """Validated runtime settings; CLI flags override these."""
    threads: int
    timeout: float
    max_nodes: int
    seed: int
    log_level: str
    log_file: Optional[str] = None
    report_file: Optional[str] = None


class ConfigValidator:
    """Validates PANCAKE_* environment configuration."""

    def __init__(self, limits: ConfigLimits = None, environ: Optional[Dict[str, str]] = None):
        self.limits = limits or ConfigLimits()
        self.environ = environ if environ is not None else os.environ
        self.validation_errors: List[str] = []
        self.warnings: List[str] = []

    def _get(self, name: str, default: str = '') -> str:
        return self.environ.get(name, default).strip()

    def validate_threads(self) -> bool:
        raw = self._get('PANCAKE_THREADS')
        if not raw:
            return True
        try:
            threads = int(raw)
        except ValueError:
            self.validation_errors.append(f"PANCAKE_THREADS ({raw!r}) must be an integer")
            return False
        if threads < 1 or threads > self.limits.max_threads:
            self.validation_errors.append(
                f"PANCAKE_THREADS ({threads}) must be between 1 and {self.limits.max_threads}"
            )
            return False
        cpus = os.cpu_count() or 1
        if threads > cpus:
            self.warnings.append(f"PANCAKE_THREADS ({threads}) exceeds available CPUs ({cpus})")
        return True

    def validate_budget(self) -> bool:
        try:
            timeout = float(self._get('PANCAKE_TIMEOUT', str(DEFAULT_TIMEOUT_SECONDS)))
            if timeout <= 0 or timeout > self.limits.max_timeout_seconds:
                self.validation_errors.append(
                    f"PANCAKE_TIMEOUT ({timeout}) must be in (0, {self.limits.max_timeout_seconds}]"
                )
                return False

            max_nodes = int(self._get('PANCAKE_MAX_NODES', str(DEFAULT_MAX_NODES)))
            if max_nodes < 1:
                self.validation_errors.append(f"PANCAKE_MAX_NODES ({max_nodes}) must be positive")
                return False

            seed = int(self._get('PANCAKE_SEED', '0'))
            if seed < 0:
                self.validation_errors.append(f"PANCAKE_SEED ({seed}) must be non-negative")
                return False

            return True

        except ValueError as e:
            self.validation_errors.append(f"Invalid numeric parameter: {e}")
            return False

    def validate_logging(self) -> bool:
        level = self._get('PANCAKE_LOG_LEVEL', 'WARNING').upper()
        if level not in self.limits.valid_log_levels:
            self.validation_errors.append(
                f"PANCAKE_LOG_LEVEL ({level}) must be one of: {', '.join(self.limits.valid_log_levels)}"
            )
            return False

        log_file = self._get('PANCAKE_LOG_FILE')
        if log_file and not Path(log_file).parent.exists():
            self.warnings.append(f"Directory for PANCAKE_LOG_FILE ({log_file}) does not exist yet")
        return True

    def validate_report_file(self) -> bool:
        report_file = self._get('PANCAKE_REPORT_FILE')
        if report_file and Path(report_file).is_dir():
            self.validation_errors.append(f"PANCAKE_REPORT_FILE ({report_file}) is a directory")
            return False
        return True

    def validate_all(self) -> bool:
        """Run every validation and log the outcome."""
        self.validation_errors.clear()
        self.warnings.clear()

        validations = [
            self.validate_threads(),
            self.validate_budget(),
            self.validate_logging(),
            self.validate_report_file(),
        ]
        all_valid = all(validations)

        if self.validation_errors:
            logger.error("❌ Configuration validation failed:")
            for error in self.validation_errors:
                logger.error(f"  • {error}")

        if self.warnings:
            logger.warning("⚠️ Configuration warnings:")
            for warning in self.warnings:
                logger.warning(f"  • {warning}")

        if all_valid:
            logger.debug("✅ Configuration validation passed")

        return all_valid and not self.validation_errors

    def settings(self) -> PancakeSettings:
        """
        Validated settings.

        Raises:
            ConfigurationError: listing every validation error
        """
        if not self.validate_all():
            raise ConfigurationError("; ".join(self.validation_errors))
        threads = self._get('PANCAKE_THREADS')
        return PancakeSettings(
            threads=int(threads) if threads else (os.cpu_count() or 1),
            timeout=float(self._get('PANCAKE_TIMEOUT', str(DEFAULT_TIMEOUT_SECONDS))),
            max_nodes=int(self._get('PANCAKE_MAX_NODES', str(DEFAULT_MAX_NODES))),
            seed=int(self._get('PANCAKE_SEED', '0')),
            log_level=self._get('PANCAKE_LOG_LEVEL', 'WARNING').upper(),
            log_file=self._get('PANCAKE_LOG_FILE') or None,
            report_file=self._get('PANCAKE_REPORT_FILE') or None,
        )


def load_settings(env_file: Optional[str] = None, environ: Optional[Dict[str, str]] = None) -> PancakeSettings:
    """Load .env (if present) into the environment and return validated settings."""
    if environ is None:
        if env_file:
            load_dotenv(env_file)
        else:
            load_dotenv()
    return ConfigValidator(environ=environ).settings()


def resolve_threads(flag: Optional[int], settings: PancakeSettings) -> int:
    """--threads wins over PANCAKE_THREADS, which wins over the CPU count."""
    if flag is not None:
        if flag < 1:
            raise ConfigurationError(f"--threads ({flag}) must be at least 1")
        return flag
    return settings.threads


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
    load_dotenv(Path(__file__).parent.parent / ".env")

    if ConfigValidator().validate_all():
        print("✅ Configuration validation passed")
        sys.exit(0)
    else:
        print("❌ Configuration validation failed")
        sys.exit(1)
