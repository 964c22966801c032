"""
Config Processor Module

Single Responsibility: Validate a RunConfig before any computation starts.
This module only checks and completes configuration; it never computes.
"""

import dataclasses
import logging
import math

from analysis import FIXABLE
from measures import MEASURE_KEYS
from .run_config import COMMANDS, FORMATS, ConfigError, RunConfig

logger = logging.getLogger(__name__)

MAX_TOL = 1e-6
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class ConfigProcessor:
    """
    Validates run configurations.

    Responsibilities:
    - Reject unknown commands, formats and log levels
    - Check command-specific required parameters and numeric ranges
    - Fill in the default output path

    Does NOT:
    - Parse command-line text (that's the parser's job)
    - Run scans or audits (that's the runner's job)
    """

    def process(self, config: RunConfig) -> RunConfig:
        """
        Validate a configuration and return it with defaults filled in.

        Raises:
            ConfigError: Naming the first offending value

        Example:
            >>> ConfigProcessor().process(RunConfig("scan-werner", grid_n=1))
            Traceback (most recent call last):
            ...
            src.run_config.ConfigError: grid_n must be >= 2, got 1
        """
        if config.command not in COMMANDS:
            raise ConfigError(f"Unknown command {config.command!r}; expected one of {', '.join(COMMANDS)}")
        if config.format not in FORMATS:
            raise ConfigError(f"Unknown format {config.format!r}; expected csv or json")
        if config.log_level.upper() not in LOG_LEVELS:
            raise ConfigError(f"Unknown log level {config.log_level!r}")

        self._check_fix(config)
        if config.grid_n < 2:
            raise ConfigError(f"grid_n must be >= 2, got {config.grid_n}")
        if not (math.isfinite(config.tol) and 0.0 < config.tol <= MAX_TOL):
            raise ConfigError(f"tol must be in (0, 1e-6], got {config.tol!r}")
        min_pool = 2 if config.command == "violations" else 1
        if config.pool_size < min_pool:
            raise ConfigError(f"pool_size must be >= {min_pool}, got {config.pool_size}")
        if config.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {config.trials}")
        self._check_measures(config)

        if config.output_path is None:
            config = dataclasses.replace(config, output_path=config.default_output_path())
        logger.debug("Validated configuration %s", config)
        return config

    def _check_fix(self, config: RunConfig) -> None:
        if config.command != "scan-classical":
            return
        if config.fix is None:
            raise ConfigError("scan-classical requires --fix p10=VALUE or --fix p11=VALUE")
        name, value = config.fix
        if name not in FIXABLE:
            raise ConfigError(f"--fix name must be one of {', '.join(FIXABLE)}, got {name!r}")
        if not (math.isfinite(value) and 0.0 <= value <= 1.0):
            raise ConfigError(f"--fix value must be in [0, 1], got {value!r}")

    def _check_measures(self, config: RunConfig) -> None:
        if len(config.measures) != 2:
            raise ConfigError(f"--measures needs exactly two identifiers, got {len(config.measures)}")
        for key in config.measures:
            if key not in MEASURE_KEYS:
                raise ConfigError(f"Unknown measure {key!r}; expected one of {', '.join(MEASURE_KEYS)}")
        if config.measures[0] == config.measures[1]:
            raise ConfigError(f"--measures must name two different measures, got {config.measures[0]!r} twice")
