"""
Argument Parser Module

argparse-based implementation of BaseParser for the `qcorr` command line:

    qcorr <command> [--fix p10=0.1|p11=0.4] [--grid-n N] [--seed S]
          [--pool-size N] [--tol T] [--trials N] [--measures X,Y]
          [--format csv|json] [--out PATH] [--log-level LEVEL]
"""

import argparse
from typing import Sequence

from src.run_config import (
    COMMANDS,
    DEFAULT_GRID_N,
    DEFAULT_POOL_SIZE,
    DEFAULT_SEED,
    DEFAULT_TOL,
    DEFAULT_TRIALS,
    FORMATS,
    ConfigError,
    RunConfig,
)
from .base_parser import BaseParser


class _RaisingArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises ConfigError instead of exiting with status 2."""

    def error(self, message):
        raise ConfigError(message)


class CommandLineParser(BaseParser):
    """
    Parses `qcorr` arguments into a RunConfig.

    Unknown flags are errors. Range checks are left to ConfigProcessor so
    that configurations built in code go through the same validation.
    """

    def __init__(self, prog: str = "qcorr"):
        self.parser = self._build(prog)

    def _build(self, prog: str) -> argparse.ArgumentParser:
        parser = _RaisingArgumentParser(
            prog=prog,
            allow_abbrev=False,
            description="Correlation measures for two-qubit states: scans, counterexample, bounds and axiom audits.",
        )
        parser.add_argument("command", choices=COMMANDS)
        parser.add_argument("--fix", help="fixed probability for scan-classical, p10=VALUE or p11=VALUE")
        parser.add_argument("--grid-n", type=int, default=DEFAULT_GRID_N, help="grid subdivisions (>= 2)")
        parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for random state pools")
        parser.add_argument("--pool-size", type=int, default=DEFAULT_POOL_SIZE, help="random states in the pool")
        parser.add_argument("--tol", type=float, default=DEFAULT_TOL, help="bisection tolerance, in (0, 1e-6]")
        parser.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="trials per axiom check")
        parser.add_argument("--measures", default="c1,c2", help="two measures for violations, e.g. c1,c2")
        parser.add_argument("--format", choices=FORMATS, default="csv")
        parser.add_argument("--out", help="output path (default qcorr-<command>.<format>)")
        parser.add_argument("--log-level", default="WARNING")
        return parser

    def parse(self, argv: Sequence[str]) -> RunConfig:
        """
        Example:
            >>> CommandLineParser().parse(["scan-classical", "--fix", "p10=0.1"]).fix
            ('p10', 0.1)
        """
        args = self.parser.parse_args(list(argv))
        fix = self._parse_fix(args.fix) if args.fix is not None else None
        measures = tuple(part.strip() for part in args.measures.split(",") if part.strip())
        return RunConfig(
            command=args.command,
            fix=fix,
            grid_n=args.grid_n,
            seed=args.seed,
            pool_size=args.pool_size,
            tol=args.tol,
            trials=args.trials,
            measures=measures,
            output_path=args.out,
            format=args.format,
            log_level=args.log_level.upper(),
        )
