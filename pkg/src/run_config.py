"""
Run Configuration Module

Single Responsibility: Describe one command-line run as an immutable value.
Validation lives in ConfigProcessor; this module only holds the data.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from linalg import QuantumCorrelationError

LIBRARY_VERSION = "1.0.0"

COMMANDS = (
    "scan-classical",
    "scan-werner",
    "scan-family",
    "counterexample",
    "bounds",
    "axioms",
    "violations",
)

FORMATS = ("csv", "json")

# Which parameters each command reads; also the "parameters" object of
# the JSON envelope.
COMMAND_PARAMETERS: Dict[str, Tuple[str, ...]] = {
    "scan-classical": ("fix", "grid_n"),
    "scan-werner": ("grid_n",),
    "scan-family": ("grid_n",),
    "counterexample": ("tol",),
    "bounds": ("seed", "pool_size"),
    "axioms": ("seed", "pool_size", "trials"),
    "violations": ("seed", "pool_size", "measures"),
}

DEFAULT_GRID_N = 50
DEFAULT_SEED = 0
DEFAULT_POOL_SIZE = 50
DEFAULT_TOL = 1e-12
DEFAULT_TRIALS = 200
DEFAULT_MEASURES = ("c1", "c2")


class ConfigError(QuantumCorrelationError):
    """Invalid command-line arguments or run configuration."""


@dataclass(frozen=True)
class RunConfig:
    """
    Everything one `qcorr` invocation needs.

    fix is a (name, value) pair such as ("p10", 0.1), only used by
    scan-classical. output_path None means `qcorr-<command>.<format>`.
    """

    command: str
    fix: Optional[Tuple[str, float]] = None
    grid_n: int = DEFAULT_GRID_N
    seed: int = DEFAULT_SEED
    pool_size: int = DEFAULT_POOL_SIZE
    tol: float = DEFAULT_TOL
    trials: int = DEFAULT_TRIALS
    measures: Tuple[str, str] = DEFAULT_MEASURES
    output_path: Optional[str] = None
    format: str = "csv"
    log_level: str = "WARNING"

    def default_output_path(self) -> str:
        return f"qcorr-{self.command}.{self.format}"

    def parameters(self) -> Dict[str, object]:
        """The parameters this command reads, in JSON-friendly form."""
        values = {
            "fix": None if self.fix is None else {self.fix[0]: self.fix[1]},
            "grid_n": self.grid_n,
            "seed": self.seed,
            "pool_size": self.pool_size,
            "tol": self.tol,
            "trials": self.trials,
            "measures": list(self.measures),
        }
        return {name: values[name] for name in COMMAND_PARAMETERS.get(self.command, ())}

    @property
    def seed_or_none(self) -> Optional[int]:
        return self.seed if "seed" in COMMAND_PARAMETERS.get(self.command, ()) else None
