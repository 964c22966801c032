"""
Base Parser Module

Defines the abstract interface for all command-line parsers.
New front ends can be added by extending this base class.
"""

from abc import ABC, abstractmethod
from typing import Sequence, Tuple

from src.run_config import ConfigError, RunConfig


class BaseParser(ABC):
    """
    Abstract base class for all parsers.

    Any BaseParser subclass can be handed to the interface in place of
    another; the interface only relies on parse().
    """

    @abstractmethod
    def parse(self, argv: Sequence[str]) -> RunConfig:
        """
        Turn command-line arguments into a RunConfig.

        Args:
            argv: Arguments without the program name

        Returns:
            An unvalidated RunConfig

        Raises:
            ConfigError: For malformed or unknown arguments

        This method must be implemented by all subclasses.
        """
        pass

    def _parse_fix(self, text: str) -> Tuple[str, float]:
        """
        Split a `name=value` assignment.

        Example:
            >>> parser._parse_fix("p10=0.1")
            ('p10', 0.1)
        """
        name, sep, raw = text.partition("=")
        if not sep or not name.strip():
            raise ConfigError(f"--fix expects name=value, got {text!r}")
        try:
            value = float(raw)
        except ValueError:
            raise ConfigError(f"--fix value {raw!r} is not a number") from None
        return name.strip(), value
