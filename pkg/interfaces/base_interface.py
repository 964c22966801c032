"""
Base Interface Module

Defines the abstract interface for all front ends.
New front ends can be added by extending this base class.
"""

from abc import ABC, abstractmethod
from typing import Sequence


class BaseInterface(ABC):
    """
    Abstract base class for all user interfaces.

    A front end receives arguments, reports a one-line outcome and returns
    an exit status.
    """

    @abstractmethod
    def display_output(self, message: str) -> None:
        """Show a normal result message."""
        pass

    @abstractmethod
    def display_error(self, message: str) -> None:
        """Show an error message."""
        pass

    @abstractmethod
    def run(self, argv: Sequence[str]) -> int:
        """
        Handle one invocation.

        Args:
            argv: Arguments without the program name

        Returns:
            Process exit status
        """
        pass
