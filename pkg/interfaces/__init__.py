"""
Interfaces Package

Front ends for the correlation-measure library. Different front ends can
be added without modifying existing code.
"""

from .base_interface import BaseInterface
from .terminal_interface import CommandLineInterface, EXIT_CONFIG, EXIT_IO, EXIT_NUMERICAL, EXIT_OK, EXIT_VERIFICATION

__all__ = ['BaseInterface', 'CommandLineInterface', 'EXIT_CONFIG', 'EXIT_IO', 'EXIT_NUMERICAL', 'EXIT_OK', 'EXIT_VERIFICATION']
