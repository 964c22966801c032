"""
Parsers Package

Command-line parsers producing RunConfig values. New parsers can be added
without modifying existing code.
"""

from .base_parser import BaseParser
from .argument_parser import CommandLineParser

__all__ = ['BaseParser', 'CommandLineParser']
