#!/usr/bin/env python3
"""
qcorr Command-Line Launcher

Builds the command-line interface and runs one command.

Usage:
    python qcorr.py counterexample --format json
    python qcorr.py scan-classical --fix p10=0.1 --grid-n 50
"""

import sys

from interfaces.terminal_interface import CommandLineInterface
from parsers.argument_parser import CommandLineParser
from src.artifact_writer import ArtifactWriter
from src.config_processor import ConfigProcessor
from src.formatters import ArtifactFormatter
from src.report_runner import ReportRunner


def create_interface(configure_logging: bool = True) -> CommandLineInterface:
    """
    Create the interface with all of its dependencies injected.

    Returns:
        Configured CommandLineInterface instance
    """
    return CommandLineInterface(
        parser=CommandLineParser(),
        processor=ConfigProcessor(),
        runner=ReportRunner(),
        formatter=ArtifactFormatter(),
        writer=ArtifactWriter(),
        configure_logging=configure_logging,
    )


def main(argv=None) -> int:
    return create_interface().run(sys.argv[1:] if argv is None else argv)


if __name__ == '__main__':
    sys.exit(main())
