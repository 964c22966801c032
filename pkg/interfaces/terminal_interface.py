"""
Terminal Interface Module

Concrete implementation of BaseInterface for the `qcorr` command line.
It wires parser, validator, runner, formatter and writer together and maps
each failure class to its exit status:

    0  success
    2  invalid arguments or configuration
    3  I/O failure while writing the artifact
    4  verification failure (counterexample, axiom audit, bounds)
    5  numerical failure inside the library (no convergence, invalid state)
"""

import logging
import sys
from typing import Sequence

from analysis import BisectionFailureError
from linalg import QuantumCorrelationError
from parsers.base_parser import BaseParser
from src.artifact_writer import ArtifactWriter
from src.config_processor import ConfigProcessor
from src.formatters import ArtifactFormatter
from src.report_runner import ReportRunner
from src.run_config import ConfigError
from .base_interface import BaseInterface

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_VERIFICATION = 4
EXIT_NUMERICAL = 5


class CommandLineInterface(BaseInterface):
    """
    Single-shot command-line front end.

    The summary line goes to standard output; errors and log records go
    to standard error.
    """

    def __init__(
        self,
        parser: BaseParser,
        processor: ConfigProcessor,
        runner: ReportRunner,
        formatter: ArtifactFormatter,
        writer: ArtifactWriter,
        configure_logging: bool = True,
    ):
        """
        Args:
            parser: Turns argv into a RunConfig (abstraction)
            processor: Validates the RunConfig
            runner: Executes the command
            formatter: Renders CSV/JSON and the summary line
            writer: Writes the artifact atomically
            configure_logging: Install a stderr handler at the requested level
        """
        self.parser = parser
        self.processor = processor
        self.runner = runner
        self.formatter = formatter
        self.writer = writer
        self.configure_logging = configure_logging

    def display_output(self, message: str) -> None:
        print(message)

    def display_error(self, message: str) -> None:
        print(message, file=sys.stderr)

    def run(self, argv: Sequence[str]) -> int:
        try:
            config = self.processor.process(self.parser.parse(argv))
        except ConfigError as e:
            self.display_error(self.formatter.format_error(str(e)))
            return EXIT_CONFIG

        if self.configure_logging:
            logging.basicConfig(
                level=config.log_level,
                stream=sys.stderr,
                format="%(asctime)s %(levelname)s %(name)s: %(message)s",
            )

        try:
            table = self.runner.run(config)
        except BisectionFailureError as e:
            logger.error("%s could not be verified: %s", config.command, e)
            self.display_error(self.formatter.format_error(str(e)))
            return EXIT_VERIFICATION
        except QuantumCorrelationError as e:
            logger.error("%s failed: %s", config.command, e)
            self.display_error(self.formatter.format_error(str(e)))
            return EXIT_NUMERICAL

        try:
            self.writer.write(config.output_path, self.formatter.format(config, table))
        except OSError as e:
            self.display_error(self.formatter.format_error(f"cannot write {config.output_path}: {e}"))
            return EXIT_IO

        self.display_output(self.formatter.format_summary(config, table))
        return EXIT_OK if table.verified else EXIT_VERIFICATION
