"""
qcorr - Core Package

Configuration, command dispatch, formatting and artifact writing for the
command-line front end. Each module has a single responsibility.
"""

from .run_config import COMMANDS, FORMATS, LIBRARY_VERSION, ConfigError, RunConfig
from .config_processor import ConfigProcessor
from .report_runner import ReportRunner, ReportTable
from .formatters import ArtifactFormatter
from .artifact_writer import ArtifactWriter

__all__ = [
    'COMMANDS',
    'FORMATS',
    'LIBRARY_VERSION',
    'ConfigError',
    'RunConfig',
    'ConfigProcessor',
    'ReportRunner',
    'ReportTable',
    'ArtifactFormatter',
    'ArtifactWriter',
]
