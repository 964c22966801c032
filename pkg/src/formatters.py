"""
Artifact Formatter Module

Single Responsibility: Render result tables as CSV or JSON text.
This module only handles formatting, not computation or file writing.
"""

import csv
import io
import json
import math
from typing import Any, Dict

import numpy as np

from .report_runner import ReportTable
from .run_config import LIBRARY_VERSION, RunConfig


class ArtifactFormatter:
    """
    Formats report tables for the artifact files and the summary line.

    Number formatting is locale independent: 17 significant digits with a
    `.` separator, so every double round-trips. CSV uses LF line endings.
    """

    def format(self, config: RunConfig, table: ReportTable) -> str:
        if config.format == "json":
            return self.format_json(config, table)
        return self.format_csv(table)

    def format_csv(self, table: ReportTable) -> str:
        """
        Header row followed by one line per table row.

        Example:
            >>> ArtifactFormatter().format_csv(ReportTable(("F", "c1"), [{"F": 0.25, "c1": 0.0}]))
            'F,c1\\n0.25,0\\n'
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([self.format_cell(row.get(column)) for column in table.columns])
        return buffer.getvalue()

    def format_json(self, config: RunConfig, table: ReportTable) -> str:
        envelope: Dict[str, Any] = {
            "command": config.command,
            "parameters": config.parameters(),
            "version": LIBRARY_VERSION,
            "seed": config.seed_or_none,
            "columns": list(table.columns),
            "rows": [{column: self._json_value(row.get(column)) for column in table.columns} for row in table.rows],
        }
        if table.report is not None:
            envelope["report"] = {key: self._json_value(value) for key, value in table.report.items()}
        return json.dumps(envelope, indent=2, allow_nan=False) + "\n"

    def format_cell(self, value: Any) -> str:
        value = self._native(value)
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, int):
            return str(value)
        if isinstance(value, float):
            return format(value, ".17g")
        return str(value)

    def format_summary(self, config: RunConfig, table: ReportTable) -> str:
        """`<command>: <n> rows -> <path>` plus any verdict/passed flags."""
        line = f"{config.command}: {len(table.rows)} rows -> {config.output_path}"
        for key, flag in table.summary.items():
            line += f" {key}={'true' if flag else 'false'}"
        return line

    def format_error(self, error_message: str) -> str:
        return f"qcorr: error: {error_message}"

    def _native(self, value: Any) -> Any:
        # numpy scalars (np.bool_, np.float64) become plain Python values
        if isinstance(value, np.generic):
            return value.item()
        return value

    def _json_value(self, value: Any) -> Any:
        value = self._native(value)
        # JSON has no NaN/inf
        if isinstance(value, float) and not math.isfinite(value):
            return None
        return value
