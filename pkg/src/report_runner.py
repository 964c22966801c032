"""
Report Runner Module

Single Responsibility: Turn a validated RunConfig into a result table.
It coordinates the analysis library and never formats or writes output.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from analysis import (
    CLASSICAL_COLUMNS,
    WERNER_COLUMNS,
    axiom_audit,
    build_state_pool,
    counterexample_verify,
    find_ordering_violations,
    scan_classical,
    scan_family,
    scan_werner,
)
from measures import bounds_check
from .run_config import RunConfig

logger = logging.getLogger(__name__)

COUNTEREXAMPLE_COLUMNS = ("a", "b", "p_star", "c1_0", "c1_pstar", "c2_0", "c2_pstar", "gap", "verdict")
BOUNDS_COLUMNS = ("label", "c1", "c2", "lower", "upper_loose", "upper_tight")
AXIOM_COLUMNS = ("axiom", "measure", "trials", "passed", "worst_margin")
VIOLATION_COLUMNS = ("state_a", "state_b", "measure_x", "measure_y", "x_a", "x_b", "y_a", "y_b")


@dataclass
class ReportTable:
    """
    Rows produced by one command.

    verified is False when the command checks a scientific claim that did
    not hold (counterexample verdict, axiom audit, bounds). summary holds
    the extra key=value pairs for the summary line; report is an optional
    object carried in the JSON envelope.
    """

    columns: Sequence[str]
    rows: List[Dict[str, object]]
    verified: bool = True
    summary: Dict[str, bool] = field(default_factory=dict)
    report: Optional[Dict[str, object]] = None


class ReportRunner:
    """
    Dispatches each command to the analysis function that implements it.

    New commands are added by registering a handler in self.handlers.
    """

    def __init__(self):
        self.handlers: Dict[str, Callable[[RunConfig], ReportTable]] = {
            "scan-classical": self._scan_classical,
            "scan-werner": self._scan_werner,
            "scan-family": self._scan_family,
            "counterexample": self._counterexample,
            "bounds": self._bounds,
            "axioms": self._axioms,
            "violations": self._violations,
        }

    def run(self, config: RunConfig) -> ReportTable:
        """
        Execute one command.

        Args:
            config: A configuration already validated by ConfigProcessor

        Returns:
            The ReportTable for the artifact
        """
        logger.info("Running %s with %s", config.command, config.parameters())
        table = self.handlers[config.command](config)
        logger.info("%s finished: %d rows, verified=%s", config.command, len(table.rows), table.verified)
        return table

    def _scan_classical(self, config: RunConfig) -> ReportTable:
        name, value = config.fix
        rows = scan_classical(name, value, config.grid_n)
        return ReportTable(CLASSICAL_COLUMNS, [row.as_record() for row in rows])

    def _scan_werner(self, config: RunConfig) -> ReportTable:
        return ReportTable(WERNER_COLUMNS, [row.as_record() for row in scan_werner(config.grid_n)])

    def _scan_family(self, config: RunConfig) -> ReportTable:
        return ReportTable(CLASSICAL_COLUMNS, [row.as_record() for row in scan_family(config.grid_n)])

    def _counterexample(self, config: RunConfig) -> ReportTable:
        report = counterexample_verify(config.tol)
        return ReportTable(
            COUNTEREXAMPLE_COLUMNS,
            [report.as_record()],
            verified=report.passed,
            summary={"verdict": report.verdict},
            report=report.as_dict(),
        )

    def _bounds(self, config: RunConfig) -> ReportTable:
        rows = []
        holds = True
        for sample in build_state_pool(config.pool_size, config.seed):
            check = bounds_check(sample.state)
            holds = holds and check.holds
            rows.append({
                "label": sample.label,
                "c1": check.c1,
                "c2": check.c2,
                "lower": check.lower,
                "upper_loose": check.upper_loose,
                "upper_tight": check.upper_tight,
            })
        return ReportTable(BOUNDS_COLUMNS, rows, verified=holds, summary={"passed": holds})

    def _axioms(self, config: RunConfig) -> ReportTable:
        audit = axiom_audit(config.pool_size, config.seed, trials=config.trials)
        rows = [check.as_record() for check in audit.checks]
        return ReportTable(AXIOM_COLUMNS, rows, verified=audit.all_passed, summary={"passed": audit.all_passed})

    def _violations(self, config: RunConfig) -> ReportTable:
        found = find_ordering_violations(config.pool_size, config.seed, tuple(config.measures))
        return ReportTable(VIOLATION_COLUMNS, [v.as_record() for v in found])
