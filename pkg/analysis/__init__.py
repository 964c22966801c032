"""
Ordering Analysis Package

Parameter scans, the C_I/C_II ordering counterexample, pairwise ordering
violations, PPT entanglement detection and the axiom audit.
"""

from .entanglement import PPT_ATOL, is_entangled, ppt_min_eigenvalue
from .scans import (
    CLASSICAL_COLUMNS,
    FIXABLE,
    WERNER_COLUMNS,
    GradientAgreement,
    ScanRow,
    classical_grid_probs,
    gradient_sign_agreement,
    scan_classical,
    scan_family,
    scan_werner,
)
from .counterexample import (
    A_CROSSING,
    GAP_EXPECTED,
    GAP_RATIO,
    BisectionFailureError,
    CounterexampleReport,
    bisect,
    counterexample_verify,
    exact_gap_ratio,
    monotonic_on,
)
from .violations import (
    VIOLATION_MARGIN,
    OrderingViolation,
    StateSample,
    build_state_pool,
    find_ordering_violations,
    violations_among,
)
from .axioms import AXIOMS, AxiomAudit, AxiomCheck, axiom_audit

__all__ = [
    'PPT_ATOL',
    'is_entangled',
    'ppt_min_eigenvalue',
    'CLASSICAL_COLUMNS',
    'FIXABLE',
    'WERNER_COLUMNS',
    'GradientAgreement',
    'ScanRow',
    'classical_grid_probs',
    'gradient_sign_agreement',
    'scan_classical',
    'scan_family',
    'scan_werner',
    'A_CROSSING',
    'GAP_EXPECTED',
    'GAP_RATIO',
    'BisectionFailureError',
    'CounterexampleReport',
    'bisect',
    'counterexample_verify',
    'exact_gap_ratio',
    'monotonic_on',
    'VIOLATION_MARGIN',
    'OrderingViolation',
    'StateSample',
    'build_state_pool',
    'find_ordering_violations',
    'violations_among',
    'AXIOMS',
    'AxiomAudit',
    'AxiomCheck',
    'axiom_audit',
]
