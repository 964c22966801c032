"""
Correlation Measures Package

Distances between a state and the product of its marginals, the Pauli
correlation functions, analytic closed forms, and the C_I/C_II bounds.
New measures are added by extending BaseCorrelationMeasure and registering
an instance in MEASURES.
"""

from .base_measure import BaseCorrelationMeasure
from .distances import angle_distance, fidelity, mutual_information, rel_entropy, trace_distance, von_neumann_entropy
from .pauli_correlations import corr_fn, correlation_matrix, expectation, pauli_reconstruction, pauli_residual
from .correlation_measures import (
    MEASURE_KEYS,
    MEASURES,
    AngleDistanceMeasure,
    FidelityMeasure,
    MeasureReport,
    RelativeEntropyMeasure,
    TraceDistanceMeasure,
    c1,
    c2,
    c3,
    c3_prime,
    get_measure,
    measure_report,
    measure_values,
)
from .closed_forms import (
    c1_classical,
    c1_family,
    c1_werner,
    c2_classical,
    c2_family,
    c2_werner,
    exact_c2_classical,
    family_probs,
)
from .bounds import BOUND_SLACK, BoundsReport, bounds_check, bounds_from_values

__all__ = [
    'BaseCorrelationMeasure',
    'angle_distance',
    'fidelity',
    'mutual_information',
    'rel_entropy',
    'trace_distance',
    'von_neumann_entropy',
    'corr_fn',
    'correlation_matrix',
    'expectation',
    'pauli_reconstruction',
    'pauli_residual',
    'MEASURE_KEYS',
    'MEASURES',
    'AngleDistanceMeasure',
    'FidelityMeasure',
    'MeasureReport',
    'RelativeEntropyMeasure',
    'TraceDistanceMeasure',
    'c1',
    'c2',
    'c3',
    'c3_prime',
    'get_measure',
    'measure_report',
    'measure_values',
    'c1_classical',
    'c1_family',
    'c1_werner',
    'c2_classical',
    'c2_family',
    'c2_werner',
    'exact_c2_classical',
    'family_probs',
    'BOUND_SLACK',
    'BoundsReport',
    'bounds_check',
    'bounds_from_values',
]
