"""
Quantum States Package

Validated density matrices, the state families compared by the correlation
measures, seeded random ensembles, and local channels.
"""

from .density_matrix import DensityMatrix, STATE_ATOL
from .constructors import (
    PAULI_AXES,
    ClassicalProbs,
    WernerParam,
    bell_state,
    classical_state,
    marginal_product,
    pauli,
    product_state,
    pure_state,
    singlet,
    werner,
)
from .random_states import random_density, random_local_unitary, random_product_state, random_unitary
from .channels import (
    BaseLocalChannel,
    CHANNELS,
    DephasingChannel,
    DepolarizingChannel,
    apply_local_channels,
    local_channel,
    make_channel,
)
from .exceptions import InvalidProbabilitiesError, InvalidStateError, OutOfRangeError

__all__ = [
    'DensityMatrix',
    'STATE_ATOL',
    'PAULI_AXES',
    'ClassicalProbs',
    'WernerParam',
    'bell_state',
    'classical_state',
    'marginal_product',
    'pauli',
    'product_state',
    'pure_state',
    'singlet',
    'werner',
    'random_density',
    'random_local_unitary',
    'random_product_state',
    'random_unitary',
    'BaseLocalChannel',
    'CHANNELS',
    'DephasingChannel',
    'DepolarizingChannel',
    'apply_local_channels',
    'local_channel',
    'make_channel',
    'InvalidProbabilitiesError',
    'InvalidStateError',
    'OutOfRangeError',
]
