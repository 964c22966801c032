"""
Shared pytest fixtures.

Living at the repository root, this file also puts the top-level packages
(linalg, states, measures, analysis, src, parsers, interfaces) on the
import path for the test modules.
"""

import numpy as np
import pytest

from states import ClassicalProbs, classical_state, random_density


@pytest.fixture
def counterexample_start():
    """The p00 = 0 end of the counterexample line, (0, 1/2, 1/8, 3/8)."""
    return classical_state(ClassicalProbs(0.0, 0.5, 0.125, 0.375))


@pytest.fixture(scope="session")
def random_states():
    return [random_density(4, seed) for seed in range(100)]


@pytest.fixture
def random_hermitian():
    rng = np.random.default_rng(7)
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    return 0.5 * (g + g.conj().T)
