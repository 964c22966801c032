"""
Tests for state construction and validation.
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from states import (
    ClassicalProbs,
    DensityMatrix,
    DephasingChannel,
    DepolarizingChannel,
    InvalidProbabilitiesError,
    InvalidStateError,
    OutOfRangeError,
    WernerParam,
    apply_local_channels,
    bell_state,
    classical_state,
    local_channel,
    make_channel,
    marginal_product,
    pauli,
    product_state,
    pure_state,
    random_density,
    random_local_unitary,
    random_product_state,
    random_unitary,
    singlet,
    werner,
)

probability_vectors = st.lists(
    st.floats(min_value=0.0, max_value=1.0, allow_nan=False), min_size=4, max_size=4
).filter(lambda v: sum(v) > 1e-3).map(lambda v: [x / sum(v) for x in v])


# ============================================================
# DensityMatrix
# ============================================================

def test_valid_state_is_read_only():
    rho = DensityMatrix(np.eye(4) / 4)
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 1.0


@pytest.mark.parametrize("matrix, dims", [
    (np.diag([0.5, 0.6]), (2, 1)),                  # trace
    (np.diag([1.5, -0.5]), (2, 1)),                 # negative eigenvalue
    (np.array([[0.5, 0.1], [0.0, 0.5]]), (2, 1)),   # not Hermitian
    (np.eye(4) / 4, (2, 3)),                        # dims
])
def test_invalid_states_rejected(matrix, dims):
    with pytest.raises(InvalidStateError):
        DensityMatrix(matrix, dims)


def test_marginals_have_subsystem_dims():
    rho = classical_state(ClassicalProbs(0.1, 0.2, 0.3, 0.4))
    assert rho.marginal(1).dims == (2, 1)
    assert np.allclose(rho.marginal(2).matrix, np.diag([0.4, 0.6]), atol=1e-15)


# ============================================================
# Classical states and probabilities
# ============================================================

def test_uniform_classical_state_is_maximally_mixed():
    assert np.allclose(classical_state(ClassicalProbs(0.25, 0.25, 0.25, 0.25)).matrix, np.eye(4) / 4)


def test_counterexample_start_state(counterexample_start):
    assert np.allclose(counterexample_start.matrix, np.diag([0, 0.5, 0.125, 0.375]))


@pytest.mark.parametrize("values", [
    (0.5, 0.5, 0.5, -0.5),
    (0.3, 0.3, 0.3, 0.3),
    (0.25, 0.25, 0.25, 0.25 + 1e-9),
    (float("nan"), 0.5, 0.25, 0.25),
])
def test_invalid_probabilities_rejected(values):
    with pytest.raises(InvalidProbabilitiesError):
        ClassicalProbs(*values)


def test_probabilities_need_four_entries():
    with pytest.raises(InvalidProbabilitiesError):
        ClassicalProbs.from_sequence([0.5, 0.5])


@given(probability_vectors)
@settings(max_examples=100, deadline=None)
def test_classical_state_is_dephasing_fixed_point(values):
    """Property: full dephasing on either qubit leaves a diagonal state unchanged."""
    rho = classical_state(ClassicalProbs.from_sequence(values))
    dephased = local_channel(local_channel(rho, "dephasing", 1.0, 1), "dephasing", 1.0, 2)
    assert np.max(np.abs(dephased.matrix - rho.matrix)) < 1e-12


# ============================================================
# Werner and Bell states
# ============================================================

def test_werner_quarter_is_maximally_mixed():
    assert np.allclose(werner(0.25).matrix, np.eye(4) / 4, atol=1e-15)


def test_werner_one_is_singlet():
    assert np.allclose(werner(WernerParam(1.0)).matrix, singlet().matrix, atol=1e-15)


def test_werner_half_spectrum():
    assert np.allclose(werner(0.5).eigenvalues(), [1 / 6, 1 / 6, 1 / 6, 1 / 2], atol=1e-12)


@pytest.mark.parametrize("f", [-0.1, 1.1, float("nan")])
def test_werner_out_of_range(f):
    with pytest.raises(OutOfRangeError):
        werner(f)


@given(st.floats(min_value=0.0, max_value=1.0), st.integers(min_value=0, max_value=10_000))
@settings(max_examples=50, deadline=None)
def test_werner_is_invariant_under_twirl(f, seed):
    """Property: (U⊗U) ρ_W (U⊗U)† = ρ_W."""
    u = random_unitary(2, np.random.default_rng(seed))
    rho = werner(f)
    assert np.max(np.abs(rho.conjugate(np.kron(u, u)).matrix - rho.matrix)) < 1e-9


def test_singlet_is_psi_minus():
    ket = np.array([0, 1, -1, 0]) / np.sqrt(2)
    assert np.allclose(singlet().matrix, np.outer(ket, ket), atol=1e-15)


@pytest.mark.parametrize("name", ["phi+", "phi-", "psi+", "psi-"])
def test_bell_states_are_pure_with_mixed_marginals(name):
    rho = bell_state(name)
    assert np.allclose(rho.matrix @ rho.matrix, rho.matrix, atol=1e-14)
    assert np.allclose(rho.marginal(1).matrix, np.eye(2) / 2, atol=1e-15)


def test_unknown_bell_state():
    with pytest.raises(OutOfRangeError):
        bell_state("omega")


def test_pure_state_normalizes_the_ket():
    rho = pure_state([3, 4j], dims=(2, 1))
    assert rho.dims == (2, 1)
    assert np.allclose(rho.matrix, np.array([[9, -12j], [12j, 16]]) / 25, atol=1e-15)
    assert np.trace(rho.matrix).real == pytest.approx(1.0, abs=1e-15)


# ============================================================
# Pauli operators
# ============================================================

def test_pauli_matrices():
    assert np.array_equal(pauli("z"), np.diag([1, -1]))
    assert np.array_equal(pauli("x"), np.array([[0, 1], [1, 0]]))
    assert np.array_equal(pauli("y"), np.array([[0, -1j], [1j, 0]]))
    assert np.array_equal(pauli("i"), np.eye(2))


def test_unknown_pauli_axis():
    with pytest.raises(OutOfRangeError):
        pauli("w")


# ============================================================
# Marginal product
# ============================================================

def test_marginal_product_of_product_state_is_unchanged():
    rho = product_state(random_density(2, 1), random_density(2, 2))
    assert np.max(np.abs(marginal_product(rho).matrix - rho.matrix)) < 1e-12


def test_marginal_product_of_classical_state():
    p = ClassicalProbs(0.1, 0.2, 0.3, 0.4)
    expected = np.kron(np.diag([0.3, 0.7]), np.diag([0.4, 0.6]))
    assert np.allclose(marginal_product(classical_state(p)).matrix, expected, atol=1e-15)


def test_marginal_product_of_singlet_is_maximally_mixed():
    assert np.allclose(marginal_product(werner(1.0)).matrix, np.eye(4) / 4, atol=1e-15)


@given(st.integers(min_value=0, max_value=100_000))
@settings(max_examples=50, deadline=None)
def test_marginal_product_is_idempotent(seed):
    once = marginal_product(random_density(4, seed))
    twice = marginal_product(once)
    assert np.max(np.abs(twice.matrix - once.matrix)) < 1e-12


# ============================================================
# Random ensembles
# ============================================================

@given(st.integers(min_value=0, max_value=2**31 - 1), st.sampled_from([2, 4]))
@settings(max_examples=50, deadline=None)
def test_random_density_is_valid(seed, dim):
    rho = random_density(dim, seed)
    assert abs(np.trace(rho.matrix) - 1.0) < 1e-12
    assert rho.eigenvalues()[0] >= -1e-10


def test_random_density_is_deterministic():
    assert np.array_equal(random_density(4, 42).matrix, random_density(4, 42).matrix)


def test_random_density_rejects_other_dims():
    with pytest.raises(OutOfRangeError):
        random_density(3, 0)


@given(st.integers(min_value=0, max_value=2**31 - 1))
@settings(max_examples=50, deadline=None)
def test_random_local_unitaries_are_unitary(seed):
    for u in random_local_unitary(seed):
        assert np.max(np.abs(u.conj().T @ u - np.eye(2))) < 1e-10


def test_local_unitary_conjugation_keeps_state_valid():
    u, v = random_local_unitary(5)
    rotated = random_density(4, 5).conjugate(np.kron(u, v))
    rotated.check()


def test_random_product_state_has_no_correlations():
    rho = random_product_state(3)
    assert np.max(np.abs(marginal_product(rho).matrix - rho.matrix)) < 1e-12


# ============================================================
# Local channels
# ============================================================

@pytest.mark.parametrize("kind", ["depolarizing", "dephasing"])
def test_zero_strength_is_identity(kind):
    rho = random_density(4, 9)
    assert np.max(np.abs(local_channel(rho, kind, 0.0, 1).matrix - rho.matrix)) < 1e-12


def test_full_depolarizing_erases_marginal():
    out = local_channel(random_density(4, 10), "depolarizing", 1.0, 1)
    assert np.max(np.abs(out.marginal(1).matrix - np.eye(2) / 2)) < 1e-10


def test_kraus_operators_are_complete():
    for channel in (DepolarizingChannel(0.3), DephasingChannel(0.7)):
        total = sum(k.conj().T @ k for k in channel.kraus_operators())
        assert np.allclose(total, np.eye(2), atol=1e-14)


def test_channel_validation():
    with pytest.raises(OutOfRangeError):
        make_channel("amplitude-damping", 0.5)
    with pytest.raises(OutOfRangeError):
        DepolarizingChannel(1.5)
    with pytest.raises(OutOfRangeError):
        local_channel(random_density(4, 0), "dephasing", 0.5, 3)


def test_product_channel_output_is_valid():
    out = apply_local_channels(random_density(4, 12), DepolarizingChannel(0.4), DephasingChannel(0.9))
    out.check()
    assert abs(np.trace(out.matrix) - 1.0) < 1e-12
