"""
Distances Module

Distance-like functions between two states of equal dimension: trace
distance, quantum relative entropy (natural log), fidelity and the angle
distance built on it. Also the von Neumann entropy.

Every function accepts DensityMatrix instances and tolerates eigenvalues
slightly below zero (down to -1e-10) by clamping them.
"""

import math

import numpy as np

from linalg import eig_hermitian, trace_norm
from linalg.exceptions import DimensionMismatchError
from states import DensityMatrix

# Eigenvalues below this are exact zeros in entropy sums (0·ln 0 := 0).
ZERO_EIGENVALUE = 1e-12

# States closer than this entrywise are treated as identical by `fidelity`.
IDENTICAL_ATOL = 1e-13


def _check_pair(sigma: DensityMatrix, tau: DensityMatrix) -> None:
    if sigma.matrix.shape != tau.matrix.shape:
        raise DimensionMismatchError(
            f"States have different dimensions: {sigma.matrix.shape} vs {tau.matrix.shape}"
        )


def trace_distance(sigma: DensityMatrix, tau: DensityMatrix) -> float:
    """
    D(σ, τ) = ½ Tr|σ − τ|, in [0, 1].

    Raises:
        DimensionMismatchError: If the states differ in dimension
    """
    _check_pair(sigma, tau)
    return 0.5 * trace_norm(sigma.matrix - tau.matrix)


def _entropy_terms(eigenvalues: np.ndarray) -> float:
    kept = eigenvalues[eigenvalues > ZERO_EIGENVALUE]
    return float(np.sum(kept * np.log(kept)))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """S(ρ) = −Tr ρ ln ρ in nats."""
    return max(0.0, -_entropy_terms(eig_hermitian(rho.matrix).eigenvalues))


def mutual_information(rho: DensityMatrix) -> float:
    """S(ρ1) + S(ρ2) − S(ρ), clamped at zero."""
    value = von_neumann_entropy(rho.marginal(1)) + von_neumann_entropy(rho.marginal(2)) - von_neumann_entropy(rho)
    return float(max(0.0, value))


def rel_entropy(sigma: DensityMatrix, tau: DensityMatrix) -> float:
    """
    Quantum relative entropy S(σ||τ) = Tr σ(ln σ − ln τ) in nats.

    Computed spectrally: with σ = Σ λ_i |v_i⟩⟨v_i| and τ = Σ μ_j |w_j⟩⟨w_j|,
    S = Σ λ_i ln λ_i − Σ_j ⟨w_j|σ|w_j⟩ ln μ_j.

    Returns:
        A nonnegative float, or math.inf when the support of σ is not
        contained in the support of τ

    Raises:
        DimensionMismatchError: If the states differ in dimension

    Example:
        >>> rel_entropy(DensityMatrix(np.diag([1, 0]), (2, 1)),
        ...             DensityMatrix(np.diag([0.5, 0.5]), (2, 1)))   # ln 2
    """
    _check_pair(sigma, tau)
    sigma_spectrum = eig_hermitian(sigma.matrix)
    tau_spectrum = eig_hermitian(tau.matrix)

    lam = np.clip(sigma_spectrum.eigenvalues, 0.0, None)
    mu = tau_spectrum.eigenvalues

    overlaps = np.abs(sigma_spectrum.eigenvectors.conj().T @ tau_spectrum.eigenvectors) ** 2
    weights = overlaps.T @ lam

    cross = 0.0
    for weight, eigenvalue in zip(weights, mu):
        if eigenvalue <= ZERO_EIGENVALUE:
            if weight > ZERO_EIGENVALUE:
                return math.inf
            continue
        cross += weight * math.log(eigenvalue)

    return float(max(0.0, _entropy_terms(lam) - cross))


def fidelity(sigma: DensityMatrix, tau: DensityMatrix) -> float:
    """
    Fidelity F(σ, τ) = Tr √(√σ τ √σ), in [0, 1].

    Eigenvalues of √σ τ √σ are clamped at zero before the square root.
    States that agree entrywise within 1e-13 have fidelity exactly 1.

    Raises:
        DimensionMismatchError: If the states differ in dimension
    """
    _check_pair(sigma, tau)
    if float(np.max(np.abs(sigma.matrix - tau.matrix))) <= IDENTICAL_ATOL:
        return 1.0

    spectrum = eig_hermitian(sigma.matrix)
    v = spectrum.eigenvectors
    root_sigma = (v * np.sqrt(np.clip(spectrum.eigenvalues, 0.0, None))) @ v.conj().T

    inner = root_sigma @ tau.matrix @ root_sigma
    inner = 0.5 * (inner + inner.conj().T)
    inner_eigenvalues = eig_hermitian(inner).eigenvalues
    value = float(np.sum(np.sqrt(np.clip(inner_eigenvalues, 0.0, None))))
    return min(1.0, max(0.0, value))


def angle_distance(sigma: DensityMatrix, tau: DensityMatrix) -> float:
    """A(σ, τ) = arccos F(σ, τ), in [0, π/2]."""
    return math.acos(fidelity(sigma, tau))
