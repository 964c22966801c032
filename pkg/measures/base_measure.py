"""
Base Measure Module

Defines the abstract interface for all correlation measures (Open/Closed Principle).
A correlation measure compares a bipartite state with the product of its
marginals; subclasses only choose the distance.
"""

from abc import ABC, abstractmethod

from states import DensityMatrix, marginal_product


class BaseCorrelationMeasure(ABC):
    """
    Abstract base class for correlation measures C(ρ) = distance(ρ, ρ1 ⊗ ρ2).

    Any subclass must satisfy the four correlation-measure requirements:
    semi-positivity, zero exactly on product states, invariance under local
    unitaries, and no increase under local operations. The axiom audit in
    `analysis.axioms` checks these numerically for every registered measure.

    Attributes:
        key: Short identifier used in reports and on the command line
        label: Human-readable name
    """

    key = "base"
    label = "base measure"

    def evaluate(self, rho: DensityMatrix) -> float:
        """
        Evaluate the measure on a state.

        Args:
            rho: Bipartite state

        Returns:
            distance(ρ, marginal_product(ρ))
        """
        return self.distance(rho, marginal_product(rho))

    def __call__(self, rho: DensityMatrix) -> float:
        return self.evaluate(rho)

    @abstractmethod
    def distance(self, rho: DensityMatrix, reference: DensityMatrix) -> float:
        """
        Distance-like function between the state and its reference product state.

        This method must be implemented by all subclasses.
        """
        pass

    def __repr__(self) -> str:
        return f"{type(self).__name__}(key={self.key!r})"
