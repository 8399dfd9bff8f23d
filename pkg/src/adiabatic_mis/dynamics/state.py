"""Vecteur d'état sur la base des ensembles indépendants."""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from adiabatic_mis.isbasis.basis import IsBasis, mis_indices

NORM_TOLERANCE = 1e-8


@dataclass(frozen=True, eq=False)
class StateVector:
    """Amplitudes complexes a_j, de norme 1.

    Attributes:
        amplitudes: Amplitudes indexées comme la base.
    """

    amplitudes: npt.NDArray[np.complex128]

    def __post_init__(self) -> None:
        """Vérifie la normalisation.

        Raises:
            ValueError: Si |1 − ‖ψ‖| dépasse la tolérance.
        """
        amplitudes = np.array(self.amplitudes, dtype=np.complex128)
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)
        drift = abs(1.0 - self.norm)
        if drift > NORM_TOLERANCE:
            raise ValueError(f"état non normalisé (écart {drift:.3e})")

    def __len__(self) -> int:
        return int(self.amplitudes.shape[0])

    @property
    def norm(self) -> float:
        """Norme euclidienne ‖ψ‖."""
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> npt.NDArray[np.float64]:
        """Probabilités |a_j|²."""
        return np.abs(self.amplitudes) ** 2

    @classmethod
    def basis_state(cls, dimension: int, index: int) -> "StateVector":
        """État de base |E_index⟩."""
        amplitudes = np.zeros(dimension, dtype=np.complex128)
        amplitudes[index] = 1.0
        return cls(amplitudes)


def initial_state(basis: IsBasis) -> StateVector:
    """État initial : tout le poids sur l'ensemble vide (indice 0)."""
    return StateVector.basis_state(len(basis), 0)


def mis_probability(psi: StateVector, basis: IsBasis) -> float:
    """Probabilité totale des ensembles indépendants maximum."""
    return float(psi.probabilities()[mis_indices(basis)].sum())


def size_distribution(
    psi: StateVector, basis: IsBasis
) -> npt.NDArray[np.float64]:
    """Probabilité de mesurer un ensemble de chaque taille k.

    Returns:
        Tableau de longueur α(G)+1 indexé par k.
    """
    return np.bincount(
        basis.sizes,
        weights=psi.probabilities(),
        minlength=basis.max_size + 1,
    )
