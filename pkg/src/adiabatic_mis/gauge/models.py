"""Paramètres de jauge et stockage creux hermitien."""

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
import scipy.sparse as sp


@dataclass(frozen=True)
class GaugeParams:
    """Point de fonctionnement de la matrice de jauge A(θ).

    Attributes:
        theta: Angle polaire θ ∈ [0, π].
        omega_phi: Vitesse dφ/dt (> 0).
        omega_theta: Vitesse dθ/dt (≥ 0).
    """

    theta: float
    omega_phi: float = 1.0
    omega_theta: float = 0.0

    def __post_init__(self) -> None:
        """Valide les bornes des paramètres.

        Raises:
            ValueError: Si un paramètre sort de son domaine.
        """
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(
                f"theta doit être dans [0, π], reçu {self.theta}"
            )
        if self.omega_phi <= 0.0:
            raise ValueError(
                f"omega_phi doit être > 0, reçu {self.omega_phi}"
            )
        if self.omega_theta < 0.0:
            raise ValueError(
                f"omega_theta doit être ≥ 0, reçu {self.omega_theta}"
            )


@dataclass(frozen=True, eq=False)
class SparseHermitian:
    """Matrice hermitienne stockée par sa diagonale et son triangle
    inférieur strict.

    La matrice complète est hermitienne par construction : l'entrée
    (col, row) est le conjugué de (row, col).

    Attributes:
        dimension: Taille de la matrice.
        diagonal: Diagonale réelle.
        rows: Lignes des entrées non diagonales (rows > cols).
        cols: Colonnes des entrées non diagonales.
        values: Valeurs complexes des entrées non diagonales.
    """

    dimension: int
    diagonal: npt.NDArray[np.float64]
    rows: npt.NDArray[np.int64]
    cols: npt.NDArray[np.int64]
    values: npt.NDArray[np.complex128]

    def __post_init__(self) -> None:
        if self.diagonal.shape != (self.dimension,):
            raise ValueError("diagonale de taille incohérente")
        if np.any(self.rows <= self.cols):
            raise ValueError("seul le triangle inférieur strict est stocké")

    @property
    def off_diagonal(self) -> list[tuple[int, int, complex]]:
        """Entrées non diagonales (row, col, valeur)."""
        return [
            (int(r), int(c), complex(v))
            for r, c, v in zip(self.rows, self.cols, self.values)
        ]

    def to_csr(self) -> sp.csr_matrix:
        """Matrice complète au format CSR."""
        rows = np.concatenate(
            [np.arange(self.dimension), self.rows, self.cols]
        )
        cols = np.concatenate(
            [np.arange(self.dimension), self.cols, self.rows]
        )
        data = np.concatenate(
            [
                self.diagonal.astype(np.complex128),
                self.values,
                np.conj(self.values),
            ]
        )
        return sp.csr_matrix(
            (data, (rows, cols)), shape=(self.dimension, self.dimension)
        )

    def to_dense(self) -> npt.NDArray[np.complex128]:
        """Matrice complète dense."""
        dense = np.diag(self.diagonal.astype(np.complex128))
        dense[self.rows, self.cols] = self.values
        dense[self.cols, self.rows] = np.conj(self.values)
        return dense
