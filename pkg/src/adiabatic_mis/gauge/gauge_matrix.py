"""Matrice de jauge A(θ) sur la base des ensembles indépendants.

Avec N_j le cardinal de l'état j :

- diagonale : −ω_φ·{N_j·sin²(θ/2) + (n − N_j)·cos²(θ/2)} ;
- saut (lo, hi) : A[hi, lo] = ω_φ·sin(θ)/2 + i·ω_θ/2, la ligne portant
  l'état qui a un sommet de plus ; A[lo, hi] en est le conjugué.

Ce qui se réécrit A(θ) = −n·ω_φ·cos²(θ/2)·I + ω_φ·cos(θ)·N
+ ω_φ·sin(θ)·X + ω_θ·Y, forme utilisée par ``GaugeOperator`` pour ne
construire la structure creuse qu'une fois par base.
"""

import math
from functools import reduce

import numpy as np
import numpy.typing as npt
import scipy.sparse as sp

from adiabatic_mis.gauge.models import GaugeParams, SparseHermitian
from adiabatic_mis.isbasis.basis import IsBasis

_PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
_PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128)
# Indice 1 = sommet dans l'ensemble, de valeur propre +1.
_PAULI_Z = np.array([[-1.0, 0.0], [0.0, 1.0]], dtype=np.complex128)


def hop_value(params: GaugeParams) -> complex:
    """Valeur A[hi, lo] d'un saut."""
    return complex(
        params.omega_phi * math.sin(params.theta) / 2.0,
        params.omega_theta / 2.0,
    )


def gauge_diagonal(
    basis: IsBasis, params: GaugeParams
) -> npt.NDArray[np.float64]:
    """Diagonale de A(θ) pour chaque état de la base."""
    sin2 = math.sin(params.theta / 2.0) ** 2
    cos2 = math.cos(params.theta / 2.0) ** 2
    sizes = basis.sizes.astype(np.float64)
    return -params.omega_phi * (sizes * sin2 + (basis.n - sizes) * cos2)


def assemble_gauge(basis: IsBasis, params: GaugeParams) -> SparseHermitian:
    """Assemble A(θ) à partir des éléments de matrice analytiques.

    Args:
        basis: Base des ensembles indépendants.
        params: Angle et vitesses.

    Returns:
        Matrice hermitienne creuse, supportée par la diagonale et les
        sauts.
    """
    values = np.full(basis.hop_count, hop_value(params), dtype=np.complex128)
    return SparseHermitian(
        dimension=len(basis),
        diagonal=gauge_diagonal(basis, params),
        rows=basis.hop_hi.copy(),
        cols=basis.hop_lo.copy(),
        values=values,
    )


class GaugeOperator:
    """Forme décomposée de A(θ), réutilisable pour tous les θ.

    La structure CSR (diagonale puis sauts dans les deux sens) est
    fixée à la construction ; ``at`` ne recalcule que les données.

    Example:
        >>> operator = GaugeOperator(build_basis(complete(3)))
        >>> matrix = operator.at(math.pi / 2, omega_phi=1.0)
    """

    def __init__(self, basis: IsBasis, diagonal_shift: float = 0.0) -> None:
        """Prépare les composantes I, N, X et Y sur le même motif creux.

        Args:
            basis: Base des ensembles indépendants.
            diagonal_shift: Constante ajoutée à la diagonale (phase
                globale, sans effet sur les probabilités).
        """
        self.basis = basis
        self.dimension = len(basis)
        self.diagonal_shift = diagonal_shift
        dim = self.dimension
        hops = basis.hop_count
        diag_index = np.arange(dim, dtype=np.int64)
        rows = np.concatenate([diag_index, basis.hop_hi, basis.hop_lo])
        cols = np.concatenate([diag_index, basis.hop_lo, basis.hop_hi])

        identity = np.concatenate([np.ones(dim), np.zeros(2 * hops)])
        number = np.concatenate(
            [basis.sizes.astype(np.float64), np.zeros(2 * hops)]
        )
        hop_x = np.concatenate([np.zeros(dim), np.full(2 * hops, 0.5)])
        hop_y = np.concatenate(
            [
                np.zeros(dim, dtype=np.complex128),
                np.full(hops, 0.5j),
                np.full(hops, -0.5j),
            ]
        )

        order = np.lexsort((cols, rows))
        self._indices = cols[order].astype(np.int32)
        self._indptr = np.concatenate(
            [[0], np.cumsum(np.bincount(rows, minlength=dim))]
        ).astype(np.int32)
        self._identity = identity[order]
        self._number = number[order]
        self._hop_x = hop_x[order]
        self._hop_y = hop_y[order]

    def data_at(
        self, theta: float, omega_phi: float = 1.0, omega_theta: float = 0.0
    ) -> npt.NDArray[np.complex128]:
        """Données CSR de A(θ) dans l'ordre du motif."""
        n = self.basis.n
        constant = (
            -n * omega_phi * math.cos(theta / 2.0) ** 2 + self.diagonal_shift
        )
        return (
            constant * self._identity
            + omega_phi * math.cos(theta) * self._number
            + omega_phi * math.sin(theta) * self._hop_x
            + omega_theta * self._hop_y
        )

    def at(
        self, theta: float, omega_phi: float = 1.0, omega_theta: float = 0.0
    ) -> sp.csr_matrix:
        """Retourne A(θ) au format CSR.

        Args:
            theta: Angle θ.
            omega_phi: Vitesse dφ/dt.
            omega_theta: Vitesse dθ/dt.
        """
        return sp.csr_matrix(
            (
                self.data_at(theta, omega_phi, omega_theta),
                self._indices,
                self._indptr,
            ),
            shape=(self.dimension, self.dimension),
        )

    def dense_at(
        self, theta: float, omega_phi: float = 1.0, omega_theta: float = 0.0
    ) -> npt.NDArray[np.complex128]:
        """Retourne A(θ) sous forme dense."""
        return self.at(theta, omega_phi, omega_theta).toarray()


def edgeless_pauli_form(
    n: int, params: GaugeParams
) -> npt.NDArray[np.complex128]:
    """Matrice de jauge d'un graphe sans arête, écrite en spins libres.

    Somme sur les sommets de champs x (ω_φ·sinθ/2), y (ω_θ/2) et z
    (ω_φ·cosθ/2), plus −n·ω_φ/2·I. Le sommet j est le bit j de
    l'indice, ce qui reproduit l'ordre de la base de ``edgeless(n)``.

    Args:
        n: Nombre de spins.
        params: Angle et vitesses.

    Returns:
        Matrice dense 2^n × 2^n.
    """
    field = (
        params.omega_phi * math.sin(params.theta) / 2.0 * _PAULI_X
        + params.omega_theta / 2.0 * _PAULI_Y
        + params.omega_phi * math.cos(params.theta) / 2.0 * _PAULI_Z
    )
    identity = np.eye(2, dtype=np.complex128)
    size = 1 << n
    total = -n * params.omega_phi / 2.0 * np.eye(size, dtype=np.complex128)
    for j in range(n):
        # Le premier facteur de kron porte le bit de poids fort.
        factors = [field if k == j else identity for k in reversed(range(n))]
        total += reduce(np.kron, factors)
    return total


def edgeless_reference_gap(
    n: int, params: GaugeParams, drop_theta_rate: bool = False
) -> float:
    """Écart spectral analytique du graphe sans arête.

    Chaque spin libre voit un champ de norme √(ω_φ² + ω_θ²)/2 ;
    l'écart entre fondamental et premier excité ne dépend donc pas de n.

    Args:
        n: Nombre de sommets (sans effet sur le résultat).
        params: Angle et vitesses.
        drop_theta_rate: Ignore le terme en dθ/dt (écart = ω_φ).

    Returns:
        Écart spectral.
    """
    del n
    if drop_theta_rate:
        return params.omega_phi
    return math.hypot(params.omega_phi, params.omega_theta)
