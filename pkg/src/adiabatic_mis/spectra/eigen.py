"""Deux plus basses valeurs propres distinctes de A(θ)."""

from functools import lru_cache
from typing import Literal

import numpy as np
import numpy.typing as npt
import scipy.linalg as la
from scipy.sparse.linalg import ArpackError, ArpackNoConvergence, eigsh

from adiabatic_mis.errors.exceptions import EigensolverError
from adiabatic_mis.gauge.gauge_matrix import GaugeOperator
from adiabatic_mis.graphs.prng import Xoshiro256StarStar

DENSE_EIGEN_MAX = 2048
INITIAL_LEVELS = 6
DISTINCT_RELATIVE_TOLERANCE = 1e-10
START_VECTOR_SEED = 0x5EED

EigenMethod = Literal["auto", "dense", "lanczos"]


def first_distinct_pair(
    eigenvalues: npt.NDArray[np.float64],
) -> tuple[float, float] | None:
    """Retourne (λ0, λ1) avec λ1 la première valeur distincte de λ0.

    Deux valeurs sont confondues si leur écart est inférieur à
    1e-10·max(1, |λ0|).

    Args:
        eigenvalues: Valeurs propres triées par ordre croissant.

    Returns:
        Le couple, ou None si toutes les valeurs sont confondues.
    """
    lambda0 = float(eigenvalues[0])
    tolerance = DISTINCT_RELATIVE_TOLERANCE * max(1.0, abs(lambda0))
    for value in eigenvalues[1:]:
        if float(value) - lambda0 > tolerance:
            return lambda0, float(value)
    return None


def _dense_levels(
    operator: GaugeOperator,
    theta: float,
    omega_phi: float,
    omega_theta: float,
    count: int,
) -> npt.NDArray[np.float64]:
    matrix = operator.dense_at(theta, omega_phi, omega_theta)
    return la.eigh(
        matrix, eigvals_only=True, subset_by_index=(0, count - 1)
    )


@lru_cache(maxsize=8)
def _start_vector(dimension: int) -> npt.NDArray[np.complex128]:
    """Vecteur de départ ARPACK, identique d'un processus à l'autre."""
    rng = Xoshiro256StarStar(START_VECTOR_SEED)
    vector = np.array(
        [rng.next_float() - 0.5 for _ in range(dimension)],
        dtype=np.complex128,
    )
    vector /= np.linalg.norm(vector)
    vector.setflags(write=False)
    return vector


def _lanczos_levels(
    operator: GaugeOperator,
    theta: float,
    omega_phi: float,
    omega_theta: float,
    count: int,
) -> npt.NDArray[np.float64]:
    matrix = operator.at(theta, omega_phi, omega_theta)
    try:
        values = eigsh(
            matrix,
            k=count,
            which="SA",
            v0=_start_vector(operator.dimension).copy(),
            return_eigenvectors=False,
        )
    except (ArpackNoConvergence, ArpackError) as exc:
        raise EigensolverError(
            f"eigsh non convergé à θ={theta:.6f} (k={count}) : {exc}"
        ) from exc
    return np.sort(np.real(values))


def lowest_distinct_pair(
    operator: GaugeOperator,
    theta: float,
    omega_phi: float = 1.0,
    omega_theta: float = 0.0,
    method: EigenMethod = "auto",
) -> tuple[float, float]:
    """Calcule λ0 et la première valeur propre distincte λ1.

    Le nombre de niveaux demandés double tant que le fondamental est
    dégénéré sur toute la fenêtre calculée.

    Args:
        operator: Matrice de jauge décomposée.
        theta: Angle θ.
        omega_phi: Vitesse dφ/dt.
        omega_theta: Vitesse dθ/dt.
        method: ``dense`` (scipy.linalg.eigh), ``lanczos`` (ARPACK) ou
            ``auto`` (dense jusqu'à la dimension 2048).

    Returns:
        Couple (λ0, λ1).

    Raises:
        EigensolverError: En cas de non-convergence ou de spectre
            entièrement dégénéré.
    """
    dim = operator.dimension
    dense = method == "dense" or (method == "auto" and dim <= DENSE_EIGEN_MAX)
    # ARPACK exige k < dim.
    limit = dim if dense else dim - 1
    count = min(INITIAL_LEVELS, limit)
    while True:
        if dense:
            levels = _dense_levels(
                operator, theta, omega_phi, omega_theta, count
            )
        else:
            levels = _lanczos_levels(
                operator, theta, omega_phi, omega_theta, count
            )
        pair = first_distinct_pair(levels)
        if pair is not None:
            return pair
        if count >= limit:
            raise EigensolverError(
                f"aucune valeur propre distincte de λ0 à θ={theta:.6f}"
            )
        count = min(2 * count, limit)
