"""Métriques de fin d'évolution : taille moyenne N̄ et ratio r."""

import math

from adiabatic_mis.dynamics.state import StateVector
from adiabatic_mis.graphs.models import MisResult
from adiabatic_mis.isbasis.basis import IsBasis


def mean_size(psi: StateVector, basis: IsBasis) -> float:
    """Taille moyenne N̄ = Σ_j |a_j|²·N_j de l'ensemble mesuré."""
    probabilities = psi.probabilities()
    return math.fsum(
        float(p) * int(size)
        for p, size in zip(probabilities.tolist(), basis.sizes.tolist())
    )


def ratio(psi: StateVector, basis: IsBasis, mis: MisResult) -> float:
    """Ratio d'approximation r = N̄/α(G).

    Raises:
        ValueError: Si alpha < 1.
    """
    if mis.alpha < 1:
        raise ValueError(f"alpha doit être ≥ 1, reçu {mis.alpha}")
    return mean_size(psi, basis) / mis.alpha
