"""Hamiltonien de pénalité H₀ = Δ·Σ_{(i,j)∈E} (s_i + s_j + s_i·s_j).

Un bit à 1 dans la configuration signifie s = +1 (spin haut, sommet
dans l'ensemble). Une arête vaut −Δ sauf si ses deux extrémités sont
hautes (+3Δ) : les états fondamentaux sont exactement les ensembles
indépendants, d'énergie −mΔ, et le premier niveau excité est
−mΔ + 4Δ.
"""

import numpy as np
import numpy.typing as npt

from adiabatic_mis.errors.exceptions import ValidationScaleError
from adiabatic_mis.graphs.models import Graph

MAX_SPECTRUM_VERTICES = 20


def h0_energy(config: int, graph: Graph, delta: float = 1.0) -> float:
    """Énergie d'une configuration de spins.

    Args:
        config: Masque de n bits (1 = spin haut).
        graph: Graphe du problème.
        delta: Couplage Δ > 0.

    Returns:
        Énergie Δ·Σ (s_i + s_j + s_i·s_j).
    """
    total = 0
    for u, v in graph.edges:
        s_u = 1 if config >> u & 1 else -1
        s_v = 1 if config >> v & 1 else -1
        total += s_u + s_v + s_u * s_v
    return delta * total


def h0_spectrum(
    graph: Graph, delta: float = 1.0
) -> npt.NDArray[np.float64]:
    """Énergies des 2^n configurations, indexées par masque.

    Évaluation vectorisée de −mΔ + 4Δ·(nombre d'arêtes à deux
    extrémités hautes).

    Args:
        graph: Graphe du problème (n ≤ 20).
        delta: Couplage Δ.

    Raises:
        ValidationScaleError: Si n > 20.
    """
    if graph.n > MAX_SPECTRUM_VERTICES:
        raise ValidationScaleError(
            f"spectre exhaustif limité à n ≤ {MAX_SPECTRUM_VERTICES}, "
            f"reçu n={graph.n}"
        )
    configs = np.arange(1 << graph.n, dtype=np.int64)
    violated = np.zeros(configs.shape, dtype=np.int64)
    for u, v in graph.edges:
        violated += (configs >> u) & (configs >> v) & 1
    return delta * (-graph.m + 4.0 * violated)
