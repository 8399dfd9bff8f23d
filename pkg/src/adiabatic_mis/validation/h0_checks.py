"""Vérifications exhaustives du hamiltonien de pénalité H₀.

Le spectre des 2^n configurations est calculé une fois et partagé par
les trois vérifications : énergie fondamentale −mΔ, dégénérescence
égale au nombre d'ensembles indépendants, premier niveau excité
−mΔ + 4Δ.
"""

import math
from functools import cached_property

import numpy as np
import numpy.typing as npt

from adiabatic_mis.errors.exceptions import ValidationScaleError
from adiabatic_mis.gauge.hamiltonian import h0_spectrum
from adiabatic_mis.graphs.models import Graph
from adiabatic_mis.validation.base import Check, CheckOutcome

MAX_EXHAUSTIVE_VERTICES = 14
ENERGY_TOLERANCE = 1e-9


class H0Scan:
    """Spectre exhaustif de H₀ partagé entre vérifications."""

    def __init__(self, graph: Graph, delta: float = 1.0) -> None:
        """Prépare le balayage.

        Args:
            graph: Graphe (n ≤ 14).
            delta: Couplage Δ > 0.

        Raises:
            ValidationScaleError: Si n > 14.
            ValueError: Si delta ≤ 0.
        """
        if graph.n > MAX_EXHAUSTIVE_VERTICES:
            raise ValidationScaleError(
                f"vérification exhaustive limitée à n ≤ "
                f"{MAX_EXHAUSTIVE_VERTICES}, reçu n={graph.n}"
            )
        if delta <= 0.0:
            raise ValueError(f"delta doit être > 0, reçu {delta}")
        self.graph = graph
        self.delta = delta

    @cached_property
    def energies(self) -> npt.NDArray[np.float64]:
        """Énergies des 2^n configurations."""
        return h0_spectrum(self.graph, self.delta)

    @property
    def expected_ground(self) -> float:
        """Énergie fondamentale attendue −mΔ."""
        return -self.graph.m * self.delta

    def is_ground(self) -> npt.NDArray[np.bool_]:
        """Masque des configurations fondamentales."""
        return np.isclose(
            self.energies, self.energies.min(), rtol=0.0, atol=ENERGY_TOLERANCE
        )


class H0GroundEnergyCheck(Check):
    """Énergie fondamentale égale à −mΔ."""

    name = "h0-ground-energy"

    def __init__(self, scan: H0Scan) -> None:
        self._scan = scan

    def run(self) -> CheckOutcome:
        ground = float(self._scan.energies.min())
        expected = self._scan.expected_ground
        return CheckOutcome(
            self.name,
            math.isclose(ground, expected, abs_tol=ENERGY_TOLERANCE),
            f"E0={ground:g}, attendu {expected:g}",
        )


class H0DegeneracyCheck(Check):
    """Dégénérescence fondamentale égale à la dimension de la base."""

    name = "h0-ground-degeneracy"

    def __init__(self, scan: H0Scan, basis_dimension: int) -> None:
        self._scan = scan
        self._dimension = basis_dimension

    def run(self) -> CheckOutcome:
        degeneracy = int(self._scan.is_ground().sum())
        return CheckOutcome(
            self.name,
            degeneracy == self._dimension,
            f"dégénérescence {degeneracy}, dimension {self._dimension}",
        )


class H0GapCheck(Check):
    """Premier niveau excité exactement à −mΔ + 4Δ."""

    name = "h0-gap"

    def __init__(self, scan: H0Scan) -> None:
        self._scan = scan

    def run(self) -> CheckOutcome:
        excited = self._scan.energies[~self._scan.is_ground()]
        if excited.size == 0:
            return CheckOutcome(
                self.name, True, "aucun niveau excité (graphe sans arête)"
            )
        first = float(excited.min())
        gap = first - float(self._scan.energies.min())
        expected = 4.0 * self._scan.delta
        return CheckOutcome(
            self.name,
            math.isclose(gap, expected, abs_tol=ENERGY_TOLERANCE),
            f"E1={first:g}, écart {gap:g}, attendu {expected:g}",
        )
