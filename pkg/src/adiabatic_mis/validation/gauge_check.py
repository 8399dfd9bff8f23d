"""Confrontation des éléments analytiques de A(θ) à la connexion de
Berry calculée par différences finies."""

import math

import numpy as np

from adiabatic_mis.gauge.berry import berry_connection_fd_dense
from adiabatic_mis.gauge.gauge_matrix import assemble_gauge
from adiabatic_mis.gauge.models import GaugeParams
from adiabatic_mis.graphs.prng import Xoshiro256StarStar
from adiabatic_mis.isbasis.basis import IsBasis
from adiabatic_mis.validation.base import Check, CheckOutcome

GAUGE_TOLERANCE = 1e-6
FAR_COUPLING_TOLERANCE = 1e-8
DEFAULT_FD_STEP = 1e-5


class GaugeConsistencyCheck(Check):
    """Écart max entre ``assemble_gauge`` et l'oracle de Berry.

    Les tuples (θ, φ, ω_θ, ω_φ) sont tirés du générateur documenté :
    θ ∈ ]0, π[, φ ∈ [0, 2π[, ω_θ ∈ [0, 1[, ω_φ ∈ [0.5, 2[. Les
    couplages entre états à distance de Hamming ≥ 2 doivent être nuls
    à 1e-8 près.
    """

    name = "gauge-consistency"

    def __init__(
        self,
        basis: IsBasis,
        samples: int = 5,
        seed: int = 0,
        tolerance: float = GAUGE_TOLERANCE,
        fd_step: float = DEFAULT_FD_STEP,
    ) -> None:
        """Initialise la vérification.

        Args:
            basis: Base (échelle de validation dense).
            samples: Nombre de tuples tirés.
            seed: Graine des tirages.
            tolerance: Écart max admis sur diagonale et sauts.
            fd_step: Pas des différences finies.
        """
        self._basis = basis
        self._samples = samples
        self._seed = seed
        self._tolerance = tolerance
        self._fd_step = fd_step

    def _draw(self) -> list[tuple[float, float, float, float]]:
        rng = Xoshiro256StarStar(self._seed)
        tuples = []
        for _ in range(self._samples):
            theta = math.pi * (0.02 + 0.96 * rng.next_float())
            phi = 2.0 * math.pi * rng.next_float()
            omega_theta = rng.next_float()
            omega_phi = 0.5 + 1.5 * rng.next_float()
            tuples.append((theta, phi, omega_theta, omega_phi))
        return tuples

    def run(self) -> CheckOutcome:
        hop_mask = np.eye(len(self._basis), dtype=bool)
        hop_mask[self._basis.hop_hi, self._basis.hop_lo] = True
        hop_mask[self._basis.hop_lo, self._basis.hop_hi] = True

        worst_near = 0.0
        worst_far = 0.0
        for theta, phi, omega_theta, omega_phi in self._draw():
            analytic = assemble_gauge(
                self._basis, GaugeParams(theta, omega_phi, omega_theta)
            ).to_dense()
            numeric = berry_connection_fd_dense(
                self._basis, theta, phi, omega_theta, omega_phi, self._fd_step
            )
            difference = np.abs(analytic - numeric)
            worst_near = max(worst_near, float(difference[hop_mask].max()))
            if not hop_mask.all():
                worst_far = max(
                    worst_far, float(np.abs(numeric[~hop_mask]).max())
                )
        passed = (
            worst_near < self._tolerance
            and worst_far < FAR_COUPLING_TOLERANCE
        )
        return CheckOutcome(
            self.name,
            passed,
            f"écart max {worst_near:.2e} (tolérance {self._tolerance:.0e}), "
            f"couplage distance ≥ 2 max {worst_far:.2e}",
        )
