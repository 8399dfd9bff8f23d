"""Intégration de dψ/dt = i·A(θ(t))·ψ sur la base des ensembles
indépendants.

Schéma du point milieu exponentiel : ψ ← exp(i·h·A(θ(t + h/2)))·ψ avec
h = T/steps. Le retournement final des spins n'est pas appliqué : les
états de base sont déjà étiquetés par les ensembles de sommets, donc
|a_j|² se lit directement comme la probabilité de l'ensemble j.
"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
import scipy.linalg as la

from adiabatic_mis.dynamics.propagator import (
    DENSE_PROPAGATOR_MAX,
    dense_expm_apply,
    lanczos_expm_apply,
)
from adiabatic_mis.dynamics.schedule import Schedule
from adiabatic_mis.dynamics.state import NORM_TOLERANCE, StateVector
from adiabatic_mis.errors.exceptions import (
    KrylovBreakdownError,
    NormDriftError,
)
from adiabatic_mis.gauge.gauge_matrix import GaugeOperator
from adiabatic_mis.isbasis.basis import IsBasis
from adiabatic_mis.logging.base import Logger, NullLogger
from adiabatic_mis.reporting.formats import render_csv

TRAJECTORY_PROBABILITY_FLOOR = 1e-9


@dataclass(frozen=True)
class Snapshot:
    """Instantané de la trajectoire.

    Attributes:
        theta: Angle θ à l'instant de l'instantané.
        state: Vecteur d'état.
        time: Instant t.
    """

    theta: float
    state: StateVector
    time: float


class _Integrator:
    """Pas d'intégration, chemin dense ou Krylov selon la dimension."""

    def __init__(
        self,
        basis: IsBasis,
        schedule: Schedule,
        logger: Logger,
        diagonal_shift: float,
    ) -> None:
        self._schedule = schedule
        self._logger = logger
        self._operator = GaugeOperator(basis, diagonal_shift)
        self._dense = len(basis) <= DENSE_PROPAGATOR_MAX
        self._cached_theta: float | None = None
        self._eigen: tuple[
            npt.NDArray[np.float64], npt.NDArray[np.complex128]
        ] | None = None

    def _dense_step(
        self, psi: npt.NDArray[np.complex128], theta: float, h: float
    ) -> npt.NDArray[np.complex128]:
        if self._eigen is None or theta != self._cached_theta:
            matrix = self._operator.dense_at(
                theta, self._schedule.omega_phi, self._schedule.omega_theta
            )
            self._eigen = la.eigh(matrix)
            self._cached_theta = theta
        eigenvalues, eigenvectors = self._eigen
        return dense_expm_apply(eigenvalues, eigenvectors, psi, h)

    def step(
        self, psi: npt.NDArray[np.complex128], theta: float, h: float
    ) -> npt.NDArray[np.complex128]:
        if self._dense:
            return self._dense_step(psi, theta, h)
        matrix = self._operator.at(
            theta, self._schedule.omega_phi, self._schedule.omega_theta
        )
        try:
            return lanczos_expm_apply(matrix, psi, h)
        except KrylovBreakdownError as exc:
            self._logger.log_warning(
                f"{exc} à θ={theta:.6f} : repli sur le chemin dense"
            )
            return self._dense_step(psi, theta, h)


def _check_norm(psi: npt.NDArray[np.complex128]) -> None:
    drift = abs(1.0 - float(np.linalg.norm(psi)))
    if drift > NORM_TOLERANCE:
        raise NormDriftError(drift, NORM_TOLERANCE)


def _integrate(
    basis: IsBasis,
    schedule: Schedule,
    psi0: StateVector,
    checkpoints: list[int],
    logger: Logger | None,
    diagonal_shift: float,
) -> list[Snapshot]:
    """Intègre de 0 à T en relevant l'état aux pas demandés."""
    if len(psi0) != len(basis):
        raise ValueError(
            f"état de dimension {len(psi0)} pour une base de {len(basis)}"
        )
    log = logger or NullLogger()
    integrator = _Integrator(basis, schedule, log, diagonal_shift)
    h = schedule.step_size
    wanted = sorted(set(checkpoints))
    snapshots: list[Snapshot] = []
    psi = np.array(psi0.amplitudes, dtype=np.complex128)

    def record(step_index: int) -> None:
        _check_norm(psi)
        t = step_index * h
        snapshots.append(
            Snapshot(schedule.theta_at(t), StateVector(psi.copy()), t)
        )

    cursor = 0
    if wanted and wanted[0] == 0:
        record(0)
        cursor = 1
    for k in range(schedule.steps):
        theta_mid = schedule.theta_at((k + 0.5) * h)
        psi = integrator.step(psi, theta_mid, h)
        if cursor < len(wanted) and wanted[cursor] == k + 1:
            record(k + 1)
            cursor += 1
    log.log_debug(
        f"Évolution terminée : dim={len(basis)}, steps={schedule.steps}, "
        f"T={schedule.total_time}"
    )
    return snapshots


def evolve(
    basis: IsBasis,
    schedule: Schedule,
    psi0: StateVector,
    logger: Logger | None = None,
    diagonal_shift: float = 0.0,
) -> StateVector:
    """Fait évoluer ψ₀ de t = 0 à t = T.

    Args:
        basis: Base des ensembles indépendants.
        schedule: Calendrier de recuit.
        psi0: État initial normalisé.
        logger: Logger optionnel (replis numériques en WARNING).
        diagonal_shift: Constante ajoutée à A (phase globale).

    Returns:
        État final à θ = π (ou à θ fixe en fin de durée).

    Raises:
        NormDriftError: Si |1 − ‖ψ‖| > 1e-8 ; l'état n'est jamais
            renormalisé.
    """
    snapshots = _integrate(
        basis, schedule, psi0, [schedule.steps], logger, diagonal_shift
    )
    return snapshots[-1].state


def evolve_trajectory(
    basis: IsBasis,
    schedule: Schedule,
    psi0: StateVector,
    sample_count: int,
    logger: Logger | None = None,
) -> list[Snapshot]:
    """Évolution avec instantanés régulièrement espacés en θ.

    Les instantanés tombent sur les pas ⌊k·steps/(S−1)⌉ ; le premier
    est ψ₀ et le dernier coïncide exactement avec ``evolve``.

    Args:
        basis: Base des ensembles indépendants.
        schedule: Calendrier de recuit.
        psi0: État initial normalisé.
        sample_count: Nombre S d'instantanés (≥ 2).
        logger: Logger optionnel.

    Returns:
        Instantanés dans l'ordre chronologique.
    """
    if sample_count < 2:
        raise ValueError(
            f"sample_count doit être ≥ 2, reçu {sample_count}"
        )
    checkpoints = [
        round(k * schedule.steps / (sample_count - 1))
        for k in range(sample_count)
    ]
    snapshots = _integrate(basis, schedule, psi0, checkpoints, logger, 0.0)
    if len(snapshots) < sample_count:
        # Pas plus nombreux que les instantanés : certains coïncident.
        by_step = {round(s.time / schedule.step_size): s for s in snapshots}
        snapshots = [by_step[step] for step in checkpoints]
    return snapshots


def write_trajectory_csv(snapshots: list[Snapshot]) -> str:
    """CSV ``theta,index,prob`` des probabilités ≥ 1e-9."""
    rows: list[tuple[float, int, float]] = []
    for snapshot in snapshots:
        probabilities = snapshot.state.probabilities()
        for index in np.flatnonzero(
            probabilities >= TRAJECTORY_PROBABILITY_FLOOR
        ).tolist():
            rows.append(
                (snapshot.theta, int(index), float(probabilities[index]))
            )
    return render_csv(["theta", "index", "prob"], rows)
