"""Recuits individuels et ensembles de graphes aléatoires.

Les graines des membres sont dérivées de la graine maîtresse par
``split_seed`` ; chaque membre est calculé isolément dans un pool de
processus et les résultats sont rassemblés par indice. Les agrégats ne
dépendent donc ni du degré de parallélisme ni de l'ordre d'exécution.
"""

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from adiabatic_mis.analysis.generators import GeneratorSpec
from adiabatic_mis.analysis.metrics import mean_size, ratio
from adiabatic_mis.dynamics.evolution import evolve
from adiabatic_mis.dynamics.schedule import Schedule
from adiabatic_mis.dynamics.state import (
    NORM_TOLERANCE,
    StateVector,
    initial_state,
    mis_probability,
)
from adiabatic_mis.errors.exceptions import BasisCapExceededError
from adiabatic_mis.graphs.mis import exact_mis
from adiabatic_mis.graphs.models import Graph, MisResult
from adiabatic_mis.graphs.prng import (
    dense_alpha_estimate,
    sparse_alpha_estimate,
    split_seed,
)
from adiabatic_mis.isbasis.basis import (
    DEFAULT_BASIS_CAP,
    IsBasis,
    build_basis,
)
from adiabatic_mis.logging.base import Logger, NullLogger

# ‖ψ‖² peut s'écarter de 1 d'environ 2·NORM_TOLERANCE.
RATIO_SLACK = 3 * NORM_TOLERANCE


@dataclass(frozen=True)
class ScheduleSpec:
    """Règle de construction du calendrier à partir de n.

    Attributes:
        gamma: Exposant de T = n^γ (ignoré si total_time est fixé).
        total_time: Durée T imposée, indépendante de n.
        omega_phi: Vitesse dφ/dt.
        steps: Nombre de pas imposé, sinon règle par défaut.
    """

    gamma: float = 2.0
    total_time: float | None = None
    omega_phi: float = 1.0
    steps: int | None = None

    def schedule_for(self, n: int) -> Schedule:
        """Calendrier de balayage pour un graphe à n sommets."""
        if self.total_time is not None:
            return Schedule.sweep(
                self.total_time, self.omega_phi, steps=self.steps, n=n
            )
        return Schedule.for_graph(n, self.gamma, self.omega_phi, self.steps)


@dataclass(frozen=True)
class RunRecord:
    """Bilan d'un recuit sur un graphe.

    Attributes:
        n: Nombre de sommets.
        m: Nombre d'arêtes.
        generator: Libellé de la famille de graphes.
        seed: Graine du graphe.
        alpha: Taille exacte α(G).
        mean_size: Taille moyenne N̄ mesurée.
        ratio: r = N̄/α(G).
        mis_probability: Probabilité de mesurer un ensemble maximum.
        total_time: Durée T du recuit.
        runtime_ms: Durée de calcul, si enregistrée.
    """

    n: int
    m: int
    generator: str
    seed: int
    alpha: int
    mean_size: float
    ratio: float
    mis_probability: float
    total_time: float
    runtime_ms: float | None = None

    def __post_init__(self) -> None:
        """Bornes de N̄ et r, à la dérive de norme près.

        Raises:
            ValueError: Si une borne est violée.
        """
        size_slack = RATIO_SLACK * max(self.alpha, 1)
        if not -size_slack <= self.mean_size <= self.alpha + size_slack:
            raise ValueError(
                f"N̄={self.mean_size} hors de [0, α={self.alpha}]"
            )
        if not -RATIO_SLACK <= self.ratio <= 1.0 + RATIO_SLACK:
            raise ValueError(f"ratio {self.ratio} hors de [0, 1]")


@dataclass(frozen=True)
class SkippedRun:
    """Membre d'ensemble écarté (plafond de base dépassé)."""

    index: int
    seed: int
    reason: str


@dataclass(frozen=True)
class AnnealOutcome:
    """Résultat complet d'un recuit : bilan, base, état final, MIS."""

    record: RunRecord
    basis: IsBasis
    state: StateVector
    mis: MisResult


def anneal(
    graph: Graph,
    schedule: Schedule,
    generator: str = "file",
    seed: int = 0,
    basis_cap: int = DEFAULT_BASIS_CAP,
    record_runtime: bool = False,
    logger: Logger | None = None,
) -> AnnealOutcome:
    """Exécute l'algorithme complet sur un graphe.

    Préparation dans l'ensemble vide, balayage de θ de 0 à π, puis
    lecture des probabilités de chaque ensemble indépendant.

    Args:
        graph: Graphe du problème.
        schedule: Calendrier de recuit.
        generator: Libellé de provenance du graphe.
        seed: Graine ayant produit le graphe.
        basis_cap: Plafond de la base.
        record_runtime: Mesure la durée de calcul.
        logger: Logger optionnel.

    Returns:
        AnnealOutcome.

    Raises:
        BasisCapExceededError: Si la base dépasse le plafond.
        NormDriftError: Si l'intégration perd l'unitarité.
    """
    started = time.perf_counter()
    basis = build_basis(graph, basis_cap, logger)
    mis = exact_mis(graph)
    final = evolve(basis, schedule, initial_state(basis), logger)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    record = RunRecord(
        n=graph.n,
        m=graph.m,
        generator=generator,
        seed=seed,
        alpha=mis.alpha,
        mean_size=mean_size(final, basis),
        ratio=ratio(final, basis, mis),
        mis_probability=mis_probability(final, basis),
        total_time=schedule.total_time,
        runtime_ms=elapsed_ms if record_runtime else None,
    )
    return AnnealOutcome(record, basis, final, mis)


@dataclass(frozen=True)
class _MemberTask:
    index: int
    seed: int
    n: int
    generator: GeneratorSpec
    schedule: ScheduleSpec
    basis_cap: int
    record_runtime: bool


def _run_member(task: _MemberTask) -> RunRecord | SkippedRun:
    """Calcule un membre ; exécuté dans un processus du pool."""
    graph = task.generator.build(task.n, task.seed)
    try:
        outcome = anneal(
            graph,
            task.schedule.schedule_for(graph.n),
            generator=task.generator.describe(),
            seed=task.seed,
            basis_cap=task.basis_cap,
            record_runtime=task.record_runtime,
        )
    except BasisCapExceededError as exc:
        return SkippedRun(task.index, task.seed, str(exc))
    return outcome.record


@dataclass(frozen=True)
class EnsembleResult:
    """Agrégat d'un ensemble de recuits.

    Attributes:
        generator: Famille de graphes.
        n: Paramètre de taille.
        count: Nombre de membres demandés.
        schedule: Règle de calendrier.
        master_seed: Graine maîtresse.
        records: Bilans des membres calculés, par indice.
        skipped: Membres écartés, par indice.
    """

    generator: GeneratorSpec
    n: int
    count: int
    schedule: ScheduleSpec
    master_seed: int
    records: tuple[RunRecord, ...] = field(default_factory=tuple)
    skipped: tuple[SkippedRun, ...] = field(default_factory=tuple)

    @property
    def skip_count(self) -> int:
        """Nombre de membres écartés."""
        return len(self.skipped)

    @property
    def count_used(self) -> int:
        """Nombre de membres entrant dans les agrégats."""
        return len(self.records)

    @property
    def r_bar(self) -> float | None:
        """Moyenne arithmétique des ratios r."""
        if not self.records:
            return None
        return math.fsum(r.ratio for r in self.records) / len(self.records)

    @property
    def r_variance(self) -> float | None:
        """Variance de population des ratios r."""
        mean = self.r_bar
        if mean is None:
            return None
        return math.fsum(
            (r.ratio - mean) ** 2 for r in self.records
        ) / len(self.records)

    @property
    def standard_error(self) -> float | None:
        """Erreur standard de r̄ : √(variance/effectif)."""
        variance = self.r_variance
        if variance is None:
            return None
        return math.sqrt(variance / len(self.records))

    @property
    def alpha_mean(self) -> float | None:
        """Moyenne des α(G) mesurés."""
        if not self.records:
            return None
        return math.fsum(r.alpha for r in self.records) / len(self.records)

    @property
    def mean_degree(self) -> float | None:
        """Degré moyen 2m/n moyenné sur les membres."""
        if not self.records:
            return None
        return math.fsum(2.0 * r.m / r.n for r in self.records) / len(
            self.records
        )

    @property
    def alpha_estimate(self) -> float | None:
        """Estimation asymptotique de α : dense pour G(n, p), creuse
        sinon."""
        if self.generator.kind == "gnp" and self.generator.p is not None:
            return dense_alpha_estimate(self.n, self.generator.p)
        degree = self.mean_degree
        if degree is None:
            return None
        return sparse_alpha_estimate(self.n, degree)


def _execute(
    tasks: list[_MemberTask], parallelism: int
) -> list[RunRecord | SkippedRun]:
    if parallelism == 1:
        return [_run_member(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(_run_member, tasks, chunksize=1))


def run_ensemble(
    generator: GeneratorSpec,
    n: int,
    count: int,
    schedule: ScheduleSpec,
    master_seed: int,
    parallelism: int | None = None,
    basis_cap: int = DEFAULT_BASIS_CAP,
    record_runtime: bool = False,
    logger: Logger | None = None,
) -> EnsembleResult:
    """Exécute un ensemble de ``count`` recuits.

    Le membre i utilise la graine ``split_seed(master_seed, i)``.

    Args:
        generator: Famille de graphes.
        n: Paramètre de taille de la famille.
        count: Nombre de membres (≥ 1).
        schedule: Règle de calendrier.
        master_seed: Graine maîtresse 64 bits.
        parallelism: Nombre de processus (défaut : cœurs disponibles).
        basis_cap: Plafond de base par membre.
        record_runtime: Enregistre les durées de calcul.
        logger: Logger optionnel.

    Returns:
        EnsembleResult ; les membres écartés sont comptés à part.
    """
    if count < 1:
        raise ValueError(f"count doit être ≥ 1, reçu {count}")
    log = logger or NullLogger()
    workers = parallelism or _available_cores()
    if workers < 1:
        raise ValueError(f"parallelism doit être ≥ 1, reçu {workers}")
    tasks = [
        _MemberTask(
            index=i,
            seed=split_seed(master_seed, i),
            n=n,
            generator=generator,
            schedule=schedule,
            basis_cap=basis_cap,
            record_runtime=record_runtime,
        )
        for i in range(count)
    ]
    log.log_info(
        f"Ensemble {generator.describe()} n={n} : {count} membres, "
        f"{workers} processus"
    )
    records: list[RunRecord] = []
    skipped: list[SkippedRun] = []
    for result in _execute(tasks, workers):
        if isinstance(result, SkippedRun):
            log.log_warning(
                f"Membre {result.index} (graine {result.seed}) écarté : "
                f"{result.reason}"
            )
            skipped.append(result)
        else:
            records.append(result)
    ensemble = EnsembleResult(
        generator=generator,
        n=n,
        count=count,
        schedule=schedule,
        master_seed=master_seed,
        records=tuple(records),
        skipped=tuple(skipped),
    )
    if ensemble.r_bar is not None:
        log.log_success(
            f"n={n} : r̄={ensemble.r_bar:.6f}, "
            f"variance={ensemble.r_variance:.3e}, "
            f"écartés={ensemble.skip_count}"
        )
    return ensemble


def sweep_n(
    generator: GeneratorSpec,
    n_values: list[int],
    count: int,
    schedule: ScheduleSpec,
    master_seed: int,
    parallelism: int | None = None,
    basis_cap: int = DEFAULT_BASIS_CAP,
    record_runtime: bool = False,
    logger: Logger | None = None,
) -> list[EnsembleResult]:
    """Série r̄ en fonction de n, même graine maîtresse pour chaque n."""
    return [
        run_ensemble(
            generator,
            n,
            count,
            schedule,
            master_seed,
            parallelism,
            basis_cap,
            record_runtime,
            logger,
        )
        for n in n_values
    ]


def _available_cores() -> int:
    if hasattr(os, "sched_getaffinity"):
        return len(os.sched_getaffinity(0))
    return os.cpu_count() or 1
