"""Enchaînement des vérifications d'une instance."""

from adiabatic_mis.graphs.models import Graph
from adiabatic_mis.isbasis.basis import build_basis
from adiabatic_mis.logging.base import Logger, NullLogger
from adiabatic_mis.validation.base import Check
from adiabatic_mis.validation.gauge_check import GaugeConsistencyCheck
from adiabatic_mis.validation.h0_checks import (
    H0DegeneracyCheck,
    H0GapCheck,
    H0GroundEnergyCheck,
    H0Scan,
)
from adiabatic_mis.validation.report import ValidationReport


def validate_graph(
    graph: Graph,
    delta: float = 1.0,
    samples: int = 5,
    seed: int = 0,
    logger: Logger | None = None,
) -> ValidationReport:
    """Vérifie H₀ et la matrice de jauge sur un graphe.

    Args:
        graph: Graphe (n ≤ 14 pour le balayage exhaustif).
        delta: Couplage Δ.
        samples: Nombre de tuples pour la vérification de jauge.
        seed: Graine des tuples.
        logger: Logger optionnel (une ligne par vérification).

    Returns:
        Rapport complet.

    Raises:
        ValidationScaleError: Si l'instance dépasse l'échelle dense.
    """
    log = logger or NullLogger()
    scan = H0Scan(graph, delta)
    basis = build_basis(graph, logger=log)
    checks: list[Check] = [
        H0GroundEnergyCheck(scan),
        H0DegeneracyCheck(scan, len(basis)),
        H0GapCheck(scan),
        GaugeConsistencyCheck(basis, samples=samples, seed=seed),
    ]
    report = ValidationReport(
        context={"n": graph.n, "m": graph.m, "dimension": len(basis)}
    )
    for check in checks:
        outcome = check.run()
        report.outcomes.append(outcome)
        if outcome.passed:
            log.log_success(f"✓ {outcome.name} : {outcome.detail}")
        else:
            log.log_error(f"✗ {outcome.name} : {outcome.detail}")
    return report
