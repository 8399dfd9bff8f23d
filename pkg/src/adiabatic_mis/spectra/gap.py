"""Courbes d'écart spectral de A(θ) et ajustement exponentiel."""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, NamedTuple

import numpy as np
import numpy.typing as npt
from scipy.optimize import minimize_scalar

from adiabatic_mis.gauge.gauge_matrix import GaugeOperator
from adiabatic_mis.graphs.generators import spider
from adiabatic_mis.isbasis.basis import IsBasis, build_basis
from adiabatic_mis.logging.base import Logger, NullLogger
from adiabatic_mis.reporting.formats import render_csv
from adiabatic_mis.spectra.eigen import EigenMethod, lowest_distinct_pair

DEFAULT_GRID_POINTS = 201
REFINE_XATOL = 1e-9


@dataclass(frozen=True, eq=False)
class GapCurve:
    """Résultat d'un balayage de l'écart spectral sur θ ∈ [0, π].

    Attributes:
        n: Nombre de sommets du graphe.
        dimension: Dimension de la base.
        thetas: Grille strictement croissante, de 0 à π.
        lambda0: Plus basse valeur propre en chaque point.
        lambda1: Deuxième valeur propre distincte en chaque point.
        gap: Écart lambda1 − lambda0.
        min_gap: Minimum affiné (≤ tout écart de la grille).
        theta_at_min: Position du minimum affiné.
    """

    n: int
    dimension: int
    thetas: npt.NDArray[np.float64]
    lambda0: npt.NDArray[np.float64]
    lambda1: npt.NDArray[np.float64]
    gap: npt.NDArray[np.float64]
    min_gap: float
    theta_at_min: float


class LogGapFit(NamedTuple):
    """Droite des moindres carrés ln(gap) = intercept + slope·n."""

    intercept: float
    slope: float
    residual: float


def gap_scan(
    basis: IsBasis,
    omega_phi: float = 1.0,
    omega_theta: float = 0.0,
    grid_points: int = DEFAULT_GRID_POINTS,
    method: EigenMethod = "auto",
    max_workers: int | None = None,
    logger: Logger | None = None,
) -> GapCurve:
    """Balaye l'écart spectral de A(θ) sur une grille uniforme.

    Les résolutions par θ sont indépendantes et réparties sur un pool
    de threads ; les résultats sont rassemblés dans l'ordre de la
    grille. Le minimum est ensuite affiné par la méthode bornée de
    Brent (section dorée et pas paraboliques) entre les voisins du
    minimum de grille.

    Args:
        basis: Base des ensembles indépendants (dimension ≥ 2).
        omega_phi: Vitesse dφ/dt.
        omega_theta: Vitesse dθ/dt (0 par défaut).
        grid_points: Nombre de points de grille (≥ 2).
        method: Solveur des valeurs propres.
        max_workers: Taille du pool de threads.
        logger: Logger optionnel (résumé en INFO).

    Returns:
        Courbe d'écart.

    Raises:
        ValueError: Si la dimension ou la grille est trop petite.
        EigensolverError: Si un solveur ne converge pas.
    """
    if len(basis) < 2:
        raise ValueError("gap_scan exige une base de dimension ≥ 2")
    if grid_points < 2:
        raise ValueError(f"grid_points doit être ≥ 2, reçu {grid_points}")
    operator = GaugeOperator(basis)
    thetas = np.linspace(0.0, math.pi, grid_points)

    def solve(theta: float) -> tuple[float, float]:
        return lowest_distinct_pair(
            operator, theta, omega_phi, omega_theta, method
        )

    def gap_at(theta: float) -> float:
        lambda0, lambda1 = solve(theta)
        return lambda1 - lambda0

    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        pairs = list(pool.map(solve, thetas.tolist()))
    lambda0 = np.array([pair[0] for pair in pairs])
    lambda1 = np.array([pair[1] for pair in pairs])
    gap = lambda1 - lambda0

    best = int(np.argmin(gap))
    min_gap = float(gap[best])
    theta_at_min = float(thetas[best])
    low = float(thetas[max(best - 1, 0)])
    high = float(thetas[min(best + 1, grid_points - 1)])
    refined = minimize_scalar(
        gap_at,
        bounds=(low, high),
        method="bounded",
        options={"xatol": REFINE_XATOL},
    )
    if float(refined.fun) < min_gap:
        min_gap = float(refined.fun)
        theta_at_min = float(refined.x)

    (logger or NullLogger()).log_info(
        f"Écart minimal {min_gap:.6e} à θ={theta_at_min:.6f} "
        f"(n={basis.n}, dim={len(basis)})"
    )
    return GapCurve(
        n=basis.n,
        dimension=len(basis),
        thetas=thetas,
        lambda0=lambda0,
        lambda1=lambda1,
        gap=gap,
        min_gap=min_gap,
        theta_at_min=theta_at_min,
    )


def fit_log_gap(points: list[tuple[float, float]]) -> LogGapFit:
    """Ajuste ln(gap) = a + b·n par moindres carrés ordinaires.

    Args:
        points: Couples (n, écart minimal), au moins trois.

    Returns:
        Ordonnée à l'origine, pente et résidu absolu maximal.

    Raises:
        ValueError: Moins de trois points, écart non positif, ou
            valeurs de n toutes identiques.
    """
    if len(points) < 3:
        raise ValueError(f"au moins 3 points requis, reçu {len(points)}")
    ns = np.array([float(n) for n, _ in points])
    gaps = np.array([float(g) for _, g in points])
    if np.any(gaps <= 0.0):
        raise ValueError("écart non positif : logarithme indéfini")
    if np.all(ns == ns[0]):
        raise ValueError("toutes les valeurs de n sont identiques")
    logs = np.log(gaps)
    slope, intercept = np.polyfit(ns, logs, 1)
    residual = float(np.max(np.abs(logs - (intercept + slope * ns))))
    return LogGapFit(float(intercept), float(slope), residual)


def spider_min_gaps(
    n_values: list[int],
    grid_points: int = DEFAULT_GRID_POINTS,
    omega_phi: float = 1.0,
    omega_theta: float = 0.0,
    logger: Logger | None = None,
) -> list[tuple[int, float]]:
    """Écart minimal de A(θ) pour les graphes araignée S_n.

    Returns:
        Couples (n, écart minimal) dans l'ordre de ``n_values``.
    """
    series: list[tuple[int, float]] = []
    for n_legs in n_values:
        basis = build_basis(spider(n_legs))
        curve = gap_scan(
            basis, omega_phi, omega_theta, grid_points, logger=logger
        )
        series.append((n_legs, curve.min_gap))
    return series


def write_gap_curve_csv(curve: GapCurve) -> str:
    """CSV ``theta,lambda0,lambda1,gap``, une ligne par point."""
    return render_csv(
        ["theta", "lambda0", "lambda1", "gap"],
        zip(
            curve.thetas.tolist(),
            curve.lambda0.tolist(),
            curve.lambda1.tolist(),
            curve.gap.tolist(),
        ),
    )


def gap_summary_dict(curve: GapCurve) -> dict[str, Any]:
    """Résumé JSON ``{n, dimension, min_gap, theta_at_min}``."""
    return {
        "n": curve.n,
        "dimension": curve.dimension,
        "min_gap": curve.min_gap,
        "theta_at_min": curve.theta_at_min,
    }
