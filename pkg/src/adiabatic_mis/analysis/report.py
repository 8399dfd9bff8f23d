"""Exports CSV et JSON des recuits et des ensembles."""

from collections.abc import Iterable
from dataclasses import asdict
from typing import Any

from adiabatic_mis.analysis.ensemble import EnsembleResult, RunRecord
from adiabatic_mis.reporting.formats import render_csv

RUN_FIELDS = [
    "n",
    "m",
    "generator",
    "seed",
    "alpha",
    "mean_size",
    "ratio",
    "mis_probability",
    "runtime_ms",
]


def write_runs_csv(records: Iterable[RunRecord]) -> str:
    """CSV d'une ligne par recuit ; ``runtime_ms`` vide si non mesuré."""
    return render_csv(
        RUN_FIELDS,
        (
            [
                r.n,
                r.m,
                r.generator,
                r.seed,
                r.alpha,
                r.mean_size,
                r.ratio,
                r.mis_probability,
                r.runtime_ms,
            ]
            for r in records
        ),
    )


def run_record_dict(record: RunRecord) -> dict[str, Any]:
    """Représentation JSON d'un bilan de recuit."""
    return asdict(record)


def ensemble_summary_dict(result: EnsembleResult) -> dict[str, Any]:
    """Résumé JSON : écho de configuration, r̄, variance, écartés."""
    return {
        "config": {
            "generator": result.generator.describe(),
            "n": result.n,
            "count": result.count,
            "gamma": (
                None
                if result.schedule.total_time is not None
                else result.schedule.gamma
            ),
            "total_time": result.schedule.total_time,
            "omega_phi": result.schedule.omega_phi,
            "steps": result.schedule.steps,
            "master_seed": result.master_seed,
        },
        "count_used": result.count_used,
        "r_bar": result.r_bar,
        "r_variance": result.r_variance,
        "standard_error": result.standard_error,
        "skip_count": result.skip_count,
        "skipped": [asdict(s) for s in result.skipped],
        "alpha_mean": result.alpha_mean,
        "mean_degree": result.mean_degree,
        "alpha_estimate": result.alpha_estimate,
    }


def sweep_series(results: list[EnsembleResult]) -> list[tuple[int, float]]:
    """Points (n, r̄) d'un balayage, sans les ensembles vides."""
    return [
        (result.n, result.r_bar)
        for result in results
        if result.r_bar is not None
    ]
