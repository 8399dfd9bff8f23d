"""Métriques d'évolution et expériences d'ensemble."""

from adiabatic_mis.analysis.ensemble import (
    AnnealOutcome,
    EnsembleResult,
    RunRecord,
    ScheduleSpec,
    SkippedRun,
    anneal,
    run_ensemble,
    sweep_n,
)
from adiabatic_mis.analysis.generators import GeneratorSpec
from adiabatic_mis.analysis.metrics import mean_size, ratio
from adiabatic_mis.analysis.report import (
    RUN_FIELDS,
    ensemble_summary_dict,
    run_record_dict,
    sweep_series,
    write_runs_csv,
)

__all__ = [
    "anneal",
    "AnnealOutcome",
    "ensemble_summary_dict",
    "EnsembleResult",
    "GeneratorSpec",
    "mean_size",
    "ratio",
    "run_ensemble",
    "RUN_FIELDS",
    "run_record_dict",
    "RunRecord",
    "ScheduleSpec",
    "SkippedRun",
    "sweep_n",
    "sweep_series",
    "write_runs_csv",
]
