"""Analyse spectrale de A(θ) : courbes d'écart et ajustements."""

from adiabatic_mis.spectra.eigen import (
    DENSE_EIGEN_MAX,
    first_distinct_pair,
    lowest_distinct_pair,
)
from adiabatic_mis.spectra.gap import (
    DEFAULT_GRID_POINTS,
    GapCurve,
    LogGapFit,
    fit_log_gap,
    gap_scan,
    gap_summary_dict,
    spider_min_gaps,
    write_gap_curve_csv,
)

__all__ = [
    "DEFAULT_GRID_POINTS",
    "DENSE_EIGEN_MAX",
    "first_distinct_pair",
    "fit_log_gap",
    "gap_scan",
    "gap_summary_dict",
    "GapCurve",
    "LogGapFit",
    "lowest_distinct_pair",
    "spider_min_gaps",
    "write_gap_curve_csv",
]
