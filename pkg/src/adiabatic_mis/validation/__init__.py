"""Vérifications numériques de H₀ et de la matrice de jauge."""

from adiabatic_mis.validation.base import Check, CheckOutcome
from adiabatic_mis.validation.gauge_check import GaugeConsistencyCheck
from adiabatic_mis.validation.h0_checks import (
    H0DegeneracyCheck,
    H0GapCheck,
    H0GroundEnergyCheck,
    H0Scan,
)
from adiabatic_mis.validation.report import ValidationReport
from adiabatic_mis.validation.runner import validate_graph

__all__ = [
    "Check",
    "CheckOutcome",
    "GaugeConsistencyCheck",
    "H0DegeneracyCheck",
    "H0GapCheck",
    "H0GroundEnergyCheck",
    "H0Scan",
    "validate_graph",
    "ValidationReport",
]
