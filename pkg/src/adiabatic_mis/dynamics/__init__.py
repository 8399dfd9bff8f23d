"""Évolution adiabatique dans le sous-espace des ensembles
indépendants."""

from adiabatic_mis.dynamics.evolution import (
    Snapshot,
    evolve,
    evolve_trajectory,
    write_trajectory_csv,
)
from adiabatic_mis.dynamics.propagator import (
    DENSE_PROPAGATOR_MAX,
    dense_expm_apply,
    lanczos_expm_apply,
)
from adiabatic_mis.dynamics.schedule import Schedule, default_steps
from adiabatic_mis.dynamics.state import (
    NORM_TOLERANCE,
    StateVector,
    initial_state,
    mis_probability,
    size_distribution,
)

__all__ = [
    "default_steps",
    "dense_expm_apply",
    "DENSE_PROPAGATOR_MAX",
    "evolve",
    "evolve_trajectory",
    "initial_state",
    "lanczos_expm_apply",
    "mis_probability",
    "NORM_TOLERANCE",
    "Schedule",
    "size_distribution",
    "Snapshot",
    "StateVector",
    "write_trajectory_csv",
]
