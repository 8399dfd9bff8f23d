"""Matrice de jauge A(θ), hamiltonien H₀ et oracle de Berry."""

from adiabatic_mis.gauge.berry import (
    berry_connection_fd,
    berry_connection_fd_dense,
    rotation_matrix,
    spin_states,
)
from adiabatic_mis.gauge.hamiltonian import h0_energy, h0_spectrum
from adiabatic_mis.gauge.models import GaugeParams, SparseHermitian
from adiabatic_mis.gauge.gauge_matrix import (
    GaugeOperator,
    assemble_gauge,
    edgeless_pauli_form,
    edgeless_reference_gap,
    gauge_diagonal,
    hop_value,
)

__all__ = [
    "assemble_gauge",
    "berry_connection_fd",
    "berry_connection_fd_dense",
    "edgeless_pauli_form",
    "edgeless_reference_gap",
    "gauge_diagonal",
    "GaugeOperator",
    "GaugeParams",
    "h0_energy",
    "h0_spectrum",
    "hop_value",
    "rotation_matrix",
    "SparseHermitian",
    "spin_states",
]
