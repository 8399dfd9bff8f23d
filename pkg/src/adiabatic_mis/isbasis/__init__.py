"""Base des ensembles indépendants et structure de sauts à un sommet."""

from adiabatic_mis.isbasis.basis import (
    DEFAULT_BASIS_CAP,
    IsBasis,
    build_basis,
    dimension,
    layers,
    maximal_indices,
    mis_indices,
    write_basis_csv,
)

__all__ = [
    "build_basis",
    "DEFAULT_BASIS_CAP",
    "dimension",
    "IsBasis",
    "layers",
    "maximal_indices",
    "mis_indices",
    "write_basis_csv",
]
