"""Graphes : représentation, génération reproductible, E/S et oracle
exact de l'ensemble indépendant maximum."""

from adiabatic_mis.graphs.generators import (
    complete,
    edgeless,
    gen_gnm,
    gen_gnp,
    spider,
)
from adiabatic_mis.graphs.io import (
    read_graph,
    read_graph_file,
    write_graph,
    write_graph_file,
)
from adiabatic_mis.graphs.mis import exact_mis
from adiabatic_mis.graphs.models import MAX_VERTICES, Graph, MisResult
from adiabatic_mis.graphs.prng import (
    SplitMix64,
    Xoshiro256StarStar,
    dense_alpha_estimate,
    sparse_alpha_estimate,
    split_seed,
)

__all__ = [
    "complete",
    "dense_alpha_estimate",
    "edgeless",
    "exact_mis",
    "gen_gnm",
    "gen_gnp",
    "Graph",
    "MAX_VERTICES",
    "MisResult",
    "read_graph",
    "read_graph_file",
    "sparse_alpha_estimate",
    "spider",
    "split_seed",
    "SplitMix64",
    "write_graph",
    "write_graph_file",
    "Xoshiro256StarStar",
]
