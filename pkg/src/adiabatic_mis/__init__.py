"""
Adiabatic MIS - Recuit adiabatique quantique du problème MIS.

Simulation classique d'un recuit restreint au sous-espace des
ensembles indépendants d'un graphe, dans le référentiel tournant.

Modules disponibles:
- graphs: Graphes, générateurs pseudo-aléatoires reproductibles, MIS exact
- isbasis: Base des ensembles indépendants et sauts d'un sommet
- gauge: Matrice de jauge A(θ), H₀ et connexion de Berry de référence
- dynamics: Calendriers, vecteurs d'état et intégration temporelle
- spectra: Écart spectral de A(θ) et ajustement log-linéaire
- analysis: Rapport r = N̄/α, recuits et ensembles
- validation: Vérifications exhaustives de H₀ et de la jauge
- reporting: Formats CSV/JSON, manifeste SHA-256, graphiques SVG
- config: Couches de configuration (fichiers, options) validées
- logging: Gestion des logs (Logger, ConsoleLogger, FileLogger)
- errors: Hiérarchie d'exceptions et handlers
- cli: Sous-commandes gen, validate, gap-scan, anneal, ensemble
"""

__version__ = "1.0.0"

from adiabatic_mis.graphs import (
    Graph,
    MisResult,
    exact_mis,
    gen_gnm,
    gen_gnp,
    read_graph,
    spider,
    split_seed,
    write_graph,
)
from adiabatic_mis.isbasis import IsBasis, build_basis
from adiabatic_mis.gauge import (
    GaugeOperator,
    GaugeParams,
    assemble_gauge,
    berry_connection_fd,
)
from adiabatic_mis.dynamics import (
    Schedule,
    StateVector,
    evolve,
    initial_state,
)
from adiabatic_mis.spectra import GapCurve, fit_log_gap, gap_scan
from adiabatic_mis.analysis import (
    EnsembleResult,
    GeneratorSpec,
    RunRecord,
    anneal,
    mean_size,
    ratio,
    run_ensemble,
)
from adiabatic_mis.errors import SimulatorError

__all__ = [
    "__version__",
    # graphs
    "Graph",
    "MisResult",
    "exact_mis",
    "gen_gnm",
    "gen_gnp",
    "read_graph",
    "spider",
    "split_seed",
    "write_graph",
    # isbasis
    "IsBasis",
    "build_basis",
    # gauge
    "GaugeOperator",
    "GaugeParams",
    "assemble_gauge",
    "berry_connection_fd",
    # dynamics
    "Schedule",
    "StateVector",
    "evolve",
    "initial_state",
    # spectra
    "GapCurve",
    "fit_log_gap",
    "gap_scan",
    # analysis
    "EnsembleResult",
    "GeneratorSpec",
    "RunRecord",
    "anneal",
    "mean_size",
    "ratio",
    "run_ensemble",
    # errors
    "SimulatorError",
]
