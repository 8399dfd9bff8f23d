"""Schéma pydantic de la configuration d'exécution."""

import math
from pathlib import Path
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from adiabatic_mis.analysis.ensemble import ScheduleSpec
from adiabatic_mis.analysis.generators import GeneratorKind, GeneratorSpec
from adiabatic_mis.graphs.io import read_graph_file
from adiabatic_mis.graphs.models import MAX_VERTICES, Graph
from adiabatic_mis.isbasis.basis import DEFAULT_BASIS_CAP

Subcommand = Literal["gen", "validate", "gap-scan", "anneal", "ensemble"]
MAX_SEED = (1 << 64) - 1


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")


class GraphSourceConfig(_Frozen):
    """Source du graphe : un fichier ou un générateur."""

    file: Path | None = None
    gnp: tuple[int, float] | None = None
    gnm: tuple[int, int] | None = None
    gnm_equal_n: int | None = Field(default=None, ge=1, le=MAX_VERTICES)
    spider: int | None = Field(default=None, ge=1, le=31)
    edgeless: int | None = Field(default=None, ge=1, le=MAX_VERTICES)
    complete: int | None = Field(default=None, ge=1, le=MAX_VERTICES)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)

    @model_validator(mode="after")
    def _check_ranges(self) -> "GraphSourceConfig":
        if self.gnp is not None:
            n, p = self.gnp
            if not 1 <= n <= MAX_VERTICES:
                raise ValueError(f"gnp : n hors de [1, {MAX_VERTICES}]")
            if not 0.0 <= p <= 1.0:
                raise ValueError("gnp : p hors de [0, 1]")
        if self.gnm is not None:
            n, m = self.gnm
            if not 1 <= n <= MAX_VERTICES:
                raise ValueError(f"gnm : n hors de [1, {MAX_VERTICES}]")
            if not 0 <= m <= n * (n - 1) // 2:
                raise ValueError("gnm : m hors de [0, C(n, 2)]")
        return self

    def sources(self) -> list[str]:
        """Noms des sources renseignées."""
        names = ["file", "gnp", "gnm", "gnm_equal_n", "spider",
                 "edgeless", "complete"]
        return [name for name in names if getattr(self, name) is not None]

    def generator(self) -> tuple[GeneratorSpec, int]:
        """Famille et taille du générateur choisi.

        Raises:
            ValueError: Si la source est un fichier ou absente.
        """
        if self.gnp is not None:
            return GeneratorSpec("gnp", p=self.gnp[1]), self.gnp[0]
        if self.gnm is not None:
            return GeneratorSpec("gnm", m=self.gnm[1]), self.gnm[0]
        named: tuple[tuple[GeneratorKind, int | None], ...] = (
            ("gnm-equal-n", self.gnm_equal_n),
            ("spider", self.spider),
            ("edgeless", self.edgeless),
            ("complete", self.complete),
        )
        for kind, value in named:
            if value is not None:
                return GeneratorSpec(kind), value
        raise ValueError("aucun générateur de graphe configuré")

    def load(self) -> tuple[Graph, str]:
        """Construit le graphe et son libellé de provenance."""
        if self.file is not None:
            return read_graph_file(self.file), "file"
        spec, n = self.generator()
        return spec.build(n, self.seed), spec.describe()


class ScheduleConfig(_Frozen):
    """Calendrier de recuit."""

    total_time: float | None = Field(default=None, gt=0.0)
    gamma: float = Field(default=2.0, gt=0.0)
    omega_phi: float = Field(default=1.0, gt=0.0)
    steps: int | None = Field(default=None, ge=2)
    fixed_theta: float | None = Field(default=None, ge=0.0, le=math.pi)

    def spec(self) -> ScheduleSpec:
        """Règle de calendrier équivalente."""
        return ScheduleSpec(
            gamma=self.gamma,
            total_time=self.total_time,
            omega_phi=self.omega_phi,
            steps=self.steps,
        )


class ScanConfig(_Frozen):
    """Balayage spectral."""

    grid: int = Field(default=201, ge=2)
    include_omega_theta: bool = False
    spider_series: tuple[int, int] | None = None

    @model_validator(mode="after")
    def _check_series(self) -> "ScanConfig":
        if self.spider_series is not None:
            low, high = self.spider_series
            if not 1 <= low <= high:
                raise ValueError("spider_series : 1 ≤ début ≤ fin requis")
            if high - low < 2:
                raise ValueError("spider_series : au moins 3 valeurs de n")
            if self.include_omega_theta:
                raise ValueError(
                    "spider_series se calcule à ω_θ = 0 ; "
                    "retirez --include-omega-theta"
                )
        return self


class EnsembleConfig(_Frozen):
    """Expériences d'ensemble."""

    count: int = Field(default=200, ge=1)
    master_seed: int = Field(default=0, ge=0, le=MAX_SEED)
    parallelism: int | None = Field(default=None, ge=1)
    n_values: tuple[int, ...] | None = None
    basis_cap: int = Field(default=DEFAULT_BASIS_CAP, ge=1)


class ValidationConfig(_Frozen):
    """Paramètres de ``validate``."""

    delta: float = Field(default=1.0, gt=0.0)
    samples: int = Field(default=5, ge=1)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)


class OutputConfig(_Frozen):
    """Destination et format des sorties."""

    out: Path = Path(".")
    format: Literal["csv", "json"] = "csv"
    svg: bool = False
    record_runtime: bool = False
    dump_basis: bool = False
    trajectory_samples: int | None = Field(default=None, ge=2)


class RunConfig(_Frozen):
    """Configuration complète et validée d'une sous-commande.

    Example:
        >>> RunConfig(subcommand="gen", graph={"spider": 2}).graph.spider
        2
    """

    subcommand: Subcommand
    graph: GraphSourceConfig = GraphSourceConfig()
    schedule: ScheduleConfig = ScheduleConfig()
    scan: ScanConfig = ScanConfig()
    ensemble: EnsembleConfig = EnsembleConfig()
    validation: ValidationConfig = ValidationConfig()
    output: OutputConfig = OutputConfig()
    logging: dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _check_graph_source(self) -> "RunConfig":
        sources = self.graph.sources()
        series = (
            self.subcommand == "gap-scan"
            and self.scan.spider_series is not None
        )
        if series:
            if sources:
                raise ValueError(
                    "--spider-series exclut toute autre source de graphe"
                )
            return self
        if len(sources) != 1:
            raise ValueError(
                "exactement une source de graphe requise, reçu "
                f"{sources or 'aucune'}"
            )
        if self.subcommand == "ensemble" and sources == ["file"]:
            raise ValueError("ensemble exige un générateur, pas un fichier")
        fixed = self.schedule.fixed_theta is not None
        if fixed and self.subcommand != "anneal":
            raise ValueError("--fixed-theta n'a de sens que pour anneal")
        return self
