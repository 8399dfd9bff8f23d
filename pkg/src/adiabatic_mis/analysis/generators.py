"""Spécification des familles de graphes d'un ensemble."""

from dataclasses import dataclass
from typing import Literal

from adiabatic_mis.graphs.generators import (
    complete,
    edgeless,
    gen_gnm,
    gen_gnp,
    spider,
)
from adiabatic_mis.graphs.models import Graph

GeneratorKind = Literal[
    "gnp", "gnm", "gnm-equal-n", "edgeless", "spider", "complete"
]
RANDOM_KINDS = frozenset({"gnp", "gnm", "gnm-equal-n"})


@dataclass(frozen=True)
class GeneratorSpec:
    """Famille de graphes paramétrée par n et une graine.

    Pour ``spider``, n est le nombre de pattes (2n+1 sommets).

    Attributes:
        kind: Famille de graphes.
        p: Probabilité d'arête (``gnp``).
        m: Nombre d'arêtes (``gnm``).
    """

    kind: GeneratorKind
    p: float | None = None
    m: int | None = None

    def __post_init__(self) -> None:
        """Vérifie la présence des paramètres propres à la famille.

        Raises:
            ValueError: Paramètre manquant ou superflu.
        """
        if self.kind == "gnp" and self.p is None:
            raise ValueError("gnp exige p")
        if self.kind == "gnm" and self.m is None:
            raise ValueError("gnm exige m")
        if self.kind != "gnp" and self.p is not None:
            raise ValueError(f"p n'a pas de sens pour {self.kind}")
        if self.kind != "gnm" and self.m is not None:
            raise ValueError(f"m n'a pas de sens pour {self.kind}")

    @property
    def is_random(self) -> bool:
        """Indique si la graine influence le graphe."""
        return self.kind in RANDOM_KINDS

    def build(self, n: int, seed: int) -> Graph:
        """Construit le graphe de taille n avec la graine donnée."""
        if self.kind == "gnp" and self.p is not None:
            return gen_gnp(n, self.p, seed)
        if self.kind == "gnm" and self.m is not None:
            return gen_gnm(n, self.m, seed)
        if self.kind == "gnm-equal-n":
            return gen_gnm(n, n, seed)
        if self.kind == "edgeless":
            return edgeless(n)
        if self.kind == "spider":
            return spider(n)
        return complete(n)

    def describe(self) -> str:
        """Libellé de la colonne ``generator`` des CSV.

        Example:
            >>> GeneratorSpec("gnp", p=0.5).describe()
            'gnp(p=0.5)'
        """
        if self.kind == "gnp":
            return f"gnp(p={self.p!r})"
        if self.kind == "gnm":
            return f"gnm(m={self.m})"
        return self.kind
