"""Modèles de données des graphes.

Un graphe est stocké sous deux formes cohérentes : la liste canonique
des arêtes (u < v, ordre lexicographique) et un masque de voisinage
64 bits par sommet, utilisé par toutes les énumérations.
"""

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

from adiabatic_mis.errors.exceptions import GraphFormatError, GraphRangeError

if TYPE_CHECKING:
    import networkx as nx

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """Graphe simple non orienté sur les sommets 0..n-1.

    Attributes:
        n: Nombre de sommets (1 ≤ n ≤ 64).
        edges: Arêtes canoniques (u, v) avec u < v, triées.
        adj: Masque de voisinage de chaque sommet (calculé).
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()
    adj: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        """Valide les arêtes, les canonise et calcule les masques.

        Raises:
            GraphRangeError: Si n ou une extrémité sort du domaine.
            GraphFormatError: Pour une boucle ou une arête en double.
        """
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphRangeError(
                f"n doit être dans [1, {MAX_VERTICES}], reçu {self.n}"
            )
        adj = [0] * self.n
        canonical: list[tuple[int, int]] = []
        for u, v in self.edges:
            if u == v:
                raise GraphFormatError(f"boucle sur le sommet {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphRangeError(
                    f"arête ({u}, {v}) hors de [0, {self.n})"
                )
            if adj[u] >> v & 1:
                raise GraphFormatError(f"arête en double ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            canonical.append((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(canonical)))
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(
        cls, n: int, edges: list[tuple[int, int]] | tuple[Any, ...]
    ) -> "Graph":
        """Construit un graphe depuis une liste d'arêtes quelconque.

        Args:
            n: Nombre de sommets.
            edges: Paires de sommets, dans n'importe quel ordre.

        Returns:
            Graphe validé et canonisé.
        """
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @property
    def m(self) -> int:
        """Nombre d'arêtes."""
        return len(self.edges)

    @property
    def average_degree(self) -> float:
        """Degré moyen d = 2m/n."""
        return 2.0 * self.m / self.n

    def neighbors(self, v: int) -> list[int]:
        """Retourne les voisins de v par ordre croissant."""
        mask = self.adj[v]
        return [u for u in range(self.n) if mask >> u & 1]

    def is_independent(self, mask: int) -> bool:
        """Indique si le sous-ensemble ``mask`` est indépendant."""
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if self.adj[v] & mask:
                return False
            rest ^= low
        return True

    def to_networkx(self) -> "nx.Graph":
        """Exporte le graphe vers networkx (extra ``graph``).

        Returns:
            Graphe networkx avec les sommets 0..n-1.
        """
        import networkx as nx

        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class MisResult:
    """Résultat exact du problème de l'ensemble indépendant maximum.

    Attributes:
        alpha: Taille α(G) d'un ensemble indépendant maximum.
        witness: Masque d'un ensemble indépendant de taille alpha.
        count_max: Nombre d'ensembles indépendants de taille alpha.
    """

    alpha: int
    witness: int
    count_max: int

    @property
    def witness_vertices(self) -> list[int]:
        """Sommets du témoin, par ordre croissant."""
        return [v for v in range(self.witness.bit_length())
                if self.witness >> v & 1]
