"""Base des ensembles indépendants du sous-espace fondamental.

Les états sont les masques des ensembles indépendants, triés par valeur
entière croissante (l'indice 0 est l'ensemble vide). Les liens de saut
relient deux états qui diffèrent d'un seul sommet ; ce sont les seules
paires couplées par les termes non diagonaux de la matrice de jauge.
"""

from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from adiabatic_mis.errors.exceptions import BasisCapExceededError
from adiabatic_mis.graphs.models import Graph
from adiabatic_mis.logging.base import Logger

DEFAULT_BASIS_CAP = 5_000_000


@dataclass(frozen=True, eq=False)
class IsBasis:
    """Base immuable des ensembles indépendants d'un graphe.

    Attributes:
        n: Nombre de sommets du graphe source.
        states: Masques triés par ordre croissant (uint64).
        sizes: Cardinal N_j de chaque état.
        hop_lo: Indice de l'état le plus petit de chaque saut.
        hop_hi: Indice de l'état le plus grand de chaque saut.
    """

    n: int
    states: npt.NDArray[np.uint64]
    sizes: npt.NDArray[np.int64]
    hop_lo: npt.NDArray[np.int64]
    hop_hi: npt.NDArray[np.int64]

    def __post_init__(self) -> None:
        for array in (self.states, self.sizes, self.hop_lo, self.hop_hi):
            array.setflags(write=False)

    def __len__(self) -> int:
        return int(self.states.shape[0])

    @property
    def hop_count(self) -> int:
        """Nombre de liens de saut."""
        return int(self.hop_lo.shape[0])

    @property
    def hops(self) -> list[tuple[int, int]]:
        """Liens de saut sous forme de paires (lo, hi)."""
        return list(zip(self.hop_lo.tolist(), self.hop_hi.tolist()))

    @property
    def max_size(self) -> int:
        """Taille maximale des états, soit α(G)."""
        return int(self.sizes.max())

    def index_of(self, mask: int) -> int:
        """Retourne l'indice de l'état ``mask``.

        Args:
            mask: Masque d'un ensemble de sommets.

        Raises:
            KeyError: Si le masque n'est pas un état de la base.
        """
        position = int(np.searchsorted(self.states, np.uint64(mask)))
        if position < len(self) and int(self.states[position]) == mask:
            return position
        raise KeyError(f"masque absent de la base : {mask:#x}")

    def masks(self) -> Iterator[int]:
        """Itère sur les masques en entiers Python."""
        for mask in self.states.tolist():
            yield int(mask)


def _enumerate_masks(graph: Graph, cap: int) -> list[int]:
    """Extension en profondeur par sommets croissants.

    Chaque ensemble est produit une seule fois, à partir de ses sommets
    pris dans l'ordre croissant ; les candidats sont élagués par les
    masques de voisinage.
    """
    adj = graph.adj
    full = (1 << graph.n) - 1
    found: list[int] = []
    stack: list[tuple[int, int]] = [(0, full)]
    while stack:
        mask, candidates = stack.pop()
        found.append(mask)
        if len(found) > cap:
            raise BasisCapExceededError(cap, len(found))
        rest = candidates
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            above = candidates & ~((low << 1) - 1)
            stack.append((mask | low, above & ~adj[v]))
    return found


def _build_hops(
    n: int, states: npt.NDArray[np.uint64]
) -> tuple[npt.NDArray[np.int64], npt.NDArray[np.int64]]:
    """Calcule les sauts à un sommet, triés par (hi, lo)."""
    lows: list[npt.NDArray[np.int64]] = []
    highs: list[npt.NDArray[np.int64]] = []
    for v in range(n):
        bit = np.uint64(1) << np.uint64(v)
        hi = np.flatnonzero(states & bit).astype(np.int64)
        if hi.size == 0:
            continue
        lo = np.searchsorted(states, states[hi] ^ bit).astype(np.int64)
        lows.append(lo)
        highs.append(hi)
    if not lows:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty.copy()
    lo_all = np.concatenate(lows)
    hi_all = np.concatenate(highs)
    order = np.lexsort((lo_all, hi_all))
    return lo_all[order], hi_all[order]


def build_basis(
    graph: Graph,
    cap: int = DEFAULT_BASIS_CAP,
    logger: Logger | None = None,
) -> IsBasis:
    """Énumère tous les ensembles indépendants et leurs sauts.

    Args:
        graph: Graphe source.
        cap: Nombre maximal d'états accepté.
        logger: Logger optionnel (dimension obtenue en DEBUG).

    Returns:
        Base complète.

    Raises:
        BasisCapExceededError: Si le graphe a plus de ``cap`` ensembles
            indépendants ; ``found`` indique le compte atteint.
    """
    masks = sorted(_enumerate_masks(graph, cap))
    states = np.array(masks, dtype=np.uint64)
    sizes = np.array([mask.bit_count() for mask in masks], dtype=np.int64)
    hop_lo, hop_hi = _build_hops(graph.n, states)
    if logger is not None:
        logger.log_debug(
            f"Base : {states.size} états, {hop_lo.size} sauts "
            f"(n={graph.n}, m={graph.m})"
        )
    return IsBasis(graph.n, states, sizes, hop_lo, hop_hi)


def dimension(basis: IsBasis) -> int:
    """Nombre d'ensembles indépendants (dimension du sous-espace)."""
    return len(basis)


def mis_indices(basis: IsBasis) -> list[int]:
    """Indices des états de taille maximale."""
    return np.flatnonzero(basis.sizes == basis.max_size).tolist()


def maximal_indices(basis: IsBasis) -> list[int]:
    """Indices des ensembles indépendants maximaux.

    Un état est maximal s'il n'a aucun saut vers un état plus grand.
    """
    has_upward = np.zeros(len(basis), dtype=bool)
    has_upward[basis.hop_lo] = True
    return np.flatnonzero(~has_upward).tolist()


def layers(basis: IsBasis) -> dict[int, list[int]]:
    """Regroupe les indices d'états par taille (couches de l'arbre).

    Returns:
        Dictionnaire taille k -> indices des états de taille k.
    """
    result: dict[int, list[int]] = {}
    for index, size in enumerate(basis.sizes.tolist()):
        result.setdefault(int(size), []).append(index)
    return result


def write_basis_csv(basis: IsBasis) -> str:
    """Sérialise la base en CSV ``index,mask_hex,size``."""
    lines = ["index,mask_hex,size"]
    for index, (mask, size) in enumerate(
        zip(basis.states.tolist(), basis.sizes.tolist())
    ):
        lines.append(f"{index},{int(mask):#x},{int(size)}")
    return "\n".join(lines) + "\n"
