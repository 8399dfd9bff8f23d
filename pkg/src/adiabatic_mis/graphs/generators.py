"""Constructeurs de graphes : aléatoires (graine fixée) et familles
spéciales."""

from math import comb

from adiabatic_mis.errors.exceptions import GraphRangeError
from adiabatic_mis.graphs.models import MAX_VERTICES, Graph
from adiabatic_mis.graphs.prng import Xoshiro256StarStar


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_VERTICES:
        raise GraphRangeError(
            f"n doit être dans [1, {MAX_VERTICES}], reçu {n}"
        )


def _pairs(n: int) -> list[tuple[int, int]]:
    """Paires (u, v), u < v, en ordre lexicographique."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """Graphe d'Erdős–Rényi G(n, p).

    Les C(n, 2) paires sont parcourues en ordre lexicographique ; la
    paire est retenue si ``next_float() < p``. Exactement un tirage
    par paire, y compris pour p = 0 ou 1.

    Args:
        n: Nombre de sommets (1 ≤ n ≤ 64).
        p: Probabilité d'arête dans [0, 1].
        seed: Graine 64 bits.

    Returns:
        Graphe généré.

    Raises:
        GraphRangeError: Si n ou p sort du domaine.
    """
    _check_n(n)
    if not 0.0 <= p <= 1.0:
        raise GraphRangeError(f"p doit être dans [0, 1], reçu {p}")
    rng = Xoshiro256StarStar(seed)
    edges = [pair for pair in _pairs(n) if rng.next_float() < p]
    return Graph(n, tuple(edges))


def gen_gnm(n: int, m: int, seed: int) -> Graph:
    """Graphe aléatoire G(n, m) : m arêtes uniformes sans remise.

    Fisher–Yates partiel sur les indices de paires : pour i = 0..m-1,
    ``j = i + next_below(N - i)`` puis échange des positions i et j.

    Args:
        n: Nombre de sommets (1 ≤ n ≤ 64).
        m: Nombre d'arêtes (0 ≤ m ≤ C(n, 2)).
        seed: Graine 64 bits.

    Returns:
        Graphe à exactement m arêtes.

    Raises:
        GraphRangeError: Si n ou m sort du domaine.
    """
    _check_n(n)
    total = comb(n, 2)
    if not 0 <= m <= total:
        raise GraphRangeError(
            f"m doit être dans [0, {total}] pour n={n}, reçu {m}"
        )
    pairs = _pairs(n)
    rng = Xoshiro256StarStar(seed)
    for i in range(m):
        j = i + rng.next_below(total - i)
        pairs[i], pairs[j] = pairs[j], pairs[i]
    return Graph(n, tuple(pairs[:m]))


def spider(n_legs: int) -> Graph:
    """Graphe « araignée » S_n : un centre et n pattes de deux arêtes.

    Sommet 0 = centre ; la patte i (1 ≤ i ≤ n) est le chemin
    0 – (2i-1) – 2i. S_n a 2n+1 sommets, 2n arêtes, 2^n ensembles
    indépendants maximaux et un unique ensemble maximum (le centre et
    les n extrémités).

    Args:
        n_legs: Nombre de pattes (≥ 1).

    Returns:
        Graphe S_n.

    Raises:
        GraphRangeError: Si n_legs < 1 ou 2n+1 > 64.
    """
    if n_legs < 1:
        raise GraphRangeError(f"n_legs doit être ≥ 1, reçu {n_legs}")
    _check_n(2 * n_legs + 1)
    edges: list[tuple[int, int]] = []
    for i in range(1, n_legs + 1):
        a, b = 2 * i - 1, 2 * i
        edges.append((0, a))
        edges.append((a, b))
    return Graph(2 * n_legs + 1, tuple(edges))


def edgeless(n: int) -> Graph:
    """Graphe sans arête à n sommets."""
    _check_n(n)
    return Graph(n, ())


def complete(n: int) -> Graph:
    """Graphe complet K_n."""
    _check_n(n)
    return Graph(n, tuple(_pairs(n)))
