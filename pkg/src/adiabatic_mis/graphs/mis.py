"""Oracle exact de l'ensemble indépendant maximum.

Branch-and-bound sur masques de bits : branchement sur le sommet de
plus haut degré parmi les candidats, borne supérieure gloutonne par
couverture en cliques des candidats (une clique fournit au plus un
sommet). Les sommets candidats isolés sont ajoutés d'office : tout
ensemble maximum les contient. La comparaison stricte dans l'élagage
permet de compter tous les ensembles maximum.
"""

from adiabatic_mis.graphs.models import Graph, MisResult


def _clique_cover_bound(adj: tuple[int, ...], candidates: int) -> int:
    """Nombre de cliques d'une partition gloutonne des candidats."""
    bound = 0
    rest = candidates
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        clique_room = adj[v] & rest
        rest ^= low
        # Étend la clique avec des sommets adjacents à tous ses membres.
        while clique_room:
            low_u = clique_room & -clique_room
            u = low_u.bit_length() - 1
            rest ^= low_u
            clique_room &= adj[u]
        bound += 1
    return bound


def exact_mis(graph: Graph) -> MisResult:
    """Calcule α(G), un témoin et le nombre d'ensembles maximum.

    Args:
        graph: Graphe à résoudre.

    Returns:
        MisResult exact.
    """
    adj = graph.adj
    best_size = -1
    best_witness = 0
    count = 0

    def branch(chosen: int, size: int, candidates: int) -> None:
        nonlocal best_size, best_witness, count
        # Sommets isolés parmi les candidats : inclusion forcée.
        rest = candidates
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if not adj[v] & candidates:
                chosen |= low
                size += 1
                candidates ^= low
            rest ^= low

        if not candidates:
            if size > best_size:
                best_size, best_witness, count = size, chosen, 1
            elif size == best_size:
                count += 1
            return

        if size + _clique_cover_bound(adj, candidates) < best_size:
            return

        pivot, pivot_degree = -1, -1
        rest = candidates
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            degree = (adj[v] & candidates).bit_count()
            if degree > pivot_degree:
                pivot, pivot_degree = v, degree
            rest ^= low

        bit = 1 << pivot
        branch(chosen | bit, size + 1, candidates & ~bit & ~adj[pivot])
        branch(chosen, size, candidates & ~bit)

    branch(0, 0, (1 << graph.n) - 1)
    return MisResult(alpha=best_size, witness=best_witness, count_max=count)
