"""Lecture et écriture du format texte des graphes.

Format : ligne 1 « n m », puis m lignes « u v » (sommets 0-indexés,
u < v). À l'écriture les arêtes sont triées lexicographiquement ; le
fichier est en ASCII et se termine par un saut de ligne.
"""

from pathlib import Path

from adiabatic_mis.errors.exceptions import (
    GraphFormatError,
    GraphRangeError,
)
from adiabatic_mis.graphs.models import MAX_VERTICES, Graph


def _parse_pair(line: str, line_number: int) -> tuple[int, int]:
    fields = line.split()
    if len(fields) != 2:
        raise GraphFormatError(
            f"deux entiers attendus, reçu {line!r}", line_number
        )
    try:
        return int(fields[0]), int(fields[1])
    except ValueError as exc:
        raise GraphFormatError(
            f"entier invalide dans {line!r}", line_number
        ) from exc


def read_graph(text: str) -> Graph:
    """Analyse un graphe au format texte.

    Les lignes vides sont ignorées ; les arêtes peuvent être données
    dans n'importe quel ordre et orientation.

    Args:
        text: Contenu du fichier.

    Returns:
        Graphe canonisé.

    Raises:
        GraphFormatError: En-tête mal formé, nombre d'arêtes incohérent,
            boucle ou arête en double.
        GraphRangeError: Sommet hors de [0, n).
    """
    lines = [
        (number, line.strip())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip()
    ]
    if not lines:
        raise GraphFormatError("fichier vide : en-tête « n m » attendu", 1)
    header_line, header = lines[0]
    n, m = _parse_pair(header, header_line)
    if not 1 <= n <= MAX_VERTICES:
        raise GraphFormatError(
            f"n doit être dans [1, {MAX_VERTICES}], reçu {n}", header_line
        )
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(
            f"{m} arêtes annoncées, {len(body)} lues", header_line
        )

    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for line_number, line in body:
        u, v = _parse_pair(line, line_number)
        if u == v:
            raise GraphFormatError(f"boucle sur le sommet {u}", line_number)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphRangeError(
                f"ligne {line_number} : sommet hors de [0, {n}) "
                f"dans ({u}, {v})"
            )
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"arête en double {key}", line_number)
        seen.add(key)
        edges.append(key)
    return Graph(n, tuple(edges))


def write_graph(graph: Graph) -> str:
    """Sérialise un graphe au format texte canonique.

    Args:
        graph: Graphe à écrire.

    Returns:
        Texte « n m » suivi des arêtes triées.
    """
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def read_graph_file(path: str | Path) -> Graph:
    """Lit un graphe depuis un fichier.

    Args:
        path: Chemin du fichier.

    Returns:
        Graphe lu.

    Raises:
        GraphFormatError: Si le fichier est illisible ou mal formé.
    """
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise GraphFormatError(
            f"lecture impossible de {path} : {exc}"
        ) from exc
    return read_graph(text)


def write_graph_file(graph: Graph, path: str | Path) -> Path:
    """Écrit un graphe dans un fichier (répertoire parent créé).

    Args:
        graph: Graphe à écrire.
        path: Chemin de destination.

    Returns:
        Chemin écrit.
    """
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(write_graph(graph), encoding="ascii", newline="\n")
    return target
