"""Formats texte partagés des sorties (CSV, JSON).

Les flottants sont écrits avec ``repr`` (plus courte représentation
relue à l'identique) : deux exécutions identiques produisent des
fichiers identiques octet pour octet.
"""

import csv
import io
import json
from collections.abc import Iterable, Sequence
from typing import Any


def format_float(value: float) -> str:
    """Représentation exacte et stable d'un flottant."""
    return repr(float(value))


def format_cell(value: Any) -> str:
    """Convertit une valeur de cellule CSV en texte."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def render_csv(
    header: Sequence[str], rows: Iterable[Sequence[Any]]
) -> str:
    """Produit un CSV à fins de ligne ``\\n``.

    Args:
        header: Noms de colonnes.
        rows: Lignes de valeurs (None donne une cellule vide).

    Returns:
        Contenu CSV.
    """
    output = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(value) for value in row])
    return output.getvalue()


def render_json(payload: Any) -> str:
    """Sérialise en JSON indenté, clés triées, saut de ligne final."""
    text = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
    return text + "\n"
