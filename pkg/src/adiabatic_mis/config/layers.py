"""Fusion des couches de configuration.

Priorité décroissante : options de ligne de commande, fichier
``--config``, fichier de défauts utilisateur, valeurs du modèle.
"""

from pathlib import Path
from typing import Any

from pydantic import ValidationError

from adiabatic_mis.config.loader import ConfigLoader, FileConfigLoader
from adiabatic_mis.config.schema import RunConfig
from adiabatic_mis.errors.exceptions import ConfigurationError


def deep_merge(
    base: dict[str, Any], override: dict[str, Any]
) -> dict[str, Any]:
    """Fusionne récursivement deux dictionnaires (override gagne)."""
    result = base.copy()
    for key, value in override.items():
        if (
            key in result
            and isinstance(result[key], dict)
            and isinstance(value, dict)
        ):
            result[key] = deep_merge(result[key], value)
        else:
            result[key] = value
    return result


def _graph_section_is_set(layer: dict[str, Any]) -> bool:
    graph = layer.get("graph")
    return isinstance(graph, dict) and any(
        key != "seed" for key in graph
    )


def merge_layers(
    defaults_file: str | Path | None,
    config_file: str | Path | None,
    cli_flags: dict[str, Any],
    loader: ConfigLoader | None = None,
) -> RunConfig:
    """Construit la RunConfig à partir des trois couches.

    Une source de graphe donnée par une couche supérieure remplace
    celle des couches inférieures au lieu de s'y ajouter.

    Args:
        defaults_file: Fichier de défauts utilisateur, ou None.
        config_file: Fichier ``--config``, ou None.
        cli_flags: Options de ligne de commande, déjà imbriquées.
        loader: Chargeur injectable.

    Returns:
        Configuration validée.

    Raises:
        ConfigurationError: Fichier invalide ou configuration incohérente.
    """
    file_loader = loader or FileConfigLoader()
    layers: list[dict[str, Any]] = []
    for path in (defaults_file, config_file):
        if path is not None:
            raw = file_loader.load(path)
            if not isinstance(raw, dict):
                raise ConfigurationError(f"{path} : dictionnaire attendu")
            layers.append(raw)
    layers.append(cli_flags)

    merged: dict[str, Any] = {}
    for layer in layers:
        if _graph_section_is_set(layer) and isinstance(
            merged.get("graph"), dict
        ):
            seed = merged["graph"].get("seed")
            merged["graph"] = {} if seed is None else {"seed": seed}
        merged = deep_merge(merged, layer)
    try:
        return RunConfig.model_validate(merged)
    except ValidationError as exc:
        raise ConfigurationError(str(exc)) from exc
