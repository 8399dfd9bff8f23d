"""Chargement des fichiers de configuration (TOML, JSON, clé=valeur)."""

import json
import tomllib
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Callable

from pydantic import BaseModel, ValidationError

from adiabatic_mis.errors.exceptions import ConfigurationError


def _load_toml(path: Path) -> dict[str, Any]:
    with open(path, "rb") as f:
        return tomllib.load(f)


def _load_json(path: Path) -> dict[str, Any]:
    with open(path, "r", encoding="utf-8") as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise ConfigurationError(f"{path} : objet JSON attendu")
    return data


def _parse_scalar(token: str) -> Any:
    """Convertit un jeton texte en bool, int, float ou str."""
    lowered = token.lower()
    if lowered in ("true", "yes", "on"):
        return True
    if lowered in ("false", "no", "off"):
        return False
    for kind in (int, float):
        try:
            return kind(token)
        except ValueError:
            continue
    return token


def _parse_value(raw: str) -> Any:
    """Valeur clé=valeur : chaîne entre guillemets, liste de nombres
    séparés par des espaces, ou scalaire."""
    value = raw.strip()
    if len(value) >= 2 and value[0] == value[-1] and value[0] in "\"'":
        return value[1:-1]
    tokens = value.split()
    if len(tokens) > 1:
        parsed = [_parse_scalar(token) for token in tokens]
        if all(isinstance(item, (int, float)) for item in parsed):
            return parsed
    return _parse_scalar(value)


def parse_key_value(text: str, source: str = "<texte>") -> dict[str, Any]:
    """Analyse un fichier ``clé = valeur``.

    Les lignes vides et les commentaires ``#`` sont ignorés ; une clé
    pointée (``schedule.gamma = 1``) crée la section correspondante.

    Args:
        text: Contenu du fichier.
        source: Nom de la source pour les messages d'erreur.

    Returns:
        Dictionnaire imbriqué.

    Raises:
        ConfigurationError: Pour une ligne sans ``=``.
    """
    result: dict[str, Any] = {}
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigurationError(
                f"{source}, ligne {number} : « clé = valeur » attendu"
            )
        key, raw = stripped.split("=", 1)
        parts = [part.strip() for part in key.strip().split(".")]
        if not all(parts):
            raise ConfigurationError(
                f"{source}, ligne {number} : clé invalide {key.strip()!r}"
            )
        section = result
        for part in parts[:-1]:
            section = section.setdefault(part, {})
            if not isinstance(section, dict):
                raise ConfigurationError(
                    f"{source}, ligne {number} : {part!r} n'est pas "
                    "une section"
                )
        section[parts[-1].replace("-", "_")] = _parse_value(raw)
    return result


def _load_key_value(path: Path) -> dict[str, Any]:
    return parse_key_value(path.read_text(encoding="utf-8"), str(path))


_LOADERS: dict[str, Callable[[Path], dict[str, Any]]] = {
    ".toml": _load_toml,
    ".json": _load_json,
}


class ConfigLoader(ABC):
    """Interface abstraite de chargement de configuration."""

    @abstractmethod
    def load(
        self, config_path: str | Path, schema: type[BaseModel] | None = None
    ) -> dict[str, Any] | BaseModel:
        """Charge un fichier de configuration.

        Args:
            config_path: Chemin du fichier.
            schema: Modèle pydantic optionnel de validation.

        Returns:
            Dictionnaire brut, ou instance du modèle.
        """
        ...  # pragma: no cover


class FileConfigLoader(ConfigLoader):
    """Chargeur de fichiers, format détecté par l'extension.

    ``.toml`` et ``.json`` sont lus avec les bibliothèques standard ;
    toute autre extension est lue comme un fichier ``clé = valeur``.
    """

    def load(
        self, config_path: str | Path, schema: type[BaseModel] | None = None
    ) -> dict[str, Any] | BaseModel:
        """Charge et valide éventuellement un fichier.

        Raises:
            ConfigurationError: Fichier absent, illisible ou invalide.
        """
        path = Path(config_path)
        if not path.is_file():
            raise ConfigurationError(
                f"Fichier de configuration non trouvé : {path}"
            )
        loader_fn = _LOADERS.get(path.suffix.lower(), _load_key_value)
        try:
            raw_config = loader_fn(path)
        except (OSError, UnicodeDecodeError, ValueError) as exc:
            raise ConfigurationError(
                f"Lecture impossible de {path} : {exc}"
            ) from exc
        if schema is None:
            return raw_config
        try:
            return schema.model_validate(raw_config)
        except ValidationError as exc:
            raise ConfigurationError(f"{path} : {exc}") from exc
