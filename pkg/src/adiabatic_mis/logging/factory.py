"""Factory de création de Logger depuis la configuration."""

from typing import Any

from adiabatic_mis.errors.exceptions import ConfigurationError
from adiabatic_mis.logging.base import Logger, NullLogger
from adiabatic_mis.logging.console_logger import ConsoleLogger
from adiabatic_mis.logging.file_logger import FileLogger
from adiabatic_mis.logging.tee_logger import TeeLogger

_TYPES_VALIDES = frozenset({"console", "file", "null"})


def build_logger(config: dict[str, Any] | None = None) -> Logger:
    """Instancie le Logger correspondant à la section ``[logging]``.

    Args:
        config: Section ``[logging]`` sous forme de dict (ou None pour
            les valeurs par défaut). Clés reconnues :

            - ``type`` : ``"console"`` | ``"file"`` | ``"null"``
              (défaut : ``"console"``)
            - ``file`` : chemin du fichier, obligatoire pour ``"file"``
            - ``level`` : niveau de log fichier (défaut : ``"INFO"``)
            - ``verbosity`` : 0, 1 ou 2 pour la console (défaut : 1)
            - ``colored`` : couleur console (défaut : auto)
            - ``console_output`` : pour ``"file"``, ajoute aussi un
              ConsoleLogger (défaut : ``False``)

    Returns:
        Instance de ``Logger`` configurée.

    Raises:
        ConfigurationError: Si ``type`` est inconnu ou si ``file``
            manque pour le type ``"file"``.

    Exemple TOML ::

        [logging]
        type = "file"
        file = "runs/ensemble.log"
        level = "DEBUG"
        console_output = true
    """
    cfg: dict[str, Any] = config or {}

    logger_type = cfg.get("type", "console")
    if logger_type not in _TYPES_VALIDES:
        raise ConfigurationError(
            f"Type de logger inconnu : {logger_type!r}. "
            f"Valeurs acceptées : {sorted(_TYPES_VALIDES)}"
        )

    if logger_type == "null":
        return NullLogger()

    console = ConsoleLogger(
        verbosity=int(cfg.get("verbosity", 1)),
        colored=cfg.get("colored"),
    )
    if logger_type == "console":
        return console

    log_file = cfg.get("file")
    if not log_file:
        raise ConfigurationError(
            "La clé 'file' est obligatoire pour le type 'file'."
        )
    try:
        file_logger = FileLogger(log_file, level=cfg.get("level", "INFO"))
    except ValueError as exc:
        raise ConfigurationError(str(exc)) from exc

    if cfg.get("console_output", False):
        return TeeLogger([console, file_logger])
    return file_logger
