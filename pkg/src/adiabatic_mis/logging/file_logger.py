"""Logger fichier basé sur le module logging de la stdlib."""

# stdlib
import logging
from pathlib import Path
from typing import Any

# local
from adiabatic_mis.logging.base import Logger

_NIVEAUX = frozenset({"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"})

_DEFAULT_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"


class FileLogger(Logger):
    """Logger qui écrit les traces d'exécution dans un fichier.

    Caractéristiques :
    - Logger stdlib unique par fichier (pas de handlers en double)
    - Encodage UTF-8 explicite
    - Flush immédiat après chaque log
    - Pas de propagation vers le logger racine
    - Sortie console optionnelle (stderr)

    Attributes:
        log_file: Chemin du fichier de log.
        logger: Logger stdlib sous-jacent.
    """

    def __init__(
        self,
        log_file: str | Path,
        level: str = "INFO",
        fmt: str = _DEFAULT_FORMAT,
        console_output: bool = False,
    ) -> None:
        """Initialise le logger.

        Args:
            log_file: Chemin du fichier de log (str ou Path).
            level: Niveau de log (DEBUG, INFO, WARNING, ERROR, CRITICAL).
            fmt: Format des messages.
            console_output: Duplique les messages sur stderr.

        Raises:
            ValueError: Si le niveau est inconnu.
        """
        niveau = level.upper()
        if niveau not in _NIVEAUX:
            raise ValueError(f"Niveau de log invalide : {level!r}")

        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.log_file = str(path)

        self.logger = logging.getLogger(f"adiabatic_mis.{self.log_file}")
        self.logger.setLevel(getattr(logging, niveau))
        self.logger.propagate = False

        if not self.logger.handlers:
            formatter = logging.Formatter(fmt)
            file_handler = logging.FileHandler(
                self.log_file, mode="a", encoding="utf-8"
            )
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)
            if console_output:
                console_handler: logging.StreamHandler[Any] = (
                    logging.StreamHandler()
                )
                console_handler.setFormatter(formatter)
                self.logger.addHandler(console_handler)

    def _log(self, level: int, message: str) -> None:
        """Émet un log au niveau donné et force le flush."""
        self.logger.log(level, message)
        for handler in self.logger.handlers:
            handler.flush()

    def log_debug(self, message: str) -> None:
        """Log un message de diagnostic."""
        self._log(logging.DEBUG, message)

    def log_info(self, message: str) -> None:
        """Log un message d'information."""
        self._log(logging.INFO, message)

    def log_warning(self, message: str) -> None:
        """Log un avertissement."""
        self._log(logging.WARNING, message)

    def log_error(self, message: str) -> None:
        """Log une erreur."""
        self._log(logging.ERROR, message)

    def log_success(self, message: str) -> None:
        """Log un succès (niveau INFO avec préfixe SUCCESS)."""
        self._log(logging.INFO, f"SUCCESS: {message}")

    def close(self) -> None:
        """Ferme et détache les handlers du logger."""
        for handler in list(self.logger.handlers):
            handler.close()
            self.logger.removeHandler(handler)
