"""Logger composite diffusant chaque message à plusieurs loggers."""

from collections.abc import Sequence

from adiabatic_mis.logging.base import Logger


class TeeLogger(Logger):
    """Diffuse chaque message à tous les loggers fournis.

    Sert à la CLI pour écrire à la fois sur la console et dans le
    fichier ``--log-file``.
    """

    def __init__(self, loggers: Sequence[Logger]) -> None:
        """Initialise le logger composite.

        Args:
            loggers: Loggers destinataires, dans l'ordre d'appel.
        """
        self._loggers = list(loggers)

    def log_debug(self, message: str) -> None:
        """Diffuse un message de diagnostic."""
        for logger in self._loggers:
            logger.log_debug(message)

    def log_info(self, message: str) -> None:
        """Diffuse un message d'information."""
        for logger in self._loggers:
            logger.log_info(message)

    def log_warning(self, message: str) -> None:
        """Diffuse un avertissement."""
        for logger in self._loggers:
            logger.log_warning(message)

    def log_error(self, message: str) -> None:
        """Diffuse une erreur."""
        for logger in self._loggers:
            logger.log_error(message)

    def log_success(self, message: str) -> None:
        """Diffuse un succès."""
        for logger in self._loggers:
            logger.log_success(message)
