"""LoggerErrorHandler."""
from adiabatic_mis.errors.base import ErrorHandler
from adiabatic_mis.errors.exceptions import SimulatorError
from adiabatic_mis.logging.base import Logger


class LoggerErrorHandler(ErrorHandler):
    """Enregistre les erreurs via le Logger injecté."""

    def __init__(self, logger: Logger) -> None:
        """Initialise le handler avec un logger.

        Args:
            logger: Instance de Logger pour l'enregistrement des erreurs.
        """
        self._logger = logger

    def handle(self, error: Exception) -> None:
        """Log l'erreur avec son code machine.

        Args:
            error: L'exception à logger.
        """
        if isinstance(error, SimulatorError):
            self._logger.log_error(f"{error.code}: {error}")
        else:
            self._logger.log_error(
                f"Erreur inattendue: {type(error).__name__}: {error}"
            )
