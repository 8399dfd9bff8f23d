"""Handlers d'erreurs et chaîne de diffusion utilisée par la CLI.

La chaîne traduit aussi l'erreur en code de sortie : 2 pour une erreur
d'usage (``UsageError``), 1 pour un échec de calcul ou une exception
inattendue.
"""

import sys
from abc import ABC, abstractmethod
from collections.abc import Iterable

from adiabatic_mis.errors.exceptions import exit_code_for


class ErrorHandler(ABC):
    """Stratégie de signalement d'une erreur (console, fichier de log)."""

    @abstractmethod
    def handle(self, error: Exception) -> None:
        """Signale ``error``."""
        ...


class ErrorHandlerChain:
    """Transmet une erreur à chaque handler puis rend son code de sortie.

    Example:
        >>> chain = ErrorHandlerChain([ConsoleErrorHandler()])
        >>> chain.handle(GraphRangeError("n = 0"))
        2
    """

    def __init__(self, handlers: Iterable[ErrorHandler] = ()) -> None:
        self._handlers: list[ErrorHandler] = list(handlers)

    @property
    def handlers(self) -> tuple[ErrorHandler, ...]:
        """Handlers dans l'ordre de diffusion."""
        return tuple(self._handlers)

    def add_handler(self, handler: ErrorHandler) -> None:
        """Ajoute un handler en fin de chaîne."""
        self._handlers.append(handler)

    def handle(self, error: Exception) -> int:
        """Diffuse l'erreur et retourne le code de sortie du processus.

        Un handler qui lève est signalé sur stderr sans interrompre les
        suivants ni changer le code de sortie.

        Args:
            error: Exception remontée par une sous-commande.

        Returns:
            Code de sortie de ``error`` (1 ou 2).
        """
        for handler in self._handlers:
            try:
                handler.handle(error)
            except Exception as handler_exc:
                sys.stderr.write(
                    f"[ErrorHandlerChain] {type(handler).__name__}"
                    f" a échoué : {handler_exc}\n"
                )
        return exit_code_for(error)
