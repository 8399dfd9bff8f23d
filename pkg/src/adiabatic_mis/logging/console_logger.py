"""Logger console sans effet de bord fichier.

Les messages d'information vont sur stdout, les avertissements et
erreurs sur stderr : les fichiers CSV écrits par la CLI ne sont jamais
mélangés aux logs.
"""

# stdlib
import sys
from enum import StrEnum

# local
from adiabatic_mis.logging.base import Logger

QUIET = 0
NORMAL = 1
DEBUG = 2


class AnsiColors(StrEnum):
    """Codes ANSI, un par niveau de message."""

    GREY = "\033[90m"
    BLUE = "\033[34m"
    ORANGE = "\033[33m"
    RED = "\033[31m"
    GREEN = "\033[32m"
    RESET = "\033[0m"


class ConsoleLogger(Logger):
    """Logger écrivant sur stdout/stderr.

    Attributes:
        verbosity: 0 (avertissements et erreurs seulement), 1 (normal)
            ou 2 (diagnostic).
        colored: Active les codes ANSI.

    Example:
        >>> logger = ConsoleLogger(verbosity=2)
        >>> logger.log_debug("pas de Krylov : 12 vecteurs")
    """

    def __init__(self, verbosity: int = NORMAL, colored: bool | None = None):
        """Initialise le logger console.

        Args:
            verbosity: Niveau de verbosité (0, 1 ou 2).
            colored: Force ou désactive la couleur ; None = couleur
                seulement si stdout est un terminal.
        """
        self.verbosity = verbosity
        self.colored = sys.stdout.isatty() if colored is None else colored

    def _paint(self, color: AnsiColors, text: str) -> str:
        if not self.colored:
            return text
        return f"{color}{text}{AnsiColors.RESET}"

    def log_debug(self, message: str) -> None:
        """Écrit un message de diagnostic si verbosity ≥ 2.

        Args:
            message: Message à afficher.
        """
        if self.verbosity >= DEBUG:
            print(self._paint(AnsiColors.GREY, f"DEBUG: {message}"))

    def log_info(self, message: str) -> None:
        """Écrit un message d'information si verbosity ≥ 1.

        Args:
            message: Message à afficher.
        """
        if self.verbosity >= NORMAL:
            print(self._paint(AnsiColors.BLUE, message))

    def log_warning(self, message: str) -> None:
        """Écrit un avertissement sur stderr.

        Args:
            message: Message à afficher.
        """
        print(
            self._paint(AnsiColors.ORANGE, f"WARNING: {message}"),
            file=sys.stderr,
        )

    def log_error(self, message: str) -> None:
        """Écrit une erreur sur stderr.

        Args:
            message: Message à afficher.
        """
        print(
            self._paint(AnsiColors.RED, f"ERROR: {message}"),
            file=sys.stderr,
        )

    def log_success(self, message: str) -> None:
        """Écrit un message de succès si verbosity ≥ 1.

        Args:
            message: Message à afficher.
        """
        if self.verbosity >= NORMAL:
            print(self._paint(AnsiColors.GREEN, message))
