"""ConsoleErrorHandler : affichage des erreurs avec piste de solution."""

import sys

from adiabatic_mis.errors.base import ErrorHandler
from adiabatic_mis.errors.exceptions import (
    BasisCapExceededError,
    ConfigurationError,
    EigensolverError,
    GraphFormatError,
    GraphRangeError,
    KrylovBreakdownError,
    NormDriftError,
    SimulatorError,
    ValidationScaleError,
)

_SOLUTIONS_PAR_DEFAUT: dict[type[Exception], str] = {
    GraphFormatError: (
        "Solution : première ligne « n m », puis m lignes « u v » "
        "avec 0 ≤ u < v < n, sans doublon."
    ),
    GraphRangeError: (
        "Solution : 1 ≤ n ≤ 64, 0 ≤ p ≤ 1, m ≤ n(n-1)/2."
    ),
    ConfigurationError: (
        "Solution : vérifiez les flags et le fichier --config."
    ),
    BasisCapExceededError: (
        "Solution : réduisez n ou augmentez le plafond de base."
    ),
    NormDriftError: "Solution : augmentez --steps.",
    KrylovBreakdownError: "Solution : augmentez --steps ou réduisez n.",
    EigensolverError: "Solution : réduisez --grid ou la taille du graphe.",
    ValidationScaleError: (
        "Solution : validez un graphe plus petit (n ≤ 12)."
    ),
}


class ConsoleErrorHandler(ErrorHandler):
    """Handler affichant les erreurs sur stderr.

    Les erreurs connues (SimulatorError) sont affichées avec leur code
    et une piste de solution choisie par isinstance dans le
    dictionnaire injecté ; les autres sont signalées comme bugs.
    """

    def __init__(
        self,
        solutions: dict[type[Exception], str] | None = None,
    ) -> None:
        """Initialise le handler console.

        Args:
            solutions: Dictionnaire {TypeException: "piste de solution"}.
                Si None, les solutions par défaut sont utilisées.
        """
        self.solutions = (
            solutions if solutions is not None else dict(_SOLUTIONS_PAR_DEFAUT)
        )

    def handle(self, error: Exception) -> None:
        """Affiche l'erreur dans la console.

        Args:
            error: L'exception à afficher.
        """
        if isinstance(error, SimulatorError):
            print(f"[{error.code}] {error}", file=sys.stderr)
            solution = next(
                (
                    msg
                    for exc_type, msg in self.solutions.items()
                    if isinstance(error, exc_type)
                ),
                None,
            )
            if solution:
                print(solution, file=sys.stderr)
        else:
            print(
                f"Erreur inattendue ({type(error).__name__}) : {error}",
                file=sys.stderr,
            )
