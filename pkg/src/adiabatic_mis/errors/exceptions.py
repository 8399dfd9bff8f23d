"""
Exceptions communes du simulateur.

Chaque exception porte un ``code`` stable (lisible par machine) et un
``exit_code`` : 2 pour les erreurs d'usage (flags, fichiers de graphe),
1 pour les échecs de calcul.
"""


class SimulatorError(Exception):
    """Exception de base pour toutes les erreurs du simulateur."""

    code = "simulator-error"
    exit_code = 1


class UsageError(SimulatorError):
    """Erreur imputable aux entrées fournies par l'utilisateur."""

    code = "usage-error"
    exit_code = 2


class ConfigurationError(UsageError):
    """Exception levée lors d'une erreur de configuration."""

    code = "configuration-error"


class GraphFormatError(UsageError):
    """Exception levée quand un fichier de graphe est mal formé.

    Attributes:
        line_number: Numéro de ligne fautive (1-indexé) ou None.
    """

    code = "graph-format-error"

    def __init__(self, message: str, line_number: int | None = None) -> None:
        """Initialise l'erreur de format.

        Args:
            message: Description du problème.
            line_number: Ligne du fichier concernée, si connue.
        """
        self.line_number = line_number
        if line_number is not None:
            message = f"ligne {line_number} : {message}"
        super().__init__(message)


class GraphRangeError(UsageError):
    """Exception levée quand un paramètre de graphe sort de son domaine."""

    code = "graph-range-error"


class ComputationError(SimulatorError):
    """Échec d'un calcul numérique."""

    code = "computation-error"


class BasisCapExceededError(ComputationError):
    """Le nombre d'ensembles indépendants dépasse le plafond configuré.

    Attributes:
        cap: Plafond configuré.
        found: Nombre d'ensembles trouvés au moment de l'arrêt.
    """

    code = "basis-cap-exceeded"

    def __init__(self, cap: int, found: int) -> None:
        """Initialise l'erreur de plafond.

        Args:
            cap: Plafond configuré.
            found: Nombre d'états énumérés avant l'arrêt.
        """
        self.cap = cap
        self.found = found
        super().__init__(
            f"Base trop grande : plus de {cap} ensembles indépendants "
            f"({found} trouvés avant l'arrêt)"
        )


class NormDriftError(ComputationError):
    """La norme de l'état a dérivé au-delà de la tolérance.

    Attributes:
        drift: Écart |1 - ‖ψ‖| observé.
        tolerance: Tolérance autorisée.
    """

    code = "norm-drift"

    def __init__(self, drift: float, tolerance: float) -> None:
        """Initialise l'erreur de dérive.

        Args:
            drift: Écart observé.
            tolerance: Tolérance autorisée.
        """
        self.drift = drift
        self.tolerance = tolerance
        super().__init__(
            f"Dérive de norme {drift:.3e} > tolérance {tolerance:.1e} "
            "(pas d'intégration trop grossier)"
        )


class KrylovBreakdownError(ComputationError):
    """Le sous-espace de Krylov n'a pas convergé."""

    code = "krylov-breakdown"


class EigensolverError(ComputationError):
    """Le solveur de valeurs propres n'a pas convergé."""

    code = "eigensolver-error"


class ValidationScaleError(ComputationError):
    """Instance trop grande pour une routine de validation dense."""

    code = "validation-scale"


class ValidationCheckError(ComputationError):
    """Un invariant vérifié par ``validate`` n'est pas satisfait.

    Attributes:
        invariant: Nom de l'invariant en échec.
    """

    code = "validation-failed"

    def __init__(self, invariant: str, detail: str = "") -> None:
        """Initialise l'erreur de validation.

        Args:
            invariant: Nom de l'invariant en échec.
            detail: Précision optionnelle.
        """
        self.invariant = invariant
        message = f"Invariant en échec : {invariant}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


def exit_code_for(error: BaseException) -> int:
    """Retourne le code de sortie associé à une exception.

    Args:
        error: Exception à traduire.

    Returns:
        ``error.exit_code`` pour une SimulatorError, 1 sinon.
    """
    if isinstance(error, SimulatorError):
        return error.exit_code
    return 1
