"""Rapport de validation.

Typical usage example:

    report = validate_graph(spider(3))
    print(report.format_summary())
    report.raise_for_failures()
"""

from dataclasses import dataclass, field
from typing import Any

from adiabatic_mis.errors.exceptions import ValidationCheckError
from adiabatic_mis.validation.base import CheckOutcome


@dataclass
class ValidationReport:
    """Résultats ordonnés des vérifications d'une instance.

    Attributes:
        outcomes: Résultats dans l'ordre d'exécution.
        context: Informations sur l'instance (n, m, dimension…).

    Example:
        >>> report = ValidationReport([CheckOutcome("h0-gap", True)])
        >>> report.passed
        True
    """

    outcomes: list[CheckOutcome] = field(default_factory=list)
    context: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        """True si toutes les vérifications ont réussi."""
        return all(outcome.passed for outcome in self.outcomes)

    @property
    def failures(self) -> list[CheckOutcome]:
        """Vérifications en échec."""
        return [outcome for outcome in self.outcomes if not outcome.passed]

    def format_summary(self) -> str:
        """Résumé multiligne, une ligne ✓/✗ par vérification."""
        status = "✓ Succès" if self.passed else "✗ Échec"
        lines = [status]
        if self.context:
            pairs = (f"{key}={value}" for key, value in self.context.items())
            lines.append("  " + ", ".join(pairs))
        for outcome in self.outcomes:
            mark = "✓" if outcome.passed else "✗"
            lines.append(f"    {mark} {outcome.name}  ({outcome.detail})")
        return "\n".join(lines)

    def to_dict(self) -> dict[str, Any]:
        """Représentation JSON du rapport."""
        return {
            "passed": self.passed,
            "context": dict(self.context),
            "checks": [
                {
                    "name": outcome.name,
                    "passed": outcome.passed,
                    "detail": outcome.detail,
                }
                for outcome in self.outcomes
            ],
        }

    def raise_for_failures(self) -> None:
        """Lève pour la première vérification en échec.

        Raises:
            ValidationCheckError: Nommant l'invariant en échec.
        """
        if self.failures:
            first = self.failures[0]
            raise ValidationCheckError(first.name, first.detail)
