"""Interface abstraite des vérifications numériques."""

from abc import ABC, abstractmethod
from dataclasses import dataclass


@dataclass(frozen=True)
class CheckOutcome:
    """Résultat d'une vérification.

    Attributes:
        name: Nom de l'invariant vérifié.
        passed: True si l'invariant est satisfait.
        detail: Valeurs observées, lisibles par un humain.
    """

    name: str
    passed: bool
    detail: str = ""


class Check(ABC):
    """Contrat commun de toutes les vérifications de ``validate``."""

    name: str = "check"

    @abstractmethod
    def run(self) -> CheckOutcome:
        """Exécute la vérification.

        Returns:
            CheckOutcome ; une vérification ne lève pas pour un
            invariant violé, elle le signale dans le résultat.
        """
        ...
