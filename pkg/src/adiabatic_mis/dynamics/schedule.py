"""Calendrier de recuit θ = ω_θ·t, φ = ω_φ·t sur [0, T]."""

import math
from dataclasses import dataclass

MIN_DEFAULT_STEPS = 4000
STEPS_PER_TIME_UNIT = 50


def default_steps(total_time: float, n: int) -> int:
    """Nombre de pas par défaut : max(4000, ⌈50·T·max(1, n/10)⌉).

    Args:
        total_time: Durée totale T.
        n: Nombre de sommets du graphe.
    """
    scale = max(1.0, n / 10.0)
    return max(
        MIN_DEFAULT_STEPS, math.ceil(STEPS_PER_TIME_UNIT * total_time * scale)
    )


@dataclass(frozen=True)
class Schedule:
    """Paramètres du recuit adiabatique.

    En mode balayage, θ parcourt exactement [0, π] : ω_θ·T = π. En mode
    « θ fixe », θ reste constant et seule φ tourne (ω_θ = 0), ce qui
    donne un hamiltonien secondaire A(θ) indépendant du temps.

    Attributes:
        total_time: Durée totale T (> 0).
        omega_phi: Vitesse dφ/dt (> 0).
        omega_theta: Vitesse dθ/dt.
        steps: Nombre de pas d'intégration (≥ 2).
        gamma: Exposant tel que T = n^γ, si construit depuis un graphe.
        held_theta: Angle maintenu constant, ou None pour un balayage.
    """

    total_time: float
    omega_phi: float
    omega_theta: float
    steps: int
    gamma: float | None = None
    held_theta: float | None = None

    def __post_init__(self) -> None:
        """Valide les invariants du calendrier.

        Raises:
            ValueError: Si un invariant n'est pas respecté.
        """
        if self.total_time <= 0.0:
            raise ValueError(f"T doit être > 0, reçu {self.total_time}")
        if self.omega_phi <= 0.0:
            raise ValueError(
                f"omega_phi doit être > 0, reçu {self.omega_phi}"
            )
        if self.steps < 2:
            raise ValueError(f"steps doit être ≥ 2, reçu {self.steps}")
        if self.held_theta is None:
            sweep = self.omega_theta * self.total_time
            if not math.isclose(sweep, math.pi, rel_tol=1e-12):
                raise ValueError(
                    f"ω_θ·T doit valoir π, reçu {sweep}"
                )
        else:
            if not 0.0 <= self.held_theta <= math.pi:
                raise ValueError(
                    f"theta fixe hors de [0, π] : {self.held_theta}"
                )
            if self.omega_theta != 0.0:
                raise ValueError("omega_theta doit être nul à θ fixe")

    @classmethod
    def sweep(
        cls,
        total_time: float,
        omega_phi: float = 1.0,
        steps: int | None = None,
        n: int = 1,
        gamma: float | None = None,
    ) -> "Schedule":
        """Balayage θ : 0 → π en un temps T, ω_θ = π/T.

        Args:
            total_time: Durée T.
            omega_phi: Vitesse dφ/dt.
            steps: Pas d'intégration, règle par défaut si None.
            n: Nombre de sommets (pour la règle par défaut).
            gamma: Exposant à mémoriser, le cas échéant.
        """
        return cls(
            total_time=total_time,
            omega_phi=omega_phi,
            omega_theta=math.pi / total_time,
            steps=steps if steps is not None else default_steps(total_time, n),
            gamma=gamma,
        )

    @classmethod
    def for_graph(
        cls,
        n: int,
        gamma: float = 2.0,
        omega_phi: float = 1.0,
        steps: int | None = None,
    ) -> "Schedule":
        """Balayage avec T = n^γ.

        Example:
            >>> Schedule.for_graph(10, gamma=2.0).total_time
            100.0
        """
        return cls.sweep(
            float(n) ** gamma, omega_phi, steps=steps, n=n, gamma=gamma
        )

    @classmethod
    def fixed_theta(
        cls,
        theta: float,
        total_time: float,
        omega_phi: float = 1.0,
        steps: int | None = None,
        n: int = 1,
    ) -> "Schedule":
        """Évolution à θ constant (diffusion sur l'arbre des solutions)."""
        return cls(
            total_time=total_time,
            omega_phi=omega_phi,
            omega_theta=0.0,
            steps=steps if steps is not None else default_steps(total_time, n),
            held_theta=theta,
        )

    @property
    def step_size(self) -> float:
        """Pas de temps h = T/steps."""
        return self.total_time / self.steps

    def theta_at(self, t: float) -> float:
        """Angle θ(t)."""
        if self.held_theta is not None:
            return self.held_theta
        return self.omega_theta * t
