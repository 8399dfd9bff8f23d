"""Générateur pseudo-aléatoire documenté et reproductible.

Le flux est défini octet pour octet afin qu'une autre implémentation
puisse regénérer les mêmes graphes :

- graine : quatre sorties successives de splitmix64 initialisé avec la
  graine utilisateur (entier 64 bits) remplissent l'état de
  xoshiro256** ;
- ``next_u64`` : sortie xoshiro256** (Blackman & Vigna) ;
- ``next_float`` : ``(next_u64() >> 11) * 2**-53``, dans [0, 1) ;
- ``next_below(k)`` : tirage par rejet, on retire ``x = next_u64()``
  jusqu'à ``x < 2**64 - (2**64 % k)`` puis on renvoie ``x % k``.
"""

import math

MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    """Fonction de mélange finale de splitmix64."""
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class SplitMix64:
    """Générateur splitmix64 (utilisé pour l'amorçage)."""

    def __init__(self, seed: int) -> None:
        """Initialise l'état avec une graine 64 bits.

        Args:
            seed: Graine (réduite modulo 2**64).
        """
        self._state = seed & MASK64

    def next_u64(self) -> int:
        """Retourne la sortie 64 bits suivante."""
        self._state = (self._state + _GOLDEN_GAMMA) & MASK64
        return _mix64(self._state)


class Xoshiro256StarStar:
    """Générateur xoshiro256** amorcé par splitmix64.

    Example:
        >>> rng = Xoshiro256StarStar(42)
        >>> 0.0 <= rng.next_float() < 1.0
        True
    """

    def __init__(self, seed: int) -> None:
        """Initialise les quatre mots d'état depuis splitmix64(seed).

        Args:
            seed: Graine 64 bits.
        """
        seeder = SplitMix64(seed)
        self._s = [seeder.next_u64() for _ in range(4)]

    def next_u64(self) -> int:
        """Retourne la sortie 64 bits suivante."""
        s = self._s
        result = (_rotl((s[1] * 5) & MASK64, 7) * 9) & MASK64
        t = (s[1] << 17) & MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def next_float(self) -> float:
        """Retourne un flottant uniforme dans [0, 1) (53 bits)."""
        return (self.next_u64() >> 11) * 2.0**-53

    def next_below(self, k: int) -> int:
        """Retourne un entier uniforme dans [0, k) sans biais.

        Args:
            k: Borne exclusive (k ≥ 1).

        Raises:
            ValueError: Si k < 1.
        """
        if k < 1:
            raise ValueError(f"borne invalide : {k}")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k


def split_seed(master_seed: int, index: int) -> int:
    """Dérive la graine du membre ``index`` d'un ensemble.

    C'est la (index+1)-ième sortie du flux splitmix64 amorcé avec
    ``master_seed`` ; elle ne dépend ni de l'ordre d'exécution ni du
    nombre de workers.

    Args:
        master_seed: Graine maîtresse 64 bits.
        index: Rang du membre (≥ 0).

    Returns:
        Graine 64 bits du membre.
    """
    if index < 0:
        raise ValueError(f"index négatif : {index}")
    state = (master_seed + (index + 1) * _GOLDEN_GAMMA) & MASK64
    return _mix64(state)


def sparse_alpha_estimate(n: int, d: float) -> float | None:
    """Estimation asymptotique α ≈ 2n·ln(d)/d des graphes creux.

    Args:
        n: Nombre de sommets.
        d: Degré moyen 2m/n.

    Returns:
        Estimation, ou None si d ≤ 1 (formule hors domaine).
    """
    if d <= 1.0:
        return None
    return 2.0 * n * math.log(d) / d


def dense_alpha_estimate(n: int, p: float = 0.5) -> float | None:
    """Estimation α(G(n, p)) ≈ 2·log_b(n), b = 1/(1 − p), des graphes
    denses ; vaut 2·log2(n) pour p = 1/2.

    Args:
        n: Nombre de sommets.
        p: Probabilité d'arête.

    Returns:
        Estimation, ou None si n < 2 ou p hors de ]0, 1[.
    """
    if n < 2 or not 0.0 < p < 1.0:
        return None
    return 2.0 * math.log(n) / math.log(1.0 / (1.0 - p))
