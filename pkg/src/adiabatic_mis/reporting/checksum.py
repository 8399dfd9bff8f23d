"""Empreintes des fichiers produits."""

import hashlib
from abc import ABC, abstractmethod
from pathlib import Path

_ALGOS_AUTORISES: frozenset[str] = frozenset(
    {"sha256", "sha384", "sha512", "blake2b"}
)


class ChecksumCalculator(ABC):
    """Interface abstraite de calcul d'empreinte."""

    @abstractmethod
    def calculate(
        self, file_path: str | Path, algorithm: str = "sha256"
    ) -> str:
        """Retourne l'empreinte hexadécimale d'un fichier."""
        ...


class HashLibChecksumCalculator(ChecksumCalculator):
    """Empreinte calculée par hashlib, par blocs de 64 Kio."""

    def calculate(
        self, file_path: str | Path, algorithm: str = "sha256"
    ) -> str:
        """Calcule l'empreinte d'un fichier.

        Raises:
            ValueError: Si l'algorithme n'est pas autorisé.
            FileNotFoundError: Si le fichier n'existe pas.
        """
        if algorithm not in _ALGOS_AUTORISES:
            raise ValueError(
                f"Algorithme non autorisé : {algorithm!r} "
                f"(autorisés : {', '.join(sorted(_ALGOS_AUTORISES))})"
            )
        hash_func = hashlib.new(algorithm)
        with open(file_path, "rb") as f:
            for chunk in iter(lambda: f.read(65536), b""):
                hash_func.update(chunk)
        return hash_func.hexdigest()
