"""Répertoire de sortie d'une sous-commande et son manifeste.

Chaque fichier est préfixé par le nom de la sous-commande ; le
manifeste ``<sous-commande>_manifest.json`` liste chaque fichier avec
son empreinte SHA-256, les versions logicielles, les graines et l'écho
complet de la configuration. Il ne contient aucun horodatage.
"""

import platform
from importlib.metadata import PackageNotFoundError, version
from pathlib import Path
from typing import Any

from adiabatic_mis.errors.exceptions import SimulatorError
from adiabatic_mis.logging.base import Logger, NullLogger
from adiabatic_mis.reporting.checksum import (
    ChecksumCalculator,
    HashLibChecksumCalculator,
)
from adiabatic_mis.reporting.formats import render_json

MANIFEST_SUFFIX = "manifest.json"


class OutputWriteError(SimulatorError):
    """Écriture impossible dans le répertoire de sortie."""

    code = "output-error"


def software_versions() -> dict[str, str]:
    """Versions de Python et des bibliothèques de calcul."""
    versions = {"python": platform.python_version()}
    for package in ("adiabatic-mis", "numpy", "scipy", "pydantic"):
        try:
            versions[package] = version(package)
        except PackageNotFoundError:
            versions[package] = "inconnue"
    return versions


class OutputDirectory:
    """Écrit les fichiers d'une sous-commande et les recense.

    Example:
        >>> outputs = OutputDirectory(Path("runs"), "gap-scan")
        >>> outputs.write_text("curve.csv", "theta,gap\\n")
        PosixPath('runs/gap-scan_curve.csv')
    """

    def __init__(
        self,
        root: Path,
        prefix: str,
        calculator: ChecksumCalculator | None = None,
        logger: Logger | None = None,
    ) -> None:
        """Initialise le répertoire (créé à la première écriture).

        Args:
            root: Répertoire de sortie.
            prefix: Préfixe des noms de fichiers (sous-commande).
            calculator: Calculateur d'empreinte injectable.
            logger: Logger optionnel.
        """
        self.root = root
        self.prefix = prefix
        self._calculator = calculator or HashLibChecksumCalculator()
        self._logger = logger or NullLogger()
        self._written: list[Path] = []

    @property
    def written(self) -> list[Path]:
        """Fichiers écrits, dans l'ordre."""
        return list(self._written)

    def path_for(self, name: str) -> Path:
        """Chemin préfixé d'un fichier de sortie."""
        return self.root / f"{self.prefix}_{name}"

    def write_text(self, name: str, content: str) -> Path:
        """Écrit un fichier texte UTF-8 à fins de ligne ``\\n``.

        Raises:
            OutputWriteError: En cas d'erreur d'E/S.
        """
        target = self.path_for(name)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            target.write_text(content, encoding="utf-8", newline="\n")
        except OSError as exc:
            raise OutputWriteError(
                f"Écriture impossible de {target} : {exc}"
            ) from exc
        self._written.append(target)
        self._logger.log_info(f"Écrit : {target}")
        return target

    def write_manifest(
        self, config: dict[str, Any], seeds: dict[str, Any]
    ) -> Path:
        """Écrit le manifeste des fichiers déjà produits.

        Args:
            config: Écho complet de la configuration.
            seeds: Graines utilisées.

        Returns:
            Chemin du manifeste.
        """
        files = [
            {
                "name": path.name,
                "sha256": self._calculator.calculate(path),
                "bytes": path.stat().st_size,
            }
            for path in self._written
        ]
        payload = {
            "tool": "adiabatic-mis",
            "subcommand": self.prefix,
            "versions": software_versions(),
            "seeds": seeds,
            "config": config,
            "files": files,
        }
        return self.write_text(MANIFEST_SUFFIX, render_json(payload))
