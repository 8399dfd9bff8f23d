"""Répertoire de configuration utilisateur de l'application."""

from pathlib import Path

from platformdirs import user_config_path

DEFAULTS_FILENAME = "defaults.toml"


class AppConfigDir:
    """Localise les fichiers de configuration utilisateur.

    Example:
        >>> AppConfigDir("adiabatic-mis").config_dir
        PosixPath('/home/user/.config/adiabatic-mis')
    """

    def __init__(self, app_name: str = "adiabatic-mis") -> None:
        """Initialise pour une application.

        Args:
            app_name: Nom de l'application en kebab-case.
        """
        self._app_name = app_name

    @property
    def config_dir(self) -> Path:
        """Répertoire de configuration utilisateur (non créé)."""
        return user_config_path(self._app_name)

    def find_defaults_file(
        self, filename: str = DEFAULTS_FILENAME
    ) -> Path | None:
        """Retourne le fichier de défauts s'il existe, sinon None."""
        candidate = self.config_dir / filename
        return candidate if candidate.is_file() else None
