"""Framework CLI basé sur le Command Pattern.

Chaque sous-commande déclare ses options argparse ; l'application
fusionne ensuite les couches de configuration (défauts utilisateur,
fichier ``--config``, options) en une RunConfig validée avant tout
calcul, puis dispatche et traduit les erreurs en codes de sortie.
"""

# stdlib
import argparse
from abc import ABC, abstractmethod
from collections.abc import Sequence
# Any est inévitable : argparse._SubParsersAction est une API privée stdlib
from typing import Any

# local
from adiabatic_mis.cli.arguments import add_common_arguments, flags_to_layer
from adiabatic_mis.config.app_dir import AppConfigDir
from adiabatic_mis.config.layers import merge_layers
from adiabatic_mis.config.schema import RunConfig
from adiabatic_mis.errors.base import ErrorHandlerChain
from adiabatic_mis.errors.console_handler import ConsoleErrorHandler
from adiabatic_mis.errors.exceptions import SimulatorError
from adiabatic_mis.errors.logger_handler import LoggerErrorHandler
from adiabatic_mis.logging.base import Logger
from adiabatic_mis.logging.factory import build_logger

EXIT_OK = 0


class CliCommand(ABC):
    """Interface abstraite pour une sous-commande CLI.

    Chaque commande est responsable de :
    - Déclarer son nom (name)
    - Déclarer ses options dans argparse (register)
    - S'exécuter sur une configuration validée (execute)
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """Retourne le nom de la sous-commande (ex: 'gap-scan')."""
        ...

    @abstractmethod
    def register(self, subparsers: Any) -> argparse.ArgumentParser:
        """Enregistre la commande et ses options dans argparse.

        Args:
            subparsers: Objet retourné par ``add_subparsers()``.
                Typé ``Any`` car ``argparse._SubParsersAction`` est une API
                privée non exposée par la stdlib.

        Returns:
            Le sous-parser créé, pour y ajouter les options communes.
        """
        ...

    @abstractmethod
    def execute(self, config: RunConfig, logger: Logger) -> None:
        """Exécute la commande.

        Args:
            config: Configuration fusionnée et validée.
            logger: Logger construit depuis la section ``logging``.

        Raises:
            SimulatorError: Erreur d'usage (code 2) ou de calcul (code 1).
        """
        ...


class CliApplication:
    """Orchestrateur CLI basé sur le Command Pattern.

    Attributes:
        _prog: Nom du programme.
        _description: Description affichée dans --help.
        _commands: Commandes enregistrées.
        _config_dir: Localisation du fichier de défauts utilisateur.

    Example:
        >>> app = CliApplication(
        ...     prog="adiabatic-mis",
        ...     description="Recuit adiabatique du MIS",
        ...     commands=[GenCommand(), AnnealCommand()],
        ... )
        >>> app.run(["gen", "--spider", "2"])
        0
    """

    def __init__(
        self,
        prog: str,
        description: str,
        commands: list[CliCommand],
        config_dir: AppConfigDir | None = None,
        version: str | None = None,
    ) -> None:
        """Initialise l'application avec ses commandes.

        Args:
            prog: Nom du programme pour --help.
            description: Description courte pour --help.
            commands: Commandes disponibles.
            config_dir: Répertoire de configuration utilisateur.
            version: Version affichée par --version.
        """
        self._prog = prog
        self._description = description
        self._commands = commands
        self._config_dir = config_dir or AppConfigDir(prog)
        self._version = version

    def build_parser(self) -> argparse.ArgumentParser:
        """Construit le parser complet (une entrée par commande)."""
        parser = argparse.ArgumentParser(
            prog=self._prog,
            description=self._description,
        )
        if self._version is not None:
            parser.add_argument(
                "--version",
                action="version",
                version=f"%(prog)s {self._version}",
            )
        subparsers = parser.add_subparsers(dest="command", required=True)
        for cmd in self._commands:
            add_common_arguments(cmd.register(subparsers))
        return parser

    def run(self, argv: Sequence[str] | None = None) -> int:
        """Parse les arguments, exécute la commande, retourne le code.

        Args:
            argv: Arguments sans le nom du programme (défaut : sys.argv).

        Returns:
            0 en cas de succès, 1 pour un échec de calcul, 2 pour une
            erreur d'usage ou de format.
        """
        command_map = {cmd.name: cmd for cmd in self._commands}
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else EXIT_OK

        chain = ErrorHandlerChain([ConsoleErrorHandler()])
        config_file = getattr(args, "config_file", None)
        try:
            config = merge_layers(
                self._config_dir.find_defaults_file(),
                config_file,
                flags_to_layer(args),
            )
            logger = build_logger(config.logging)
        except SimulatorError as exc:
            return chain.handle(exc)

        if config.logging.get("type") == "file":
            chain.add_handler(LoggerErrorHandler(logger))
        try:
            command_map[args.command].execute(config, logger)
        except Exception as exc:
            return chain.handle(exc)
        return EXIT_OK
