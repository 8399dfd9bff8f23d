"""Interface en ligne de commande.

Classes:
    CliApplication: Orchestrateur CLI.
    CliCommand: Interface abstraite pour une sous-commande.
"""

from adiabatic_mis.cli.base import CliApplication, CliCommand
from adiabatic_mis.cli.commands import (
    AnnealCommand,
    EnsembleCommand,
    GapScanCommand,
    GenCommand,
    ValidateCommand,
    default_commands,
)
from adiabatic_mis.cli.main import main

__all__ = [
    "AnnealCommand",
    "CliApplication",
    "CliCommand",
    "default_commands",
    "EnsembleCommand",
    "GapScanCommand",
    "GenCommand",
    "main",
    "ValidateCommand",
]
