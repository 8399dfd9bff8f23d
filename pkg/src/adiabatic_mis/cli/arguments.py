"""Options argparse partagées et conversion en couche de configuration.

Chaque option porte un ``dest`` pointé (``"graph.gnp"``) reproduisant
les sections de la RunConfig ; les valeurs par défaut sont supprimées
pour que seules les options réellement passées écrasent les couches
inférieures.
"""

import argparse
from typing import Any

_SUPPRESS = argparse.SUPPRESS


def seed_value(text: str) -> int:
    """Graine 64 bits, en décimal ou en hexadécimal (``0x...``)."""
    try:
        value = int(text, 0)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"graine invalide : {text!r}"
        ) from exc
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError(
            f"graine hors de [0, 2^64) : {text}"
        )
    return value


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    """Options communes : configuration, journalisation, sorties."""
    parser.add_argument(
        "--config",
        dest="config_file",
        metavar="FILE",
        help="fichier de configuration (TOML, JSON ou clé=valeur)",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument(
        "-v",
        "--verbose",
        dest="logging.verbosity",
        action="store_const",
        const=2,
        default=_SUPPRESS,
        help="affiche les messages de débogage",
    )
    verbosity.add_argument(
        "-q",
        "--quiet",
        dest="logging.verbosity",
        action="store_const",
        const=0,
        default=_SUPPRESS,
        help="n'affiche que les avertissements et erreurs",
    )
    parser.add_argument(
        "--log-file",
        dest="log_file",
        metavar="FILE",
        default=_SUPPRESS,
        help="journal fichier en plus de la console",
    )
    parser.add_argument(
        "--out",
        dest="output.out",
        metavar="DIR",
        default=_SUPPRESS,
        help="répertoire de sortie (défaut : courant)",
    )
    parser.add_argument(
        "--format",
        dest="output.format",
        choices=["csv", "json"],
        default=_SUPPRESS,
        help="format des résultats tabulaires",
    )


def add_graph_arguments(
    parser: argparse.ArgumentParser, with_seed: bool = True
) -> None:
    """Sources de graphe (exactement une à la validation)."""
    parser.add_argument(
        "--gnp",
        dest="graph.gnp",
        nargs=2,
        metavar=("N", "P"),
        default=_SUPPRESS,
        help="graphe aléatoire G(n, p)",
    )
    parser.add_argument(
        "--gnm",
        dest="graph.gnm",
        nargs=2,
        type=int,
        metavar=("N", "M"),
        default=_SUPPRESS,
        help="graphe aléatoire G(n, m)",
    )
    parser.add_argument(
        "--gnm-equal-n",
        dest="graph.gnm_equal_n",
        type=int,
        metavar="N",
        default=_SUPPRESS,
        help="graphe aléatoire G(n, m = n)",
    )
    for flag, text in (
        ("spider", "graphe araignée à N pattes (2N+1 sommets)"),
        ("edgeless", "graphe sans arête à N sommets"),
        ("complete", "graphe complet K_N"),
    ):
        parser.add_argument(
            f"--{flag}",
            dest=f"graph.{flag}",
            type=int,
            metavar="N",
            default=_SUPPRESS,
            help=text,
        )
    parser.add_argument(
        "--graph",
        dest="graph.file",
        metavar="FILE",
        default=_SUPPRESS,
        help="fichier de graphe « n m » puis « u v »",
    )
    if with_seed:
        parser.add_argument(
            "--seed",
            dest="graph.seed",
            type=seed_value,
            default=_SUPPRESS,
            help="graine 64 bits du générateur",
        )


def add_schedule_arguments(
    parser: argparse.ArgumentParser, with_steps: bool = True
) -> None:
    """Calendrier : T ou γ, ω_φ et nombre de pas."""
    duration = parser.add_mutually_exclusive_group()
    duration.add_argument(
        "--total-time",
        dest="schedule.total_time",
        type=float,
        metavar="T",
        default=_SUPPRESS,
        help="durée totale T",
    )
    duration.add_argument(
        "--gamma",
        dest="schedule.gamma",
        type=float,
        metavar="G",
        default=_SUPPRESS,
        help="T = n^G (défaut : 2)",
    )
    parser.add_argument(
        "--omega-phi",
        dest="schedule.omega_phi",
        type=float,
        metavar="W",
        default=_SUPPRESS,
        help="vitesse dφ/dt (défaut : 1)",
    )
    if with_steps:
        parser.add_argument(
            "--steps",
            dest="schedule.steps",
            type=int,
            metavar="S",
            default=_SUPPRESS,
            help="nombre de pas d'intégration",
        )


def flags_to_layer(args: argparse.Namespace) -> dict[str, Any]:
    """Convertit le Namespace en dictionnaire imbriqué de configuration.

    Example:
        >>> ns = argparse.Namespace(**{"graph.spider": 3}, command="gen")
        >>> flags_to_layer(ns)
        {'subcommand': 'gen', 'graph': {'spider': 3}}
    """
    layer: dict[str, Any] = {"subcommand": args.command}
    for key, value in vars(args).items():
        if "." not in key:
            continue
        section, field = key.split(".", 1)
        layer.setdefault(section, {})[field] = value
    log_file = getattr(args, "log_file", None)
    if log_file is not None:
        layer.setdefault("logging", {}).update(
            {"type": "file", "file": log_file, "console_output": True}
        )
    return layer
