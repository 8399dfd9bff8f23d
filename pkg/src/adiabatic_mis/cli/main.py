"""Point d'entrée ``adiabatic-mis``."""

import sys
from collections.abc import Sequence

from adiabatic_mis import __version__
from adiabatic_mis.cli.base import CliApplication
from adiabatic_mis.cli.commands import default_commands


def main(argv: Sequence[str] | None = None) -> int:
    """Exécute la CLI et retourne le code de sortie."""
    app = CliApplication(
        prog="adiabatic-mis",
        description=(
            "Recuit adiabatique quantique pour le problème de l'ensemble "
            "indépendant maximum, restreint au sous-espace des ensembles "
            "indépendants."
        ),
        commands=default_commands(),
        version=__version__,
    )
    return app.run(argv)


if __name__ == "__main__":
    sys.exit(main())
