"""Permet ``python -m adiabatic_mis``."""

import sys

from adiabatic_mis.cli.main import main

sys.exit(main())
