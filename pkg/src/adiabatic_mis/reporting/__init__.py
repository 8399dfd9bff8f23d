"""Sorties reproductibles : formats, manifeste et graphiques SVG."""

from adiabatic_mis.reporting.checksum import (
    ChecksumCalculator,
    HashLibChecksumCalculator,
)
from adiabatic_mis.reporting.formats import (
    format_cell,
    format_float,
    render_csv,
    render_json,
)
from adiabatic_mis.reporting.output import (
    OutputDirectory,
    OutputWriteError,
    software_versions,
)
from adiabatic_mis.reporting.svg import Series, render_line_chart

__all__ = [
    "ChecksumCalculator",
    "format_cell",
    "format_float",
    "HashLibChecksumCalculator",
    "OutputDirectory",
    "OutputWriteError",
    "render_csv",
    "render_json",
    "render_line_chart",
    "Series",
    "software_versions",
]
