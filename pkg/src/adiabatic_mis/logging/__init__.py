"""Module de logging."""

from adiabatic_mis.logging.base import Logger, NullLogger
from adiabatic_mis.logging.console_logger import AnsiColors, ConsoleLogger
from adiabatic_mis.logging.factory import build_logger
from adiabatic_mis.logging.file_logger import FileLogger
from adiabatic_mis.logging.tee_logger import TeeLogger

__all__ = [
    "AnsiColors",
    "build_logger",
    "ConsoleLogger",
    "FileLogger",
    "Logger",
    "NullLogger",
    "TeeLogger",
]
