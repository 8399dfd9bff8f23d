"""Module de gestion des erreurs."""

from adiabatic_mis.errors.base import ErrorHandler, ErrorHandlerChain
from adiabatic_mis.errors.console_handler import ConsoleErrorHandler
from adiabatic_mis.errors.exceptions import (
    BasisCapExceededError,
    ComputationError,
    ConfigurationError,
    EigensolverError,
    GraphFormatError,
    GraphRangeError,
    KrylovBreakdownError,
    NormDriftError,
    SimulatorError,
    UsageError,
    ValidationCheckError,
    ValidationScaleError,
    exit_code_for,
)
from adiabatic_mis.errors.logger_handler import LoggerErrorHandler

__all__ = [
    "BasisCapExceededError",
    "ComputationError",
    "ConfigurationError",
    "ConsoleErrorHandler",
    "EigensolverError",
    "ErrorHandler",
    "ErrorHandlerChain",
    "exit_code_for",
    "GraphFormatError",
    "GraphRangeError",
    "KrylovBreakdownError",
    "LoggerErrorHandler",
    "NormDriftError",
    "SimulatorError",
    "UsageError",
    "ValidationCheckError",
    "ValidationScaleError",
]
