"""Configuration : chargement de fichiers, schéma et couches."""

from adiabatic_mis.config.app_dir import DEFAULTS_FILENAME, AppConfigDir
from adiabatic_mis.config.layers import deep_merge, merge_layers
from adiabatic_mis.config.loader import (
    ConfigLoader,
    FileConfigLoader,
    parse_key_value,
)
from adiabatic_mis.config.schema import (
    EnsembleConfig,
    GraphSourceConfig,
    OutputConfig,
    RunConfig,
    ScanConfig,
    ScheduleConfig,
    ValidationConfig,
)

__all__ = [
    "AppConfigDir",
    "ConfigLoader",
    "deep_merge",
    "DEFAULTS_FILENAME",
    "EnsembleConfig",
    "FileConfigLoader",
    "GraphSourceConfig",
    "merge_layers",
    "OutputConfig",
    "parse_key_value",
    "RunConfig",
    "ScanConfig",
    "ScheduleConfig",
    "ValidationConfig",
]
