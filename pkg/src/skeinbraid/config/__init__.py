"""Run settings resolved from arguments, environment and an optional YAML file."""

from .loader import OmegaConfig, OmegaConfigLoader, RawOmegaConfConfig
from .bind import Bind, BindDefault
from .app_config import AppConfig
from .run_config import RunConfig
from .providers import (
    ArgNamespaceProvider,
    ArgParseWrapper,
    ConfigProvider,
    DefaultedValue,
    EnvironProvider,
    OmegaConfProvider,
)

__all__ = [
    "OmegaConfig",
    "OmegaConfigLoader",
    "RawOmegaConfConfig",
    "AppConfig",
    "RunConfig",
    "Bind",
    "BindDefault",
    "ConfigProvider",
    "DefaultedValue",
    "ArgParseWrapper",
    "ArgNamespaceProvider",
    "EnvironProvider",
    "OmegaConfProvider",
]
