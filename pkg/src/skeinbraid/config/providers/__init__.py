from .base import ConfigProvider, DefaultedValue
from .argparse import ArgParseWrapper, ArgNamespaceProvider
from .environ import EnvironProvider
from .omegaconf import OmegaConfProvider

__all__ = [
    "ConfigProvider",
    "DefaultedValue",
    "ArgParseWrapper",
    "ArgNamespaceProvider",
    "EnvironProvider",
    "OmegaConfProvider",
]
