from pathlib import Path
from typing import Any

from ..bind import Bind
from ..loader import OmegaConfig, OmegaConfigLoader
from .base import ConfigProvider


class OmegaConfProvider(ConfigProvider):
    """Read-only provider over a YAML run file; no file means an empty config."""

    def __init__(self, config_path: Path | str | None):
        self._config_path: Path | None = Path(config_path) if config_path is not None else None
        self._config: OmegaConfig = (
            OmegaConfigLoader.load(self._config_path)
            if self._config_path is not None
            else OmegaConfig.empty()
        )

    def bind_key(self, bind: Bind[Any]) -> str | None:
        return bind.config_path

    def get(self, key: str, default: Any = None) -> Any:
        return self._config.get(key, default=default)

    def __str__(self) -> str:
        return str(self._config)

    def __repr__(self) -> str:
        return f"OmegaConfProvider({self._config_path!r})"
