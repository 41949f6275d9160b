import re
from pathlib import Path
from typing import Any

from omegaconf import DictConfig, ListConfig, OmegaConf
from omegaconf.errors import InterpolationKeyError

from ..errors import ConfigFileError, ConfigurationError

RawOmegaConfConfig = DictConfig | ListConfig

_INTERPOLATION_KEY_RE = re.compile(r"Interpolation key '(.+?)' not found")


class OmegaConfig:
    """Read access to a resolved OmegaConf tree by dotted key."""

    def __init__(self, config: RawOmegaConfConfig):
        assert isinstance(config, (DictConfig, ListConfig)), (
            f"Config must be a DictConfig or ListConfig, got {type(config)}"
        )
        self._config: RawOmegaConfConfig = config

    @classmethod
    def empty(cls) -> "OmegaConfig":
        return cls(OmegaConf.create({}))

    def get(self, key: str, default: Any = None) -> Any:
        return OmegaConf.select(self._config, key, default=default)

    def __str__(self) -> str:
        return str(self._config)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._config!r})"


class OmegaConfigLoader:
    """Loads YAML run files with OmegaConf and resolves their interpolations."""

    @staticmethod
    def load_raw(config_file: Path | str) -> RawOmegaConfConfig:
        if isinstance(config_file, str):
            config_file = Path(config_file)
        if not config_file.exists():
            raise ConfigurationError("config", str(config_file), "file does not exist")

        config = OmegaConf.load(config_file)
        try:
            OmegaConf.resolve(config)
        except InterpolationKeyError as exc:
            match = _INTERPOLATION_KEY_RE.search(str(exc))
            key = match.group(1) if match else str(exc)
            raise ConfigFileError(key, config_file) from exc
        return config

    @staticmethod
    def load(config_file: Path | str) -> OmegaConfig:
        return OmegaConfig(OmegaConfigLoader.load_raw(config_file))
