import os
from typing import Any, Mapping

from ..bind import Bind
from .base import ConfigProvider


class EnvironProvider(ConfigProvider):
    """Reads environment variables named by ``Bind(env_key=...)``."""

    def __init__(self, environ: Mapping[str, str] | None = None):
        self._environ: Mapping[str, str] = os.environ if environ is None else environ

    def bind_key(self, bind: Bind[Any]) -> str | None:
        return bind.env_key

    def get(self, key: str) -> Any:
        value = self._environ.get(key)
        if value is None or value.strip() == "":
            return None
        return value.strip()

    def __repr__(self) -> str:
        return "EnvironProvider()"
