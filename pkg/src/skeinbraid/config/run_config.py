from typing import Any

from ..budget import DEFAULT_BUDGET
from ..errors import ConfigurationError
from .app_config import AppConfig
from .bind import Bind, BindDefault

COMMANDS = ("trace", "invariant", "reduce", "cmp", "system", "solve")
FORMATS = ("text", "json")
SIGNS = {"both": (1, -1), "+": (1,), "-": (-1,)}
MAX_STRANDS_LIMIT = 6
MAX_EXP_LIMIT = 8


def _to_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {value!r}")


class RunConfig(AppConfig):
    command = Bind[str]("run.command")
    word = Bind[str]("run.word")
    strands = Bind[int]("run.strands", converter=int)
    monomials = Bind[list]("run.monomials", converter=list)

    level = BindDefault[int]("system.level", default=1, converter=int)
    max_strands = BindDefault[int]("system.max_strands", default=1, converter=int)
    max_exp = BindDefault[int]("system.max_exp", default=2, converter=int)
    sign = BindDefault[str]("system.sign", default="both", converter=str)
    allow_large_bounds = BindDefault[bool](
        "system.allow_large_bounds", default=False, converter=_to_bool
    )

    output_format = BindDefault[str]("output.format", arg_key="format", default="text", converter=str)
    budget = BindDefault[int](
        "engine.budget", env_key="SKEIN_BUDGET", default=DEFAULT_BUDGET, converter=int
    )
    log_level = BindDefault[str](
        "logging.level", env_key="SKEIN_LOG_LEVEL", default="WARNING", converter=str
    )

    @property
    def signs(self) -> tuple[int, ...]:
        return SIGNS[self.sign]

    def _read(self, name: str) -> Any:
        try:
            return getattr(self, name)
        except (TypeError, ValueError) as exc:
            raise ConfigurationError(name, self._raw(name), str(exc)) from exc

    def _raw(self, name: str) -> Any:
        bind = self._binds()[name]
        for provider in self._providers:
            key = provider.bind_key(bind)
            if key is not None and provider.get(key) is not None:
                return provider.get(key)
        return None

    def validate(self) -> "RunConfig":
        """Check value domains and the bounds guardrail; returns self."""
        command = self._read("command")
        if command not in COMMANDS:
            raise ConfigurationError("command", command, f"expected one of {', '.join(COMMANDS)}")

        fmt = self._read("output_format")
        if fmt not in FORMATS:
            raise ConfigurationError("format", fmt, "expected text or json")

        budget = self._read("budget")
        if budget <= 0:
            raise ConfigurationError("budget", budget, "must be a positive integer")

        strands = self._read("strands")
        if strands is not None and strands < 1:
            raise ConfigurationError("strands", strands, "must be at least 1")

        if command in ("system", "solve"):
            sign = self._read("sign")
            if sign not in SIGNS:
                raise ConfigurationError("sign", sign, "expected +, - or both")
            max_strands = self._read("max_strands")
            max_exp = self._read("max_exp")
            self._read("level")
            if max_strands < 0:
                raise ConfigurationError("max_strands", max_strands, "must be >= 0")
            if max_exp < 1:
                raise ConfigurationError("max_exp", max_exp, "must be >= 1")
            if not self._read("allow_large_bounds"):
                if max_strands > MAX_STRANDS_LIMIT:
                    raise ConfigurationError(
                        "max_strands",
                        max_strands,
                        f"exceeds {MAX_STRANDS_LIMIT}; pass --allow-large-bounds to override",
                    )
                if max_exp > MAX_EXP_LIMIT:
                    raise ConfigurationError(
                        "max_exp",
                        max_exp,
                        f"exceeds {MAX_EXP_LIMIT}; pass --allow-large-bounds to override",
                    )
        return self
