from __future__ import annotations

from typing import TYPE_CHECKING, Any, Callable, Generic, TypeVar, overload

T = TypeVar("T")

if TYPE_CHECKING:
    from typing import Protocol

    class _BindHost(Protocol):
        def _resolve_bind(self, bind: Bind[Any]) -> Any: ...


class Bind(Generic[T]):
    """Read-only descriptor binding a run setting to a config path.

    Resolution order when accessed on an AppConfig instance:
    1. Explicit command line argument
    2. Environment variable (when ``env_key`` is set)
    3. YAML config file
    4. Bind default, then the argparse default
    """

    def __init__(
        self,
        config_path: str,
        *,
        arg_key: str | None = None,
        env_key: str | None = None,
        converter: Callable[[Any], Any] | None = None,
        default: T | None = None,
    ):
        """
        config_path: dotted path in the YAML config
        arg_key: argparse dest to read (defaults to the property name)
        env_key: environment variable to read
        """
        self.config_path: str = config_path
        self.arg_key: str | None = arg_key
        self.env_key: str | None = env_key
        self.property_name: str | None = None
        self.converter: Callable[[Any], Any] | None = converter
        self.default: T | None = default

    def __set_name__(self, owner: type, name: str) -> None:
        self.property_name = name
        if self.arg_key is None:
            self.arg_key = name

    @overload
    def __get__(self, instance: None, owner: type) -> Bind[T]: ...
    @overload
    def __get__(self, instance: _BindHost, owner: type) -> T | None: ...

    def __get__(self, instance: _BindHost | None, owner: type) -> Bind[T] | T | None:
        if instance is None:
            return self
        return instance._resolve_bind(self)  # pyright: ignore[reportPrivateUsage]

    def __set__(self, instance: Any, value: Any) -> None:
        raise AttributeError(f"'{self.property_name}' is read-only; pass it as an argument instead")


class BindDefault(Bind[T]):
    """Bind variant whose __get__ returns T instead of T | None."""

    def __init__(
        self,
        config_path: str,
        *,
        default: Any,
        arg_key: str | None = None,
        env_key: str | None = None,
        converter: Callable[[Any], Any] | None = None,
    ):
        super().__init__(
            config_path,
            arg_key=arg_key,
            env_key=env_key,
            converter=converter,
            default=default,
        )

    @overload
    def __get__(self, instance: None, owner: type) -> BindDefault[T]: ...
    @overload
    def __get__(self, instance: _BindHost, owner: type) -> T: ...

    def __get__(self, instance: _BindHost | None, owner: type) -> BindDefault[T] | T:
        if instance is None:
            return self
        return instance._resolve_bind(self)  # pyright: ignore[reportPrivateUsage]
