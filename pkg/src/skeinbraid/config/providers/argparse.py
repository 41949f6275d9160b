import argparse
from typing import Any

from ..bind import Bind
from .base import ConfigProvider, DefaultedValue


class ArgParseWrapper:
    @staticmethod
    def wrap(parser: argparse.ArgumentParser) -> None:
        """Wrap every default of ``parser`` (and its subparsers) in DefaultedValue.

        Call before parse_args(). Afterwards a DefaultedValue in the namespace
        means the flag was not given on the command line.
        """
        for action in parser._actions:
            if isinstance(action, argparse._SubParsersAction):
                for sub in action.choices.values():
                    ArgParseWrapper.wrap(sub)
                continue
            if (
                action.dest != argparse.SUPPRESS
                and action.default is not argparse.SUPPRESS
                and not isinstance(action.default, DefaultedValue)
            ):
                action.default = DefaultedValue(action.default)


class ArgNamespaceProvider(ConfigProvider):
    """Reads a parsed argparse Namespace, DefaultedValue markers included."""

    _args: argparse.Namespace

    def __init__(self, args: argparse.Namespace):
        self._args = args

    def bind_key(self, bind: Bind[Any]) -> str | None:
        return bind.arg_key

    def get(self, key: str) -> Any:
        value = getattr(self._args, key, None)
        if isinstance(value, DefaultedValue) and value.value is None:
            return None
        return value

    def __repr__(self) -> str:
        return f"ArgNamespaceProvider({self._args!r})"
