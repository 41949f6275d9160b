from __future__ import annotations

from pathlib import Path


class SkeinError(Exception):
    """Base class for every error raised by skeinbraid."""


class BraidSyntaxError(SkeinError, ValueError):
    """Raised when a braid word cannot be parsed or violates its strand bound."""

    def __init__(self, text: str, position: int, reason: str) -> None:
        self.text = text
        self.position = position
        self.reason = reason
        pointer = " " * position + "^"
        super().__init__(f"{reason} at position {position}\n  {text}\n  {pointer}")


class SMonomialSyntaxError(SkeinError, ValueError):
    """Raised when an s-monomial such as "s-5 s1 s1" cannot be parsed."""

    def __init__(self, text: str, reason: str) -> None:
        self.text = text
        self.reason = reason
        super().__init__(f"Invalid s-monomial '{text}': {reason}")


class StrandMismatchError(SkeinError, ValueError):
    def __init__(self, left: int, right: int) -> None:
        self.left = left
        self.right = right
        super().__init__(
            f"Cannot combine algebra elements on {left} and {right} moving strands"
        )


class BudgetExhaustedError(SkeinError):
    """Raised when a rewriting run spends more steps than its budget allows."""

    def __init__(self, limit: int, context: str | None = None) -> None:
        self.limit = limit
        self.context = context
        where = f" while processing {context}" if context else ""
        super().__init__(
            f"Step budget of {limit} exhausted{where}. "
            f"Raise it with --budget or SKEIN_BUDGET."
        )

    def with_context(self, context: str) -> BudgetExhaustedError:
        return BudgetExhaustedError(self.limit, context)


class ConfigurationError(SkeinError, ValueError):
    def __init__(self, key: str, value: object, reason: str) -> None:
        self.key = key
        self.value = value
        self.reason = reason
        super().__init__(f"Invalid value {value!r} for '{key}': {reason}")


class ConfigFileError(SkeinError):
    """Raised when a config file interpolates a key that is not defined."""

    def __init__(self, key: str, config_file: Path) -> None:
        self.key = key
        self.config_file = config_file
        super().__init__(
            f"Config '{config_file.name}' references key '{key}', "
            f"but it is not defined. Add it to '{config_file}'."
        )
