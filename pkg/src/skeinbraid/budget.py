"""Step accounting for the rewriting engine.

The engine charges one step per term it produces. A budget is activated with
``with StepBudget(limit):``; outside of any active budget charges are free.
"""

from __future__ import annotations

from contextvars import ContextVar
from types import TracebackType

from .errors import BudgetExhaustedError

DEFAULT_BUDGET = 5_000_000

_active: ContextVar[StepBudget | None] = ContextVar("skeinbraid_budget", default=None)


class StepBudget:
    def __init__(self, limit: int = DEFAULT_BUDGET):
        if limit <= 0:
            raise ValueError(f"Budget must be positive, got {limit}")
        self.limit: int = limit
        self.used: int = 0
        self._token = None

    def charge(self, steps: int = 1) -> None:
        self.used += steps
        if self.used > self.limit:
            raise BudgetExhaustedError(self.limit)

    @property
    def remaining(self) -> int:
        return max(self.limit - self.used, 0)

    def __enter__(self) -> StepBudget:
        self._token = _active.set(self)
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        tb: TracebackType | None,
    ) -> None:
        if self._token is not None:
            _active.reset(self._token)
            self._token = None

    def __repr__(self) -> str:
        return f"StepBudget(limit={self.limit}, used={self.used})"


def charge(steps: int = 1) -> None:
    budget = _active.get()
    if budget is not None:
        budget.charge(steps)
