import pytest

from skeinbraid import hecke, trace
from skeinbraid.braidword import parse
from skeinbraid.budget import DEFAULT_BUDGET, StepBudget, charge
from skeinbraid.errors import BudgetExhaustedError
from skeinbraid.trace import trace_word


def test_charges_are_free_without_a_budget():
    charge(10**9)


def test_budget_counts_steps():
    with StepBudget(10) as budget:
        charge(3)
        charge()
    assert budget.used == 4
    assert budget.remaining == 6


def test_budget_exhaustion():
    with pytest.raises(BudgetExhaustedError, match="budget of 2 exhausted") as exc_info:
        with StepBudget(2):
            charge(3)
    assert exc_info.value.limit == 2
    assert exc_info.value.context is None


def test_remaining_never_goes_negative():
    budget = StepBudget(1)
    with pytest.raises(BudgetExhaustedError):
        budget.charge(5)
    assert budget.remaining == 0


def test_budget_is_released_on_exit():
    with StepBudget(1):
        pass
    charge(100)


def test_with_context_names_the_input():
    err = BudgetExhaustedError(5).with_context("tau=t sign=+")
    assert err.limit == 5
    assert "while processing tau=t sign=+" in str(err)


def test_non_positive_budget_is_rejected():
    with pytest.raises(ValueError, match="positive"):
        StepBudget(0)


def test_default_budget_is_large_enough_for_small_words():
    hecke.clear_caches()
    trace.clear_caches()
    with StepBudget(DEFAULT_BUDGET) as budget:
        trace_word(parse("t1 s1 t^-1 s1"))
    assert 0 < budget.used < DEFAULT_BUDGET
