"""Shared enumeration budget accounting."""

from .errors import BudgetExceededError

DEFAULT_OPS_BUDGET = 1_000_000_000


def check_budget(cost: int, budget: int, what: str) -> None:
    if cost > budget:
        raise BudgetExceededError(f"{what} needs ~{cost} elementary steps, budget is {budget}")
