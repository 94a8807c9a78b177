"""Enumeration budgets.

Ambient enumerations touch all q^k - 1 nonzero vectors; the budget caps q^k
so a mistyped instance fails fast instead of hanging.  The SRR_BUDGET
environment variable overrides the default cap.
"""

from __future__ import annotations

import os

__all__ = ["DEFAULT_VECTOR_BUDGET", "BudgetExceededError", "vector_budget", "check_vector_budget"]

DEFAULT_VECTOR_BUDGET = 3**6


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured resource budget."""


def vector_budget(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get("SRR_BUDGET")
    return int(env) if env else DEFAULT_VECTOR_BUDGET


def check_vector_budget(q: int, k: int, override: int | None = None) -> None:
    budget = vector_budget(override)
    if q**k > budget:
        raise BudgetExceededError(
            f"q^k = {q**k} exceeds the enumeration budget {budget}"
            " (raise SRR_BUDGET or pass a larger budget to proceed)"
        )
