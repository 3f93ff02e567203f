"""Derivative-free minimization over c in [0, 1].

A dense grid scan locates the best cell, golden-section search refines
the bracket around it.  The reported minimum is always a value the
objective actually returned, never an interpolation, so it can be replayed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .bounds import (
    BoundFormula,
    BoundResult,
    bound_objective,
    relaxed_general_bound,
    _mu1,
)
from .errors import DomainError, EvaluationError

__all__ = [
    "MinimizationConfig",
    "MinimizationResult",
    "minimize_on_unit_interval",
    "golden_section",
    "minimize_bound",
]

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class MinimizationConfig:
    grid_points: int = 2000
    refine_tolerance: float = 1e-10
    value_slack: float = 0.0
    max_refine_iterations: int = 200

    def __post_init__(self):
        if self.grid_points < 2:
            raise DomainError(f"grid_points must be >= 2, got {self.grid_points}")
        if not self.refine_tolerance > 0:
            raise DomainError(f"refine_tolerance must be positive, got {self.refine_tolerance}")
        if self.value_slack < 0:
            raise DomainError(f"value_slack must be non-negative, got {self.value_slack}")


@dataclass(frozen=True)
class MinimizationResult:
    min_value: float
    argmin_c: float
    evaluations: int
    bracket_width: float
    bracket: tuple = (0.0, 1.0)
    # objective at (left end, best interior point, right end) of the final bracket
    bracket_values: tuple = (math.nan, math.nan, math.nan)


class _Recorder:
    """Wraps an objective, checks finiteness and remembers the best call."""

    def __init__(self, objective: Callable[[float], float]):
        self.objective = objective
        self.count = 0
        self.best_c = math.nan
        self.best_value = math.inf

    def __call__(self, c: float) -> float:
        value = self.objective(c)
        self.count += 1
        if not math.isfinite(value):
            raise EvaluationError(c, value)
        if value < self.best_value:
            self.best_value = value
            self.best_c = c
        return value


def golden_section(f, a, b, fa, fb, tol, max_iter=200):
    """Shrink [a, b] around a local minimum of ``f`` until b - a <= tol.

    ``fa`` and ``fb`` are the known endpoint values.  Returns the final
    bracket, its endpoint values, and the best interior value seen.
    """
    x1 = b - INV_PHI * (b - a)
    x2 = a + INV_PHI * (b - a)
    f1 = f(x1)
    f2 = f(x2)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if f1 <= f2:
            b, fb = x2, f2
            x2, f2 = x1, f1
            x1 = b - INV_PHI * (b - a)
            f1 = f(x1)
        else:
            a, fa = x1, f1
            x1, f1 = x2, f2
            x2 = a + INV_PHI * (b - a)
            f2 = f(x2)
    return a, b, fa, fb, min(f1, f2)


def minimize_on_unit_interval(
    objective: Callable[[float], float],
    config: MinimizationConfig | None = None,
) -> MinimizationResult:
    """Minimize a continuous objective over [0, 1].

    Raises:
        EvaluationError: the objective returned NaN or an infinity.
    """
    config = config or MinimizationConfig()
    f = _Recorder(objective)
    m = config.grid_points
    grid = [i / (m - 1) for i in range(m)]
    values = [f(c) for c in grid]

    i = min(range(m), key=values.__getitem__)
    lo, hi = max(i - 1, 0), min(i + 1, m - 1)
    a, b, fa, fb, f_inner = golden_section(
        f, grid[lo], grid[hi], values[lo], values[hi],
        config.refine_tolerance, config.max_refine_iterations,
    )
    return MinimizationResult(
        min_value=f.best_value - config.value_slack,
        argmin_c=f.best_c,
        evaluations=f.count,
        bracket_width=b - a,
        bracket=(a, b),
        bracket_values=(fa, f_inner, fb),
    )


def minimize_bound(
    params,
    gamma: float,
    which: BoundFormula = BoundFormula.GENERAL,
    config: MinimizationConfig | None = None,
) -> BoundResult:
    """Numerically minimize a pointwise bound over c in [0, 1].

    The closed-form tags minimize the objective their closed form is derived
    from: the relaxed general bound for ``corollary42``, and the general
    bound itself (which reduces to (c^3 - gamma c^2 + gamma) mu_1 when
    v = w) for ``corollary44``.
    """
    which = BoundFormula(which)
    if which is BoundFormula.COROLLARY_42:
        if params.v < 2 or params.w < 2:
            raise DomainError(f"corollary42 needs v, w >= 2, got ({params.v}, {params.w})")
        objective = lambda c: relaxed_general_bound(params.at(c), gamma)  # noqa: E731
    elif which is BoundFormula.COROLLARY_44:
        if params.v != params.w:
            raise DomainError(f"corollary44 needs v = w, got ({params.v}, {params.w})")
        objective = bound_objective(BoundFormula.GENERAL, params, gamma)
    else:
        objective = bound_objective(which, params, gamma)

    config = config or MinimizationConfig()
    result = minimize_on_unit_interval(objective, config)
    return BoundResult(
        value=result.min_value,
        minimizer_c=result.argmin_c,
        formula=which,
        ratio=result.min_value / _mu1(params.n),
        tolerance=result.bracket_width,
        params=params,
        gamma=gamma,
        evaluations=result.evaluations,
    )
