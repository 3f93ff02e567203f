"""Closed-form lower bounds for mu_c = mu(H^v_c x S^w).

Every pointwise bound takes a :class:`CurvedModelSpace` and a ratio
``gamma <= mu_0 / mu_1`` and returns a value in absolute units, where
mu_1 = mu(S^n).  The corollary bounds return a :class:`BoundResult` for the
infimum over c in [0, 1].
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .constants import sphere_yamabe
from .errors import DomainError, NotApplicableError
from .model_space import (
    CurvedModelSpace,
    ModelSpaceParams,
    interpolation_weights,
    scalar_curvature,
)

__all__ = [
    "BoundFormula",
    "BoundResult",
    "homothety_bound",
    "curvature_comparison_bound",
    "general_bound",
    "general_bound_refined",
    "relaxed_general_bound",
    "combined_pointwise_bound",
    "corollary42_bound",
    "corollary44_bound",
    "cubic_minimizer_42",
    "bound_objective",
]


class BoundFormula(str, enum.Enum):
    HOMOTHETY = "homothety"
    CURVATURE_COMPARISON = "curvature-comparison"
    GENERAL = "general"
    GENERAL_REFINED_V_GT_W = "general-refined"
    COMBINED = "combined"
    COROLLARY_42 = "corollary42"
    COROLLARY_44 = "corollary44"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class BoundResult:
    """A lower bound for inf_c mu_c together with how it was obtained.

    ``tolerance`` is the width of the final c-bracket for numerically
    minimized bounds and 0 for closed forms.
    """

    value: float
    minimizer_c: float
    formula: BoundFormula
    ratio: float
    tolerance: float
    params: ModelSpaceParams | None = None
    gamma: float | None = None
    evaluations: int = 0


@lru_cache(maxsize=None)
def _mu1(n: int) -> float:
    return sphere_yamabe(n)


def _check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not 0.0 < gamma <= 1.0:
        raise DomainError(f"gamma must lie in (0, 1], got {gamma!r}")
    return gamma


def _homothety_factor(space: CurvedModelSpace) -> float:
    return space.c ** (2.0 * space.w / space.n)


def homothety_bound(space: CurvedModelSpace) -> float:
    """c^(2w/n) mu_1, from rescaling H^v_c to H^v_1."""
    return _homothety_factor(space) * _mu1(space.n)


def curvature_comparison_bound(space: CurvedModelSpace, gamma: float) -> float:
    """(s_c / s_0) gamma mu_1; valid only while s_c > 0."""
    gamma = _check_gamma(gamma)
    sc = scalar_curvature(space)
    if sc <= 0.0:
        raise NotApplicableError(
            f"curvature comparison needs s_c > 0; s_c = {sc:g} at c = {space.c:g} "
            f"for (v, w) = ({space.v}, {space.w})"
        )
    return sc / space.params.sphere_weight * gamma * _mu1(space.n)


def general_bound(space: CurvedModelSpace, gamma: float) -> float:
    """Interpolation bound (gamma - lambda0 (gamma - c^(2w/n))) mu_1."""
    gamma = _check_gamma(gamma)
    lam = interpolation_weights(space).lambda0
    return (gamma - lam * (gamma - _homothety_factor(space))) * _mu1(space.n)


def _hyperbolic_fraction(space: CurvedModelSpace) -> float:
    # c^2 v(v-1) / ((1-c^2) w(w-1) + c^2 v(v-1)); denominator > 0 for w >= 2
    c2 = space.c**2
    a = c2 * space.params.hyperbolic_weight
    return a / ((1.0 - c2) * space.params.sphere_weight + a)


def relaxed_general_bound(space: CurvedModelSpace, gamma: float) -> float:
    """The general bound weakened by mu_1 > mu_0 and c^(2w/n) >= c^2.

    This is the objective whose exact minimizer gives corollary42_bound.
    """
    gamma = _check_gamma(gamma)
    frac = _hyperbolic_fraction(space)
    return (1.0 - (1.0 - space.c**2) * frac) * gamma * _mu1(space.n)


def general_bound_refined(space: CurvedModelSpace, gamma: float) -> float:
    """Variant of :func:`relaxed_general_bound` using c^(2w/n) >= c (needs v > w)."""
    if space.v <= space.w:
        raise NotApplicableError(
            f"refined bound needs v > w, got (v, w) = ({space.v}, {space.w})"
        )
    gamma = _check_gamma(gamma)
    frac = _hyperbolic_fraction(space)
    return (1.0 - (1.0 - space.c) * frac) * gamma * _mu1(space.n)


def combined_pointwise_bound(space: CurvedModelSpace, gamma: float) -> float:
    best = max(general_bound(space, gamma), homothety_bound(space))
    if space.v > space.w:
        best = max(best, general_bound_refined(space, gamma))
    return best


def corollary42_bound(params: ModelSpaceParams, gamma: float) -> BoundResult:
    """(1 - v(v-1) / (sqrt(v(v-1)) + sqrt(w(w-1)))^2) gamma mu_1, uniform in c."""
    if params.v < 2 or params.w < 2:
        raise DomainError(f"corollary42 needs v, w >= 2, got ({params.v}, {params.w})")
    gamma = _check_gamma(gamma)
    ra = math.sqrt(params.hyperbolic_weight)
    rb = math.sqrt(params.sphere_weight)
    ratio = (1.0 - params.hyperbolic_weight / (ra + rb) ** 2) * gamma
    return BoundResult(
        value=ratio * _mu1(params.n),
        minimizer_c=math.sqrt(rb / (ra + rb)),
        formula=BoundFormula.COROLLARY_42,
        ratio=ratio,
        tolerance=0.0,
        params=params,
        gamma=gamma,
    )


def corollary44_bound(params: ModelSpaceParams, gamma: float) -> BoundResult:
    """(gamma - 4 gamma^3 / 27) mu_1 for v = w, attained at c = 2 gamma / 3."""
    if params.v != params.w or params.v < 2:
        raise DomainError(f"corollary44 needs v = w >= 2, got ({params.v}, {params.w})")
    gamma = _check_gamma(gamma)
    ratio = gamma - 4.0 / 27.0 * gamma**3
    return BoundResult(
        value=ratio * _mu1(params.n),
        minimizer_c=2.0 * gamma / 3.0,
        formula=BoundFormula.COROLLARY_44,
        ratio=ratio,
        tolerance=0.0,
        params=params,
        gamma=gamma,
    )


def cubic_minimizer_42() -> float:
    """Real root of 5c^3 + 3c = 2, the critical point of the refined (4,2) bound."""
    s = (25.0 + 5.0 * math.sqrt(30.0)) ** (1.0 / 3.0)
    return s / 5.0 - 1.0 / s


_POINTWISE = {
    BoundFormula.GENERAL: general_bound,
    BoundFormula.GENERAL_REFINED_V_GT_W: general_bound_refined,
    BoundFormula.CURVATURE_COMPARISON: curvature_comparison_bound,
    BoundFormula.COMBINED: combined_pointwise_bound,
}


def bound_objective(
    formula: BoundFormula, params: ModelSpaceParams, gamma: float
) -> Callable[[float], float]:
    """The map c -> pointwise bound, ready for minimization over [0, 1].

    Raises:
        NotApplicableError: the formula cannot hold on all of [0, 1].
        DomainError: the formula is a closed-form corollary, not pointwise.
    """
    formula = BoundFormula(formula)
    if formula is BoundFormula.HOMOTHETY:
        return lambda c: homothety_bound(params.at(c))
    if formula in (BoundFormula.COROLLARY_42, BoundFormula.COROLLARY_44):
        raise DomainError(f"{formula} is a closed form; call its function directly")
    gamma = _check_gamma(gamma)
    if formula is BoundFormula.GENERAL_REFINED_V_GT_W and params.v <= params.w:
        raise NotApplicableError(
            f"refined bound needs v > w, got (v, w) = ({params.v}, {params.w})"
        )
    if formula is BoundFormula.CURVATURE_COMPARISON and scalar_curvature(params.at(1.0)) <= 0:
        raise NotApplicableError(
            f"curvature comparison fails near c = 1 for (v, w) = ({params.v}, {params.w}) "
            "since s_1 <= 0"
        )
    fn = _POINTWISE[formula]
    return lambda c: fn(params.at(c), gamma)
