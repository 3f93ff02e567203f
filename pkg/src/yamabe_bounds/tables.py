"""Surgery-constant table, sigma-invariant bounds and the t_n table.

Every row keeps the ingredients it was derived from, so each printed number
can be traced back to a formula or to a registry constant with a source.

Printed values are rounded down.  The numeric column is the minimized
bound truncated to one decimal.  The analytic column first truncates the
ratio to mu_1 to three decimals and then the product, which is how the
closed-form corollaries are quoted (e.g. ">= 0.649 mu_1 >= 51.2").
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from decimal import ROUND_FLOOR, Decimal

from .bounds import (
    BoundFormula,
    BoundResult,
    corollary42_bound,
    corollary44_bound,
    cubic_minimizer_42,
    general_bound_refined,
    _mu1,
)
from .constants import s3xs3_yamabe, sphere_yamabe, wu_manifold_yamabe
from .errors import MissingConstantError
from .model_space import ModelSpaceParams
from .mu_zero import ConstantRegistry, GammaInput, registry_default
from .optimizer import MinimizationConfig, minimize_bound

__all__ = [
    "floor_to",
    "Table1Row",
    "TABLE1_LAYOUT",
    "build_table1",
    "analytic_bound",
    "Ingredient",
    "Hypothesis",
    "SigmaBound",
    "sigma_bound_dim5",
    "sigma_bound_dim6",
    "sigma_bound_dim9_10",
    "sigma_bounds",
    "TnRow",
    "build_table_tn",
    "lambda2_reduction_known",
]


def floor_to(x: float, decimals: int) -> float:
    """Round ``x`` toward -infinity at the given number of decimals."""
    quantum = Decimal(1).scaleb(-decimals)
    return float(Decimal(repr(float(x))).quantize(quantum, rounding=ROUND_FLOOR))


# (v, w, analytic method) in the order of the printed table
TABLE1_LAYOUT = (
    (2, 2, BoundFormula.COROLLARY_44),
    (2, 3, BoundFormula.COROLLARY_42),
    (2, 7, BoundFormula.COROLLARY_42),
    (2, 8, BoundFormula.COROLLARY_42),
    (3, 2, BoundFormula.COROLLARY_42),
    (4, 2, BoundFormula.GENERAL_REFINED_V_GT_W),
)

GAMMA_DECIMALS = 3
RATIO_DECIMALS = 3
VALUE_DECIMALS = 1


@dataclass(frozen=True)
class Table1Row:
    """One (v, w) row of the surgery-constant table.

    ``gamma`` is the registry input used for the analytic column;
    ``table_gamma`` is that ratio truncated to the printed three decimals,
    which the numeric minimization uses.
    """

    params: ModelSpaceParams
    gamma: GammaInput
    table_gamma: float
    analytic: BoundResult
    numeric: BoundResult
    combined: BoundResult
    mu1: float

    @property
    def analytic_reported(self) -> float:
        return floor_to(floor_to(self.analytic.ratio, RATIO_DECIMALS) * self.mu1, VALUE_DECIMALS)

    @property
    def numeric_reported(self) -> float:
        return floor_to(self.numeric.value, VALUE_DECIMALS)

    @property
    def combined_reported(self) -> float:
        return floor_to(self.combined.value, VALUE_DECIMALS)

    @property
    def surgery_label(self) -> tuple:
        return (self.params.n, self.params.k)


def analytic_bound(
    params: ModelSpaceParams,
    gamma: float,
    method: BoundFormula,
    config: MinimizationConfig | None = None,
) -> BoundResult:
    """Closed-form lower bound for inf_c mu_c by the named method.

    For the refined v > w formula the (4,2) minimizer is the real root of
    5c^3 + 3c = 2; other pairs fall back to numerical minimization.
    """
    method = BoundFormula(method)
    if method is BoundFormula.COROLLARY_44:
        return corollary44_bound(params, gamma)
    if method is BoundFormula.COROLLARY_42:
        return corollary42_bound(params, gamma)
    if method is BoundFormula.GENERAL_REFINED_V_GT_W:
        if (params.v, params.w) != (4, 2):
            return minimize_bound(params, gamma, method, config)
        c_star = cubic_minimizer_42()
        value = general_bound_refined(params.at(c_star), gamma)
        return BoundResult(
            value=value,
            minimizer_c=c_star,
            formula=method,
            ratio=value / _mu1(params.n),
            tolerance=0.0,
            params=params,
            gamma=gamma,
        )
    raise ValueError(f"{method} is not an analytic method")


def build_table1(
    registry: ConstantRegistry | None = None,
    config: MinimizationConfig | None = None,
) -> list:
    registry = registry if registry is not None else registry_default()
    config = config or MinimizationConfig()
    rows = []
    for v, w, method in TABLE1_LAYOUT:
        params = ModelSpaceParams(v, w)
        gamma = registry.gamma(v, w)
        table_gamma = floor_to(gamma.gamma, GAMMA_DECIMALS)
        rows.append(
            Table1Row(
                params=params,
                gamma=gamma,
                table_gamma=table_gamma,
                analytic=analytic_bound(params, gamma.gamma, method, config),
                numeric=minimize_bound(params, table_gamma, BoundFormula.GENERAL, config),
                combined=minimize_bound(params, table_gamma, BoundFormula.COMBINED, config),
                mu1=_mu1(params.n),
            )
        )
    return rows


def _table1_lookup(rows, v, w) -> Table1Row:
    for row in rows:
        if (row.params.v, row.params.w) == (v, w):
            return row
    raise KeyError((v, w))


# ---------------------------------------------------------------------------
# sigma-invariant bounds


def lambda2_reduction_known(n: int, k: int) -> bool:
    """Whether Lambda^(2)_{n,k} >= Lambda^(1)_{n,k} is established.

    Holds for k <= n - 4 and for (n, k) in {(4,1), (5,2), (6,3)}.
    """
    return k <= n - 4 or (n, k) in {(4, 1), (5, 2), (6, 3)}


class Hypothesis(str, enum.Enum):
    SIMPLY_CONNECTED_5 = "simply-connected, n=5"
    SIMPLY_CONNECTED_6 = "simply-connected, n=6"
    TWO_CONNECTED_9 = "2-connected spin, alpha=0, n=9"
    TWO_CONNECTED_10 = "2-connected spin, alpha=0, n=10"


@dataclass(frozen=True)
class Ingredient:
    """A named quantity entering a minimum, with its provenance.

    ``kind`` is "bound" for a surgery constant computed here (``bound``
    holds the minimization), "formula" for an exact closed form, and
    "registry" for an external constant.
    """

    name: str
    value: float
    kind: str
    source: str
    bound: BoundResult | None = None
    lambda2_reduction: bool | None = None


@dataclass(frozen=True)
class SigmaBound:
    dimension: int
    hypothesis: Hypothesis
    value: float
    ingredients: tuple
    claimed: float
    strict: bool
    caveat: str | None = None

    def replay(self) -> float:
        return min(i.value for i in self.ingredients)

    def binding(self) -> Ingredient:
        return min(self.ingredients, key=lambda i: i.value)

    def meets_claim(self) -> bool:
        return self.value > self.claimed if self.strict else self.value >= self.claimed


def _lambda_ingredient(row: Table1Row) -> Ingredient:
    n, k = row.surgery_label
    return Ingredient(
        name=f"Lambda_{{{n},{k}}}",
        value=row.numeric.value,
        kind="bound",
        source=(
            f"minimized interpolation bound for (v,w)=({row.params.v},{row.params.w}), "
            f"gamma={row.table_gamma} ({row.gamma.source})"
        ),
        bound=row.numeric,
        lambda2_reduction=lambda2_reduction_known(n, k),
    )


def _registry_ingredient(registry: ConstantRegistry, key: str, name: str) -> Ingredient:
    const = registry.constant(key)
    return Ingredient(name=name, value=const.value, kind="registry", source=const.source)


def _sigma(dimension, hypothesis, ingredients, claimed, strict, caveat=None) -> SigmaBound:
    ingredients = tuple(ingredients)
    return SigmaBound(
        dimension=dimension,
        hypothesis=hypothesis,
        value=min(i.value for i in ingredients),
        ingredients=ingredients,
        claimed=claimed,
        strict=strict,
        caveat=caveat,
    )


def _rows(rows, registry, config):
    if rows is None:
        rows = build_table1(registry, config)
    return rows


def sigma_bound_dim5(registry=None, config=None, rows=None) -> SigmaBound:
    registry = registry if registry is not None else registry_default()
    rows = _rows(rows, registry, config)
    wu = Ingredient(
        name="sigma(SU(3)/SO(3))",
        value=wu_manifold_yamabe(),
        kind="formula",
        source="Einstein metric with Ric = 6g: 30 (sqrt(3) pi^3 / 8)^(2/5), a lower bound for sigma",
    )
    return _sigma(5, Hypothesis.SIMPLY_CONNECTED_5,
                  [_lambda_ingredient(_table1_lookup(rows, 3, 2)), wu], 45.1, strict=True)


def sigma_bound_dim6(registry=None, config=None, rows=None) -> SigmaBound:
    """min(Lambda_{6,2}, Lambda_{6,3}).

    Lambda_{6,2} is not computed here; without a ``lambda_6_2`` registry
    constant the bound is reported from Lambda_{6,3} alone with a caveat.
    """
    registry = registry if registry is not None else registry_default()
    rows = _rows(rows, registry, config)
    ingredients = [_lambda_ingredient(_table1_lookup(rows, 4, 2))]
    caveat = None
    if registry.get_constant("lambda_6_2") is not None:
        ingredients.append(_registry_ingredient(registry, "lambda_6_2", "Lambda_{6,2}"))
    else:
        caveat = "Lambda_{6,2} not in registry; value uses Lambda_{6,3} only"
    return _sigma(6, Hypothesis.SIMPLY_CONNECTED_6, ingredients, 49.9, strict=False, caveat=caveat)


def sigma_bound_dim9_10(registry=None, config=None, rows=None):
    registry = registry if registry is not None else registry_default()
    rows = _rows(rows, registry, config)
    dim9 = _sigma(
        9,
        Hypothesis.TWO_CONNECTED_9,
        [
            _lambda_ingredient(_table1_lookup(rows, 2, 7)),
            _registry_ingredient(registry, "min_lambda_9_2_5", "min Lambda_{9,k}, k=2..5"),
            _registry_ingredient(registry, "s1_lower", "s_1 = sigma(HP^2 x S^1)"),
        ],
        109.2,
        strict=True,
    )
    dim10 = _sigma(
        10,
        Hypothesis.TWO_CONNECTED_10,
        [
            _lambda_ingredient(_table1_lookup(rows, 2, 8)),
            _registry_ingredient(registry, "min_lambda_10_2_6", "min Lambda_{10,k}, k=2..6"),
            _registry_ingredient(registry, "s2_lower", "s_2 = sigma(HP^2 x S^1 x S^1)"),
        ],
        97.3,
        strict=False,
    )
    return dim9, dim10


def sigma_bounds(registry=None, config=None) -> list:
    """The four sigma bounds, dimensions 5, 6, 9, 10, sharing one table build."""
    registry = registry if registry is not None else registry_default()
    rows = build_table1(registry, config)
    return [
        sigma_bound_dim5(registry, config, rows),
        sigma_bound_dim6(registry, config, rows),
        *sigma_bound_dim9_10(registry, config, rows),
    ]


# ---------------------------------------------------------------------------
# t_n table


@dataclass(frozen=True)
class TnRow:
    """Lower bound t_n for sigma of 2-connected n-manifolds with vanishing index.

    ``status`` is "computed", "external" (taken from the registry) or
    "unknown" (``t_n`` is None).  ``sphere_sigma`` is sigma(S^n) = mu(S^n).
    """

    n: int
    t_n: float | None
    status: str
    source: str
    sphere_sigma: float
    ingredients: tuple = field(default=())

    @property
    def t_n_reported(self):
        return None if self.t_n is None else floor_to(self.t_n, VALUE_DECIMALS)

    @property
    def sphere_sigma_reported(self) -> float:
        return floor_to(self.sphere_sigma, VALUE_DECIMALS)


def _sphere_ingredient(n) -> Ingredient:
    return Ingredient(
        name=f"sigma(S^{n})", value=sphere_yamabe(n), kind="formula",
        source=f"n(n-1) vol(S^n)^(2/n) with n={n}",
    )


def build_table_tn(registry=None, config=None) -> list:
    registry = registry if registry is not None else registry_default()
    for n in (7, 8, 11):
        registry.constant(f"t_{n}")  # fail early, naming the missing key
    dim9, dim10 = sigma_bound_dim9_10(registry, config)

    rows = []
    for n in range(3, 12):
        sphere = sphere_yamabe(n)
        if n in (3, 5):
            ing = (_sphere_ingredient(n),)
            rows.append(TnRow(n, sphere, "computed",
                              f"S^{n} is the only 2-connected {n}-manifold", sphere, ing))
        elif n == 4:
            rows.append(TnRow(n, None, "unknown",
                              "depends on the existence of exotic 4-spheres", sphere))
        elif n == 6:
            ing = (
                _sphere_ingredient(6),
                Ingredient("sigma(S^3 x S^3)", s3xs3_yamabe(), "formula",
                           "product of round 3-spheres: 12 (2 pi^2)^(2/3), a lower bound for sigma"),
            )
            rows.append(TnRow(n, min(i.value for i in ing), "computed",
                              "S^6 and connected sums of S^3 x S^3", sphere, ing))
        elif n in (7, 8, 11):
            const = registry.constant(f"t_{n}")
            rows.append(TnRow(n, const.value, "external", const.source, sphere))
        elif n == 9:
            rows.append(TnRow(n, dim9.value, "computed", dim9.hypothesis.value, sphere,
                              dim9.ingredients))
        elif n == 10:
            rows.append(TnRow(n, dim10.value, "computed", dim10.hypothesis.value, sphere,
                              dim10.ingredients))
    return rows
