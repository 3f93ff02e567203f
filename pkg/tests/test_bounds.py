import math

import pytest
from hypothesis import given, settings, strategies as st

from yamabe_bounds.bounds import (
    BoundFormula,
    bound_objective,
    combined_pointwise_bound,
    corollary42_bound,
    corollary44_bound,
    cubic_minimizer_42,
    curvature_comparison_bound,
    general_bound,
    general_bound_refined,
    homothety_bound,
    relaxed_general_bound,
)
from yamabe_bounds.constants import sphere_yamabe
from yamabe_bounds.errors import DomainError, NotApplicableError
from yamabe_bounds.model_space import ModelSpaceParams

from .frozen import CUBIC_ROOT, MU

dims = st.integers(min_value=2, max_value=10)
gammas = st.floats(min_value=1e-3, max_value=1.0)
unit = st.floats(min_value=0.0, max_value=1.0)


def bisect_root(fn, lo, hi, tol=1e-15):
    flo = fn(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = fn(mid)
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_cubic_root_closed_form():
    c = cubic_minimizer_42()
    assert abs(5 * c**3 + 3 * c - 2) < 1e-14
    assert c == pytest.approx(CUBIC_ROOT, abs=1e-15)
    assert abs(c - 0.48108) <= 5e-5


def test_cubic_root_bisection_oracle():
    root = bisect_root(lambda c: 5 * c**3 + 3 * c - 2, 0.0, 1.0)
    assert abs(cubic_minimizer_42() - root) <= 1e-10


def test_cubic_root_is_refined_critical_point():
    p = ModelSpaceParams(4, 2)
    h = 1e-6
    c = cubic_minimizer_42()
    f = lambda x: general_bound_refined(p.at(x), 0.56885)  # noqa: E731
    assert abs((f(c + h) - f(c - h)) / (2 * h)) < 1e-6 * MU[6]


def test_homothety_endpoints():
    p = ModelSpaceParams(2, 3)
    assert homothety_bound(p.at(1.0)) == pytest.approx(MU[5])
    assert homothety_bound(p.at(0.0)) == 0.0


@given(dims, dims, gammas, unit)
def test_general_bound_between_endpoint_values(v, w, gamma, c):
    space = ModelSpaceParams(v, w).at(c)
    mu1 = sphere_yamabe(v + w)
    value = general_bound(space, gamma)
    hom = c ** (2 * w / (v + w))
    assert value >= min(gamma, hom) * mu1 * (1 - 1e-12)
    assert value <= max(gamma, 1.0) * mu1 * (1 + 1e-12)


@given(dims, dims, gammas)
def test_general_bound_endpoints(v, w, gamma):
    p = ModelSpaceParams(v, w)
    mu1 = sphere_yamabe(p.n)
    assert general_bound(p.at(0.0), gamma) == pytest.approx(gamma * mu1)
    assert general_bound(p.at(1.0), gamma) == pytest.approx(mu1)


@given(dims, dims, gammas, st.floats(min_value=0.0, max_value=1.0))
def test_sign_matches_homothety_comparison(v, w, gamma, c):
    space = ModelSpaceParams(v, w).at(c)
    diff = general_bound(space, gamma) - homothety_bound(space)
    ref = gamma - c ** (2 * w / (v + w))
    if abs(ref) > 1e-9 and 0.0 < c < 1.0:
        assert math.copysign(1, diff) == math.copysign(1, ref)


@given(dims, dims, gammas, unit)
def test_relaxed_is_weaker(v, w, gamma, c):
    space = ModelSpaceParams(v, w).at(c)
    # mu_0 <= mu_1 and c^(2w/n) >= c^2 only ever lower the bound
    assert relaxed_general_bound(space, gamma) <= general_bound(space, gamma) * (1 + 1e-12)


@given(st.integers(3, 10), st.integers(2, 9), gammas, unit)
def test_refined_dominates_relaxed(v, w, gamma, c):
    if v <= w:
        return
    space = ModelSpaceParams(v, w).at(c)
    assert general_bound_refined(space, gamma) >= relaxed_general_bound(space, gamma) * (1 - 1e-12)


def test_refined_needs_v_greater_than_w():
    with pytest.raises(NotApplicableError):
        general_bound_refined(ModelSpaceParams(2, 2).at(0.5), 0.5)


@given(dims, dims, gammas, unit)
def test_combined_is_max(v, w, gamma, c):
    space = ModelSpaceParams(v, w).at(c)
    value = combined_pointwise_bound(space, gamma)
    assert value >= general_bound(space, gamma)
    assert value >= homothety_bound(space)


def test_curvature_comparison():
    p = ModelSpaceParams(2, 3)
    # s_c = 6 - 2 c^2 > 0 on [0, 1]
    assert curvature_comparison_bound(p.at(0.5), 0.75) == pytest.approx((6 - 0.5) / 6 * 0.75 * MU[5])
    with pytest.raises(NotApplicableError):
        curvature_comparison_bound(ModelSpaceParams(3, 2).at(1.0), 0.63)


@pytest.mark.parametrize("gamma", [0.0, 1.01, -1.0])
def test_gamma_range_enforced(gamma):
    with pytest.raises(DomainError):
        general_bound(ModelSpaceParams(2, 2).at(0.5), gamma)


def test_corollary44_equal_dims_polynomial():
    # for v = w the general bound is (c^3 - gamma c^2 + gamma) mu_1
    p = ModelSpaceParams(3, 3)
    for c in (0.1, 0.4, 0.9):
        assert general_bound(p.at(c), 0.7) == pytest.approx((c**3 - 0.7 * c**2 + 0.7) * MU[6])


@pytest.mark.parametrize("v,gamma", [(2, 0.68), (3, 0.5), (4, 0.9)])
def test_corollary44_equals_grid_minimum(v, gamma):
    p = ModelSpaceParams(v, v)
    mu1 = sphere_yamabe(p.n)
    grid_min = min((c**3 - gamma * c**2 + gamma) for c in (i / 100000 for i in range(100001))) * mu1
    res = corollary44_bound(p, gamma)
    assert abs(res.value - grid_min) <= 1e-9 * mu1
    assert res.minimizer_c == pytest.approx(2 * gamma / 3)


@pytest.mark.parametrize("v,w,gamma", [(2, 3, 0.75), (2, 7, 0.747), (2, 8, 0.626), (3, 2, 0.63)])
def test_corollary42_is_grid_minimum_of_relaxed(v, w, gamma):
    p = ModelSpaceParams(v, w)
    mu1 = sphere_yamabe(p.n)
    res = corollary42_bound(p, gamma)
    grid_min = min(relaxed_general_bound(p.at(i / 20000), gamma) for i in range(20001))
    assert res.value <= grid_min + 1e-9 * mu1
    # and it is attained at the stated minimizer
    assert relaxed_general_bound(p.at(res.minimizer_c), gamma) == pytest.approx(res.value, rel=1e-12)


def test_corollary42_printed_ratio():
    res = corollary42_bound(ModelSpaceParams(3, 2), 0.63)
    # A = 6, B = 2: 1 - 6 / (sqrt 6 + sqrt 2)^2
    assert res.ratio == pytest.approx((1 - 6 / (math.sqrt(6) + math.sqrt(2)) ** 2) * 0.63)


def test_corollary_domains():
    with pytest.raises(DomainError):
        corollary44_bound(ModelSpaceParams(2, 3), 0.5)
    with pytest.raises(DomainError):
        corollary42_bound(ModelSpaceParams(1, 3), 0.5)


def test_bound_objective_dispatch():
    p = ModelSpaceParams(4, 2)
    f = bound_objective(BoundFormula.GENERAL, p, 0.5)
    assert f(0.3) == general_bound(p.at(0.3), 0.5)
    assert bound_objective("homothety", p, 0.5)(0.3) == homothety_bound(p.at(0.3))
    with pytest.raises(DomainError):
        bound_objective(BoundFormula.COROLLARY_42, p, 0.5)
    with pytest.raises(NotApplicableError):
        bound_objective(BoundFormula.GENERAL_REFINED_V_GT_W, ModelSpaceParams(2, 2), 0.5)
    with pytest.raises(NotApplicableError):
        bound_objective(BoundFormula.CURVATURE_COMPARISON, p, 0.5)
    with pytest.raises(ValueError):
        bound_objective("no-such-formula", p, 0.5)


@settings(max_examples=50)
@given(dims, dims, gammas)
def test_crossover_grid_sign_change(v, w, gamma):
    # general - homothety changes sign only at c* = gamma^(n/(2w))
    p = ModelSpaceParams(v, w)
    c_star = gamma ** (p.n / (2 * w))
    for i in range(1, 1000):
        c = i / 1000
        if abs(c - c_star) < 1e-9:
            continue
        diff = general_bound(p.at(c), gamma) - homothety_bound(p.at(c))
        scale = sphere_yamabe(p.n)
        if c < c_star:
            assert diff >= -1e-12 * scale
        else:
            assert diff <= 1e-12 * scale
