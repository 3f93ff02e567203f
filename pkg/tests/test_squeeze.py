import math

import pytest
from hypothesis import given, settings, strategies as st

from yamabe_bounds.errors import DomainError
from yamabe_bounds.squeeze import SqueezeMap, ball_volume_integral, sh

from .frozen import SQUEEZE3

GRID_R = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0]


def test_sh_values(backend):
    assert sh(1.0, 0.0) == 0.0
    assert sh(1.0, 1.0) == pytest.approx(math.sinh(1.0), rel=1e-15)
    assert sh(0.0, 2.5) == 2.5
    assert sh(1e-9, 3.0) == pytest.approx(3.0, rel=1e-15)


@given(st.floats(min_value=1e-8, max_value=1.0), st.floats(min_value=0.0, max_value=20.0))
def test_sh_matches_definition(c, t):
    ref = math.sinh(c * t) / c
    assert sh(c, t) == pytest.approx(ref, rel=1e-13, abs=1e-300)


def test_sh_domain():
    with pytest.raises(DomainError):
        sh(-1.0, 1.0)
    with pytest.raises(DomainError):
        sh(1.0, -1.0)


@pytest.mark.parametrize("kwargs", [
    {"v": 1, "c": 0.5}, {"v": 2, "c": 1.5}, {"v": 2, "c": -0.1},
    {"v": 2, "c": 0.5, "quadrature_tolerance": 0.0}, {"v": 2.5, "c": 0.5},
])
def test_map_domain(kwargs):
    with pytest.raises(DomainError):
        SqueezeMap(**kwargs)


@pytest.mark.parametrize("r", [-1.0, float("inf"), float("nan")])
def test_radius_domain(r):
    with pytest.raises(DomainError):
        SqueezeMap(2, 1.0).f(r)


@pytest.mark.parametrize("r", [0.0, 0.01, 0.3, 1.0, 2.0, 5.0, 10.0])
def test_phi_closed_form_v2(backend, r):
    # integral_0^r sinh = cosh r - 1
    smap = SqueezeMap(2, 1.0)
    assert abs(smap.phi(r) - math.sqrt(2 * (math.cosh(r) - 1))) <= 1e-10 * max(1.0, smap.phi(r))


@pytest.mark.parametrize("r", [0.1, 1.0, 2.0, 5.0, 10.0])
def test_f_closed_form_v2(backend, r):
    # phi(t) = 2 sinh(t/2), so f(r) = 2 asinh(r/2) and f'(r) = r / sinh(f(r))
    ev = SqueezeMap(2, 1.0).evaluate(r)
    assert ev.f_of_r == pytest.approx(2 * math.asinh(r / 2), rel=1e-12)
    assert ev.f_prime == pytest.approx(1 / math.sqrt(1 + r * r / 4), rel=1e-11)


@pytest.mark.parametrize("key", sorted(SQUEEZE3))
def test_v3_against_oracle(backend, key):
    c, r = key
    f_ref, fp_ref = SQUEEZE3[key]
    ev = SqueezeMap(3, c).evaluate(r)
    assert ev.f_of_r == pytest.approx(f_ref, rel=1e-12)
    assert ev.f_prime == pytest.approx(fp_ref, rel=1e-11)


def test_v3_integral_closed_form(backend):
    c, r = 0.7, 3.0
    value, err = ball_volume_integral(SqueezeMap(3, c), r)
    ref = (math.sinh(2 * c * r) / (4 * c) - r / 2) / c**2
    assert value == pytest.approx(ref, rel=1e-12)
    assert err >= 0.0


def test_origin(backend):
    ev = SqueezeMap(2, 1.0).evaluate(0.0)
    assert ev.f_of_r == 0.0
    assert ev.f_prime == 1.0
    assert SqueezeMap(4, 0.5).phi(0.0) == 0.0


@pytest.mark.parametrize("r", [1e-3, 5e-3, 1e-2])
def test_phi_small_radius(r):
    assert abs(SqueezeMap(3, 1.0).phi(r) - r) <= r**3


def test_round_trip_inverse(backend):
    smap = SqueezeMap(2, 1.0)
    assert smap.f(smap.phi(1.0)) == pytest.approx(1.0, rel=1e-12)


@pytest.mark.parametrize("v", [2, 3, 4])
@pytest.mark.parametrize("c", [0.1, 0.5, 1.0])
def test_volume_preserved_and_contracting(backend, v, c):
    smap = SqueezeMap(v, c)
    for r in GRID_R:
        ev = smap.evaluate(r)
        vol, _ = ball_volume_integral(smap, ev.f_of_r)
        assert abs(r**v / v - vol) <= 1e-8 * (1 + r**v)
        assert 0.0 < ev.f_prime <= 1.0 + 1e-10
        assert ev.f_of_r <= r
        # r <= sh_c(f(r)) from the derivative identity
        assert r <= sh(c, ev.f_of_r) + 1e-10 * (1 + r)


@pytest.mark.parametrize("r", [0.5, 1.0, 2.0, 5.0])
def test_finite_difference_derivative(backend, r):
    smap = SqueezeMap(2, 1.0)
    h = 1e-5
    fd = (smap.f(r + h) - smap.f(r - h)) / (2 * h)
    assert abs(smap.f_prime(r) - fd) <= 1e-6


@pytest.mark.parametrize("r", [0.5, 1.0, 3.0, 10.0])
def test_flat_limit(r):
    smap = SqueezeMap(3, 1e-6)
    assert abs(smap.f(r) - r) <= 1e-6 * r


def test_identity_at_zero_curvature():
    smap = SqueezeMap(4, 0.0)
    assert smap.f(2.0) == 2.0
    assert smap.f_prime(2.0) == 1.0


def test_monotone_profile(backend):
    smap = SqueezeMap(3, 0.8)
    values = [smap.f(0.25 * i) for i in range(41)]
    assert all(a < b for a, b in zip(values, values[1:]))
    ratios = [smap.f(r) / r for r in (1e-3, 1e-2, 1e-1)]
    assert ratios[0] == pytest.approx(1.0, abs=1e-6)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.floats(min_value=0.05, max_value=1.0), st.floats(min_value=0.0, max_value=8.0))
def test_contraction_property(v, c, r):
    ev = SqueezeMap(v, c).evaluate(r)
    assert ev.f_of_r <= r + 1e-12
    assert ev.f_prime <= 1.0 + 1e-10
