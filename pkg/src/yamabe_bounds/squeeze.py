"""Radial squeezing map from R^v onto the hyperbolic space H^v_c.

In polar coordinates the map is (t, theta) -> (f_c(t), theta), where f_c is
the inverse of the radius-to-radius volume match

    phi_c(r) = (v * integral_0^r sh_c(t)^(v-1) dt)^(1/v),
    sh_c(t)  = sinh(c t) / c.

Volumes of balls agree, so the map preserves volume, and f_c' <= 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import DomainError, QuadratureError, RootFindingError

__all__ = [
    "SqueezeMap",
    "SqueezeEvaluation",
    "sh",
    "phi",
    "f",
    "f_prime",
    "evaluate",
    "ball_volume_integral",
]

MAX_DEPTH = 50


@dataclass(frozen=True)
class SqueezeMap:
    """Squeezing map for hyperbolic dimension ``v`` and curvature scale ``c``.

    ``c = 0`` is accepted and gives the identity.  ``quadrature_tolerance``
    bounds the adaptive-Simpson error relative to the integral being
    computed.
    """

    v: int
    c: float
    quadrature_tolerance: float = 1e-13

    def __post_init__(self):
        if isinstance(self.v, bool) or int(self.v) != self.v or self.v < 2:
            raise DomainError(f"v must be an integer >= 2, got {self.v!r}")
        c = float(self.c)
        if not 0.0 <= c <= 1.0:
            raise DomainError(f"c must lie in [0, 1], got {self.c!r}")
        if not self.quadrature_tolerance > 0:
            raise DomainError("quadrature_tolerance must be positive")
        object.__setattr__(self, "v", int(self.v))
        object.__setattr__(self, "c", c)

    def phi(self, r: float) -> float:
        return phi(self, r)

    def f(self, r: float) -> float:
        return f(self, r)

    def f_prime(self, r: float) -> float:
        return f_prime(self, r)

    def evaluate(self, r: float) -> "SqueezeEvaluation":
        return evaluate(self, r)


@dataclass(frozen=True)
class SqueezeEvaluation:
    r: float
    f_of_r: float
    f_prime: float
    quad_error: float


def _check_radius(r) -> float:
    r = float(r)
    if not r >= 0.0 or math.isinf(r):
        raise DomainError(f"radius must be a finite non-negative number, got {r!r}")
    return r


def sh(c: float, t: float) -> float:
    """sinh(c t) / c; at c = 0 this is t."""
    if c < 0:
        raise DomainError(f"c must be non-negative, got {c!r}")
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t!r}")
    return kernels.sh(float(c), float(t))


def ball_volume_integral(smap: SqueezeMap, r: float):
    """integral_0^r sh_c(t)^(v-1) dt and its error estimate."""
    r = _check_radius(r)
    p = smap.v - 1
    # scale the tolerance by the flat-space value r^v / v, a lower bound
    tol = smap.quadrature_tolerance * max(r**smap.v / smap.v, 1e-300)
    value, err, evals, ok = kernels.sh_power_integral(smap.c, p, r, tol, MAX_DEPTH)
    if not ok:
        raise QuadratureError(
            f"adaptive Simpson did not converge for v={smap.v}, c={smap.c}, r={r} "
            f"after {evals} evaluations (error estimate {err:.3g})"
        )
    return value, err


def phi(smap: SqueezeMap, r: float) -> float:
    """Radius of the flat ball whose volume equals the hyperbolic ball of radius r."""
    value, _ = ball_volume_integral(smap, r)
    return (smap.v * value) ** (1.0 / smap.v)


def _solve(smap: SqueezeMap, r: float):
    r = _check_radius(r)
    t, err, iterations, status = kernels.invert_ball_volume(
        smap.c, smap.v, r, smap.quadrature_tolerance, MAX_DEPTH
    )
    if status == 1:
        raise QuadratureError(f"quadrature failed while inverting phi at r={r} (v={smap.v}, c={smap.c})")
    if status != 0:
        raise RootFindingError(
            f"no convergence inverting phi at r={r} (v={smap.v}, c={smap.c}) "
            f"after {iterations} iterations"
        )
    return t, err


def f(smap: SqueezeMap, r: float) -> float:
    """The radial profile f_c = phi_c^{-1}, found inside the bracket [0, r]."""
    return _solve(smap, r)[0]


def _derivative(smap: SqueezeMap, r: float, fr: float) -> float:
    if r == 0.0:
        return 1.0
    # r^(v-1) = f'(r) sh_c(f(r))^(v-1)
    return (r / kernels.sh(smap.c, fr)) ** (smap.v - 1)


def f_prime(smap: SqueezeMap, r: float) -> float:
    r = _check_radius(r)
    return _derivative(smap, r, f(smap, r))


def evaluate(smap: SqueezeMap, r: float) -> SqueezeEvaluation:
    fr, err = _solve(smap, r)
    r = float(r)
    return SqueezeEvaluation(r=r, f_of_r=fr, f_prime=_derivative(smap, r, fr), quad_error=err)
