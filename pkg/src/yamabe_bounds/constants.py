"""Closed-form constants: Gamma, sphere volumes, sphere Yamabe constants.

Everything here is computed on demand from its formula; nothing is
tabulated.  All arithmetic is IEEE double precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "SphereConstant",
    "gamma_function",
    "sphere_volume",
    "sphere_yamabe",
    "sphere_constant",
    "a_n",
    "p_n",
    "wu_manifold_yamabe",
    "s3xs3_yamabe",
    "hp_normalized_volume",
    "hp_volume_ratio",
    "hp_volume_ratio_exact",
]

def gamma_function(x: float) -> float:
    """Gamma function for positive real ``x`` (``math.gamma`` with domain checks).

    Raises:
        DomainError: if ``x`` is not a positive finite number, or Gamma(x)
            overflows a double (x > 171.6).
    """
    x = float(x)
    if not (x > 0.0) or math.isinf(x):
        raise DomainError(f"gamma_function requires x > 0, got {x!r}")
    try:
        return math.gamma(x)
    except OverflowError:
        raise DomainError(f"Gamma({x!r}) overflows double precision") from None


def _require_int(name: str, value, minimum: int) -> int:
    if isinstance(value, bool) or int(value) != value:
        raise DomainError(f"{name} must be an integer, got {value!r}")
    value = int(value)
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}")
    return value


def sphere_volume(w: int) -> float:
    """Volume of the round unit sphere S^w: 2 pi^((w+1)/2) / Gamma((w+1)/2)."""
    w = _require_int("w", w, 1)
    return 2.0 * math.pi ** ((w + 1) / 2.0) / gamma_function((w + 1) / 2.0)


def sphere_yamabe(n: int) -> float:
    """Yamabe constant of the round sphere, n(n-1) * vol(S^n)^(2/n)."""
    n = _require_int("n", n, 3)
    return n * (n - 1) * sphere_volume(n) ** (2.0 / n)


@dataclass(frozen=True)
class SphereConstant:
    n: int
    volume: float
    yamabe: float


def sphere_constant(n: int) -> SphereConstant:
    return SphereConstant(n=n, volume=sphere_volume(n), yamabe=sphere_yamabe(n))


def a_n(n: int) -> float:
    """Conformal Laplacian coefficient 4(n-1)/(n-2)."""
    n = _require_int("n", n, 3)
    return 4.0 * (n - 1) / (n - 2)


def p_n(n: int) -> float:
    """Critical Sobolev exponent 2n/(n-2)."""
    n = _require_int("n", n, 3)
    return 2.0 * n / (n - 2)


def wu_manifold_yamabe() -> float:
    """Yamabe constant of the Einstein metric on SU(3)/SO(3)."""
    return 30.0 * (math.sqrt(3.0) / 8.0 * math.pi**3) ** (2.0 / 5.0)


def s3xs3_yamabe() -> float:
    """Yamabe constant of the product of two round 3-spheres."""
    return 12.0 * (2.0 * math.pi**2) ** (2.0 / 3.0)


def hp_normalized_volume(n: int) -> float:
    """Volume of HP^n rescaled to have the scalar curvature of S^(4n).

    The Hopf-submersion metric has volume vol(S^(4n+3)) / vol(S^3); the
    rescaling multiplies it by ((4n+8)/(4n-1))^(2n).
    """
    n = _require_int("n", n, 1)
    scale = ((4.0 * n + 8.0) / (4.0 * n - 1.0)) ** (2 * n)
    return scale * sphere_volume(4 * n + 3) / sphere_volume(3)


def hp_volume_ratio(n: int) -> float:
    """hp_normalized_volume(n) / vol(S^(4n)) in floating point."""
    return hp_normalized_volume(n) / sphere_volume(4 * n)


def hp_volume_ratio_exact(n: int) -> Fraction:
    """The same ratio as an exact rational number.

    The powers of pi cancel: vol(S^(4n+3)) / (vol(S^3) vol(S^(4n)))
    equals (4n)! / (2 (2n+1)! (2n)! 16^n).
    """
    n = _require_int("n", n, 1)
    spheres = Fraction(
        math.factorial(4 * n),
        2 * math.factorial(2 * n + 1) * math.factorial(2 * n) * 16**n,
    )
    return Fraction(4 * n + 8, 4 * n - 1) ** (2 * n) * spheres
