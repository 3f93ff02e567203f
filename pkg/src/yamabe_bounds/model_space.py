"""Parameters of the model space H^v_c x S^w and derived scalars."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "ModelSpaceParams",
    "CurvedModelSpace",
    "InterpolationWeights",
    "scalar_curvature",
    "interpolation_weights",
    "weights_satisfy_constraints",
    "constraint_residuals",
    "crossover_c",
]

CONSTRAINT_TOL = 1e-12


@dataclass(frozen=True)
class ModelSpaceParams:
    """Dimensions of the hyperbolic factor (v) and the sphere factor (w)."""

    v: int
    w: int

    def __post_init__(self):
        for name in ("v", "w"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value or value < 1:
                raise DomainError(f"{name} must be a positive integer, got {value!r}")
            object.__setattr__(self, name, int(value))

    @classmethod
    def from_surgery(cls, n: int, k: int) -> "ModelSpaceParams":
        """Model space for the surgery constant Lambda_{n,k} (v = k+1, w = n-k-1)."""
        if k < 0 or k > n - 3:
            raise DomainError(f"need 0 <= k <= n-3, got n={n}, k={k}")
        return cls(v=k + 1, w=n - k - 1)

    @property
    def n(self) -> int:
        return self.v + self.w

    @property
    def k(self) -> int:
        return self.v - 1

    @property
    def hyperbolic_weight(self) -> int:
        """v(v-1)."""
        return self.v * (self.v - 1)

    @property
    def sphere_weight(self) -> int:
        """w(w-1), the scalar curvature of the round S^w."""
        return self.w * (self.w - 1)

    def require_surgery_range(self) -> None:
        if self.n < 3 or self.w < 2:
            raise DomainError(
                f"(v, w) = ({self.v}, {self.w}) is outside the surgery range n >= 3, w >= 2"
            )

    def at(self, c: float) -> "CurvedModelSpace":
        return CurvedModelSpace(self, c)


@dataclass(frozen=True)
class CurvedModelSpace:
    params: ModelSpaceParams
    c: float

    def __post_init__(self):
        c = float(self.c)
        if not 0.0 <= c <= 1.0:
            raise DomainError(f"curvature scale c must lie in [0, 1], got {self.c!r}")
        object.__setattr__(self, "c", c)

    @property
    def v(self) -> int:
        return self.params.v

    @property
    def w(self) -> int:
        return self.params.w

    @property
    def n(self) -> int:
        return self.params.n


@dataclass(frozen=True)
class InterpolationWeights:
    lambda0: float
    tau0: float


def scalar_curvature(space: CurvedModelSpace) -> float:
    """s_c = w(w-1) - c^2 v(v-1); negative when the hyperbolic factor dominates."""
    p = space.params
    return p.sphere_weight - space.c**2 * p.hyperbolic_weight


def interpolation_weights(space: CurvedModelSpace) -> InterpolationWeights:
    """Intersection of the lines lambda + tau = 1 and lambda c^2 s_1 + tau s_0 = s_c.

    Written as c^2 v(v-1) / ((1-c^2) w(w-1) + c^2 v(v-1)), which agrees with
    the c^-2 form on (0, 1) and extends continuously to lambda0(0) = 0 and
    lambda0(1) = 1.
    """
    p = space.params
    c = space.c
    if c == 0.0:
        lam = 0.0
    elif c == 1.0:
        lam = 1.0
    else:
        c2 = c * c
        a = c2 * p.hyperbolic_weight
        lam = a / ((1.0 - c2) * p.sphere_weight + a)
    return InterpolationWeights(lambda0=lam, tau0=1.0 - lam)


def constraint_residuals(space: CurvedModelSpace, lam: float, tau: float):
    """Signed residuals of (lambda + tau - 1, lambda c^2 s_1 + tau s_0 - s_c).

    Both must be <= 0 for an admissible pair.
    """
    p = space.params
    s0 = float(p.sphere_weight)
    s1 = float(p.sphere_weight - p.hyperbolic_weight)
    sc = scalar_curvature(space)
    return lam + tau - 1.0, lam * space.c**2 * s1 + tau * s0 - sc


def weights_satisfy_constraints(space: CurvedModelSpace, lam: float, tau: float) -> bool:
    if lam < 0 or tau < 0:
        raise DomainError(f"weights must be non-negative, got ({lam}, {tau})")
    r_sum, r_curv = constraint_residuals(space, lam, tau)
    tol = CONSTRAINT_TOL * max(1.0, abs(scalar_curvature(space)))
    return r_sum <= tol and r_curv <= tol


def crossover_c(params: ModelSpaceParams, gamma: float) -> float:
    """The c at which c^(2w/n) reaches gamma, i.e. gamma^(n/(2w)).

    Below it the interpolation bound is the stronger one, above it the
    homothety bound is.
    """
    if not 0.0 < gamma <= 1.0:
        raise DomainError(f"gamma must lie in (0, 1], got {gamma!r}")
    return gamma ** (params.n / (2.0 * params.w))
