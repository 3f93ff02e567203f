"""Lower bounds for conformal Yamabe constants of H^v_c x S^w.

The bounds feed surgery constants Lambda_{n,k} and from there lower bounds
for the smooth Yamabe (sigma) invariant of simply-connected and
2-connected manifolds in low dimensions.
"""
from .bounds import BoundFormula, BoundResult
from .constants import sphere_volume, sphere_yamabe
from .errors import (
    DomainError,
    MissingConstantError,
    NotApplicableError,
    NumericalError,
    YamabeBoundsError,
)
from .kernels import BACKEND
from .model_space import CurvedModelSpace, ModelSpaceParams
from .mu_zero import ConstantRegistry, effective_gamma, load_registry, registry_default
from .optimizer import MinimizationConfig, minimize_bound
from .squeeze import SqueezeMap
from .tables import build_table1, build_table_tn, sigma_bounds

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundFormula",
    "BoundResult",
    "ConstantRegistry",
    "CurvedModelSpace",
    "DomainError",
    "MinimizationConfig",
    "MissingConstantError",
    "ModelSpaceParams",
    "NotApplicableError",
    "NumericalError",
    "SqueezeMap",
    "YamabeBoundsError",
    "build_table1",
    "build_table_tn",
    "effective_gamma",
    "load_registry",
    "minimize_bound",
    "registry_default",
    "sigma_bounds",
    "sphere_volume",
    "sphere_yamabe",
]
