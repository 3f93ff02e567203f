"""Lower bounds gamma <= mu(R^v x S^w) / mu(S^n) and the constant registry.

Published ratios are stored exactly as printed by their sources; the only
ratio computed here is the product-formula bound for w = 2, v >= 4.
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from .constants import a_n, sphere_yamabe
from .errors import DomainError, MissingConstantError
from .model_space import ModelSpaceParams

__all__ = [
    "GammaInput",
    "Constant",
    "ConstantRegistry",
    "registry_default",
    "product_formula_gamma",
    "product_formula_mu0",
    "effective_gamma",
    "load_registry",
    "PRODUCT_FORMULA_SOURCE",
]

PRODUCT_FORMULA_SOURCE = (
    "surgery product formula for R^(n-3) x (R x S^2), "
    "using mu(R^(n-3)) = mu(S^(n-3)) and mu(R x S^2) = mu(S^3)"
)

_PAIR_KEY = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*$")


@dataclass(frozen=True)
class GammaInput:
    params: ModelSpaceParams
    gamma: float
    source: str

    def __post_init__(self):
        if not 0.0 < self.gamma <= 1.0:
            raise DomainError(f"gamma must lie in (0, 1], got {self.gamma!r}")
        if not self.source:
            raise DomainError("gamma input needs a non-empty source")


@dataclass(frozen=True)
class Constant:
    """A named external constant together with where it comes from."""

    key: str
    value: float
    source: str


def _frozen(mapping):
    return MappingProxyType(dict(mapping))


@dataclass(frozen=True)
class ConstantRegistry:
    entries: Mapping[tuple, GammaInput] = field(default_factory=dict)
    extra: Mapping[str, Constant] = field(default_factory=dict)

    def __post_init__(self):
        for key, entry in self.entries.items():
            if key != (entry.params.v, entry.params.w):
                raise DomainError(f"registry key {key} does not match entry {entry.params}")
        for key, const in self.extra.items():
            if key != const.key:
                raise DomainError(f"extra key {key!r} does not match constant {const.key!r}")
            if not const.source:
                raise DomainError(f"extra constant {key!r} needs a source")
        object.__setattr__(self, "entries", _frozen(self.entries))
        object.__setattr__(self, "extra", _frozen(self.extra))

    @classmethod
    def empty(cls) -> "ConstantRegistry":
        return cls()

    def gamma(self, v: int, w: int) -> GammaInput:
        try:
            return self.entries[(v, w)]
        except KeyError:
            raise MissingConstantError(f"gamma({v},{w})") from None

    def constant(self, key: str) -> Constant:
        try:
            return self.extra[key]
        except KeyError:
            raise MissingConstantError(key, f"registry has no extra constant {key!r}") from None

    def get_constant(self, key: str):
        return self.extra.get(key)

    def merged(self, other: "ConstantRegistry") -> "ConstantRegistry":
        """Entries of ``other`` override entries of ``self``."""
        return ConstantRegistry(
            entries={**self.entries, **other.entries},
            extra={**self.extra, **other.extra},
        )

    def to_json_dict(self) -> dict:
        out = {
            f"{v},{w}": {"gamma": e.gamma, "source": e.source}
            for (v, w), e in sorted(self.entries.items())
        }
        out["extra"] = {
            k: {"value": c.value, "source": c.source} for k, c in sorted(self.extra.items())
        }
        return out

    @classmethod
    def from_json_dict(cls, data) -> "ConstantRegistry":
        if not isinstance(data, dict):
            raise DomainError("registry file must contain a JSON object")
        entries = {}
        extra = {}
        for key, value in data.items():
            if key == "extra":
                if not isinstance(value, dict):
                    raise DomainError("'extra' must be a JSON object")
                for name, item in value.items():
                    extra[name] = _parse_extra(name, item)
                continue
            match = _PAIR_KEY.match(key)
            if match is None:
                raise DomainError(f"unknown registry key {key!r} (expected 'v,w' or 'extra')")
            v, w = int(match.group(1)), int(match.group(2))
            if (v, w) in entries:
                raise DomainError(f"duplicate registry entry for ({v},{w})")
            if not isinstance(value, dict):
                raise DomainError(f"entry {key!r} must be an object")
            unknown = set(value) - {"gamma", "source"}
            if unknown:
                raise DomainError(f"entry {key!r} has unknown keys {sorted(unknown)}")
            if "gamma" not in value or "source" not in value:
                raise DomainError(f"entry {key!r} needs both 'gamma' and 'source'")
            entries[(v, w)] = GammaInput(
                ModelSpaceParams(v, w), _number(value["gamma"], key), str(value["source"])
            )
        return cls(entries=entries, extra=extra)


def _number(value, where) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DomainError(f"{where}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{where}: value must be finite")
    return value


def _parse_extra(name, item) -> Constant:
    if isinstance(item, dict):
        unknown = set(item) - {"value", "source"}
        if unknown:
            raise DomainError(f"extra {name!r} has unknown keys {sorted(unknown)}")
        if "value" not in item or not item.get("source"):
            raise DomainError(f"extra {name!r} needs 'value' and a non-empty 'source'")
        return Constant(name, _number(item["value"], name), str(item["source"]))
    return Constant(name, _number(item, name), "registry file")


def load_registry(path, base: ConstantRegistry | None = None) -> ConstantRegistry:
    """Read a registry JSON file; with ``base`` given, the file overrides it."""
    with open(Path(path), encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DomainError(f"registry file {path} is not valid JSON: {exc}") from None
    loaded = ConstantRegistry.from_json_dict(data)
    return base.merged(loaded) if base is not None else loaded


_DEFAULT_GAMMAS = (
    (2, 2, 0.68, "Petean-Ruiz 2011, Theorem 1.2: mu(R^2 x S^2) >= 0.68 mu(S^4)"),
    (2, 3, 0.75, "Petean-Ruiz 2013, Theorem 1.4: mu(R^2 x S^3) >= 0.75 mu(S^5)"),
    (2, 7, 0.747, "Petean-Ruiz 2013, Theorem 1.6: mu(R^2 x S^7) >= 0.747 mu(S^9)"),
    (2, 8, 0.626, "Petean-Ruiz 2013, Theorem 1.6: mu(R^2 x S^8) >= 0.626 mu(S^10)"),
    (3, 2, 0.63, "Petean-Ruiz 2013, Theorem 1.4: mu(R^3 x S^2) >= 0.63 mu(S^5)"),
    (4, 2, 0.56885, "product formula, case v >= 4, w = 2: mu(R^4 x S^2) >= 0.56885 mu(S^6)"),
)

_DEFAULT_EXTRAS = (
    ("min_lambda_9_2_5", 109.4,
     "surgery product formula: min Lambda_{9,k}, k=2..5 > 109.4"),
    ("min_lambda_10_2_6", 126.4,
     "surgery product formula: min Lambda_{10,k}, k=2..6 > 126.4"),
    ("s1_lower", 138.57,
     "Petean 2009, Theorem 1.2: sigma(HP^2 x S^1) >= mu(HP^2 x R) >= 0.9370 mu(S^9)"),
    ("s2_lower", 97.3,
     "Petean-Ruiz 2013, example after Theorem 1.7: "
     "sigma(HP^2 x T^2) >= mu(HP^2 x R^2) >= 0.59 mu(S^10) > 97.3"),
    ("t_7", 74.5, "published bound for 2-connected manifolds, dimension 7"),
    ("t_8", 92.2, "published bound for 2-connected manifolds, dimension 8"),
    ("t_11", 135.9, "published bound for 2-connected manifolds, dimension 11"),
)


def registry_default() -> ConstantRegistry:
    entries = {
        (v, w): GammaInput(ModelSpaceParams(v, w), g, src) for v, w, g, src in _DEFAULT_GAMMAS
    }
    extra = {key: Constant(key, value, src) for key, value, src in _DEFAULT_EXTRAS}
    return ConstantRegistry(entries=entries, extra=extra)


def product_formula_mu0(n: int) -> float:
    """Lower bound for mu(R^(n-2) x S^2) in absolute units."""
    if isinstance(n, bool) or int(n) != n or n < 6:
        raise DomainError(f"product formula needs n >= 6 (v = n-2 >= 4, w = 2), got {n!r}")
    n = int(n)
    m = n - 3
    coefficient = n * a_n(n) / (24.0 ** (3.0 / n) * (m * a_n(m)) ** (m / n))
    return coefficient * sphere_yamabe(m) ** (m / n) * sphere_yamabe(3) ** (3.0 / n)


def product_formula_gamma(n: int) -> GammaInput:
    gamma = product_formula_mu0(n) / sphere_yamabe(n)
    return GammaInput(ModelSpaceParams(n - 2, 2), gamma, PRODUCT_FORMULA_SOURCE)


def effective_gamma(params: ModelSpaceParams, registry: ConstantRegistry) -> GammaInput:
    """Registry entry if present, else the product formula where it applies."""
    if params.v < 2 or params.w < 2:
        raise DomainError(f"need v, w >= 2, got ({params.v}, {params.w})")
    entry = registry.entries.get((params.v, params.w))
    if entry is not None:
        return entry
    if params.w == 2 and params.v >= 4:
        return product_formula_gamma(params.n)
    raise MissingConstantError(
        f"gamma({params.v},{params.w})",
        f"no gamma available for (v, w) = ({params.v}, {params.w}): only the "
        "w = 2, v >= 4 case is computable here; other pairs (e.g. v, w >= 3) "
        "need a published value in the registry",
    )
