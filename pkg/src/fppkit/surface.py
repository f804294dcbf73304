"""Q-homology projective planes with cyclic quotient singularities."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt, prod
from pathlib import Path
from typing import Any

from .singularities import SingularityType, discrepancy, local_discriminant_order

AMPLE, ANTI_AMPLE, OTHER = "ample", "anti-ample", "other"
K_SIGNS = (AMPLE, ANTI_AMPLE, OTHER)


class ModelError(ValueError):
    """A model fails one of the lattice consistency checks."""


@dataclass(frozen=True)
class SurfaceModel:
    name: str
    k2_resolution: Fraction
    singularities: tuple[SingularityType, ...]
    # index of the exceptional lattice in its primitive closure; None if unknown
    c: int | None = None
    k_ample_sign: str = AMPLE

    def __post_init__(self):
        object.__setattr__(self, "k2_resolution", Fraction(self.k2_resolution))
        object.__setattr__(self, "singularities", tuple(self.singularities))
        labels = [p.label for p in self.singularities]
        if len(set(labels)) != len(labels):
            raise ModelError(f"duplicate singular point labels in {labels}")
        if self.c is not None and self.c < 1:
            raise ModelError(f"invalid c: {self.c}")
        if self.k_ample_sign not in K_SIGNS:
            raise ModelError(f"k_ample_sign must be one of {K_SIGNS}")

    def point(self, label: str) -> SingularityType:
        for p in self.singularities:
            if p.label == label:
                return p
        raise KeyError(f"no singular point labelled {label!r} in model {self.name}")

    def with_point(self, label: str, q: int, a: int) -> "SurfaceModel":
        """Copy of the model with one singular point replaced."""
        points = tuple(
            SingularityType(q, a, label) if p.label == label else p
            for p in self.singularities
        )
        return SurfaceModel(self.name, self.k2_resolution, points, self.c, self.k_ample_sign)


@dataclass(frozen=True)
class SurfaceInvariants:
    k2_s: Fraction
    det_r: int
    d: int
    d_prime: int | None
    sqrt_d_prime: int | None = field(default=None)


def _perfect_square_root(n: Fraction | int) -> int | None:
    n = Fraction(n)
    if n.denominator != 1 or n < 0:
        return None
    r = isqrt(n.numerator)
    return r if r * r == n.numerator else None


def k2_of(model: SurfaceModel) -> Fraction:
    return model.k2_resolution + sum(
        (discrepancy(p).dpk for p in model.singularities), Fraction(0)
    )


@lru_cache(maxsize=256)
def compute_invariants(model: SurfaceModel) -> SurfaceInvariants:
    k2 = k2_of(model)
    if model.k_ample_sign == AMPLE and k2 <= 0:
        raise ModelError(f"{model.name}: K_S^2 = {k2} is not positive for ample K_S")
    det_r = prod(local_discriminant_order(p) for p in model.singularities)
    d = det_r * k2
    if d == 0 or _perfect_square_root(d) is None:
        raise ModelError(
            f"{model.name}: not a Q-homology-plane candidate, D = {d} is not a nonzero square"
        )
    d = int(d)
    if model.c is None:
        return SurfaceInvariants(k2, det_r, d, None, None)
    if d % (model.c * model.c):
        raise ModelError(f"{model.name}: invalid c = {model.c}, c^2 does not divide D = {d}")
    d_prime = d // (model.c * model.c)
    return SurfaceInvariants(k2, det_r, d, d_prime, _perfect_square_root(d_prime))


def _points(label_prefix: str, q: int, a: int, count: int, start: int = 1):
    return [SingularityType(q, a, f"{label_prefix}{i}") for i in range(start, start + count)]


def quotient_presets() -> list[SurfaceModel]:
    """Quotients of a fake projective plane by its non-trivial automorphism groups."""
    return [
        SurfaceModel("X/C3", Fraction(3), tuple(_points("y", 3, 2, 3))),
        SurfaceModel("X/C3^2", Fraction(1), tuple(_points("y", 3, 2, 4))),
        SurfaceModel("X/C7", Fraction(0), tuple(_points("y", 7, 5, 3)), c=7),
        # c is not determined for this model; supply it via a model file
        SurfaceModel(
            "X/(7:3)",
            Fraction(0),
            tuple(_points("z", 3, 2, 3)) + (SingularityType(7, 5, "z4"),),
        ),
    ]


def preset(name: str) -> SurfaceModel:
    for model in quotient_presets():
        if model.name == name:
            return model
    names = ", ".join(m.name for m in quotient_presets())
    raise KeyError(f"unknown preset {name!r}; available: {names}")


def smooth_model() -> SurfaceModel:
    """The fake projective plane itself: no singular points, K^2 = 9."""
    return SurfaceModel("X", Fraction(9), (), c=1)


def _parse_rational(value: Any) -> Fraction:
    if isinstance(value, dict):
        return Fraction(int(value["num"]), int(value["den"]))
    if isinstance(value, float):
        raise ModelError("floating point values are not accepted; use an integer, 'p/q' or {num, den}")
    return Fraction(value)


def model_from_dict(doc: dict[str, Any]) -> SurfaceModel:
    try:
        points = tuple(
            SingularityType(int(p["q"]), int(p["a"]), str(p["label"]))
            for p in doc["singularities"]
        )
        return SurfaceModel(
            name=str(doc.get("name", "model")),
            k2_resolution=_parse_rational(doc["k2_resolution"]),
            singularities=points,
            c=None if doc.get("c") is None else int(doc["c"]),
            k_ample_sign=str(doc.get("k_ample_sign", AMPLE)),
        )
    except (KeyError, TypeError) as exc:
        raise ModelError(f"malformed model document: {exc}") from exc


def model_to_dict(model: SurfaceModel) -> dict[str, Any]:
    k2 = model.k2_resolution
    return {
        "name": model.name,
        "k2_resolution": {"num": k2.numerator, "den": k2.denominator},
        "singularities": [{"label": p.label, "q": p.q, "a": p.a} for p in model.singularities],
        "c": model.c,
        "k_ample_sign": model.k_ample_sign,
    }


def load_model(path: str | Path) -> SurfaceModel:
    with open(path) as fh:
        return model_from_dict(json.load(fh))
