"""Intersection numbers E.K and E^2 on the minimal resolution.

A divisor class E is described by its leading coefficient ``m`` (the
coefficient of the generator built from f^*K_S) and its intersection numbers
with the exceptional curves, addressed as (point label, index in string),
indices starting at 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .hj import uv_sequences
from .singularities import discrepancy
from .surface import AMPLE, ANTI_AMPLE, SurfaceModel, compute_invariants

Hits = Mapping[tuple[str, int], int]


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class ExceptionalIncidence:
    m: Fraction
    hits: Mapping[tuple[str, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "m", Fraction(self.m))
        clean = {}
        for (label, j), value in self.hits.items():
            if int(value) != value or value < 0:
                raise ValueError(f"hit {label}:{j} = {value} must be a non-negative integer")
            if value:
                clean[(str(label), int(j))] = int(value)
        object.__setattr__(self, "hits", dict(sorted(clean.items())))

    def hit(self, label: str, j: int) -> int:
        return self.hits.get((label, j), 0)

    def scaled(self, k: int) -> "ExceptionalIncidence":
        return ExceptionalIncidence(self.m * k, {key: v * k for key, v in self.hits.items()})

    def __add__(self, other: "ExceptionalIncidence") -> "ExceptionalIncidence":
        hits = dict(self.hits)
        for key, v in other.hits.items():
            hits[key] = hits.get(key, 0) + v
        return ExceptionalIncidence(self.m + other.m, hits)


def parse_hits(text: str) -> dict[tuple[str, int], int]:
    """Parse ``y1:2=1,y2:1=1`` into {("y1", 2): 1, ("y2", 1): 1}."""
    hits: dict[tuple[str, int], int] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, _, value = item.partition("=")
        label, _, index = key.partition(":")
        if not (label and index and value):
            raise ValueError(f"bad hit {item!r}; expected label:index=value")
        hits[(label, int(index))] = hits.get((label, int(index)), 0) + int(value)
    return hits


def _check_addresses(model: SurfaceModel, inc: ExceptionalIncidence) -> None:
    for label, j in inc.hits:
        p = model.point(label)
        if not 1 <= j <= p.length:
            raise KeyError(f"{label} has {p.length} exceptional curves, no index {j}")


@lru_cache(maxsize=None)
def local_pairing_matrix(entries: tuple[int, ...]) -> tuple[tuple[Fraction, ...], ...]:
    """G_jk = v_max(j,k) u_min(j,k) / q: the inverse of minus the chain matrix."""
    uv = uv_sequences(entries)
    l = len(entries)
    return tuple(
        tuple(
            Fraction(uv.v[max(j, k)] * uv.u[min(j, k)], uv.q)
            for k in range(1, l + 1)
        )
        for j in range(1, l + 1)
    )


def model_pairing(model: SurfaceModel) -> dict[str, tuple[tuple[Fraction, ...], ...]]:
    return {p.label: local_pairing_matrix(p.string.entries) for p in model.singularities}


def ek(model: SurfaceModel, inc: ExceptionalIncidence) -> Fraction:
    _check_addresses(model, inc)
    inv = compute_invariants(model)
    if inv.sqrt_d_prime is None:
        raise FormulaError(f"D-prime not square for model {model.name} (D' = {inv.d_prime})")
    total = inc.m / inv.sqrt_d_prime * inv.k2_s
    for label, j in inc.hits:
        a_j = discrepancy(model.point(label)).coefficients[j - 1]
        total -= a_j * inc.hits[(label, j)]
    return total


def e2(model: SurfaceModel, inc: ExceptionalIncidence) -> Fraction:
    _check_addresses(model, inc)
    inv = compute_invariants(model)
    if inv.d_prime is None:
        raise FormulaError(f"model {model.name} has no primitive-closure index c, D' unknown")
    total = inc.m * inc.m / inv.d_prime * inv.k2_s
    for p in model.singularities:
        g = local_pairing_matrix(p.string.entries)
        x = [inc.hit(p.label, j) for j in range(1, p.length + 1)]
        for j, xj in enumerate(x):
            if xj:
                total -= xj * sum((g[j][k] * xk for k, xk in enumerate(x) if xk), Fraction(0))
    return total


def e2_two_component(model: SurfaceModel, inc: ExceptionalIncidence) -> Fraction:
    """E^2 for classes meeting at most two components of each fibre of f."""
    _check_addresses(model, inc)
    inv = compute_invariants(model)
    if inv.d_prime is None:
        raise FormulaError(f"model {model.name} has no primitive-closure index c, D' unknown")
    total = inc.m * inc.m / inv.d_prime * inv.k2_s
    for p in model.singularities:
        touched = sorted(j for (label, j) in inc.hits if label == p.label)
        if len(touched) > 2:
            raise FormulaError(f"{p.label}: {len(touched)} components hit, at most 2 allowed")
        if not touched:
            continue
        uv = uv_sequences(p.string)
        s = touched[0]
        t = touched[1] if len(touched) == 2 else None
        xs = inc.hit(p.label, s)
        total -= Fraction(uv.v[s] * uv.u[s], uv.q) * xs * xs
        if t is not None:
            xt = inc.hit(p.label, t)
            total -= Fraction(uv.v[t] * uv.u[t], uv.q) * xt * xt
            total -= Fraction(2 * uv.v[t] * uv.u[s], uv.q) * xs * xt
    return total


def required_m_sign(model: SurfaceModel) -> int:
    """Sign forced on m for effective classes not supported on the exceptional locus."""
    return {AMPLE: 1, ANTI_AMPLE: -1}.get(model.k_ample_sign, 0)


def requires_positive_m(model: SurfaceModel) -> bool:
    return required_m_sign(model) == 1


def effective_sign_ok(model: SurfaceModel, inc: ExceptionalIncidence) -> bool:
    """Whether ``inc`` may be an effective class not contracted by f."""
    sign = required_m_sign(model)
    return sign == 0 or inc.m * sign > 0


# -- the three-point 1/7(1,5) model -------------------------------------------------

def _require_prop3_model(model: SurfaceModel) -> list[str]:
    points = model.singularities
    if len(points) != 3 or any(p.string.entries != (2, 2, 3) for p in points):
        raise ValueError(f"model {model.name} is not three points of type 1/7(1,5)")
    return [p.label for p in points]


def b_curve_incidence(
    labels: list[str], k_column: tuple[int, int, int], j: int, reversed_order: bool = False
) -> ExceptionalIncidence:
    """Incidence of the fibre component B_j (j = 1, 2, 3) of the I_9 cycle.

    In the cycle A11, A12, B1, A21, A22, B2, A31, A32, B3 the curve B_j meets
    A_j2 and A_{j+1},1; B_j . A_i3 = k_ij. With ``reversed_order`` the chains
    sit the other way round in the cycle and B_j meets A_j1 and A_{j+1},2.
    """
    nxt = labels[j % 3]
    here = labels[j - 1]
    hits = {(label, 3): k for label, k in zip(labels, k_column)}
    if reversed_order:
        hits[(here, 1)] = 1
        hits[(nxt, 2)] = 1
    else:
        hits[(here, 2)] = 1
        hits[(nxt, 1)] = 1
    return ExceptionalIncidence(sum(k_column) + 1, hits)


def specialized_b_curve_equation(
    model: SurfaceModel, k_column: tuple[int, int, int], j: int
) -> tuple[int, int]:
    """Both sides of m_j^2 + 14 = 3 sum k_ij^2 + 11 + 4 k_jj + 2 k_{j+1,j}.

    Indices wrap, so k_{4,3} = k_{1,3}.
    """
    _require_prop3_model(model)
    if j not in (1, 2, 3):
        raise ValueError(f"column index must be 1, 2 or 3, got {j}")
    k = tuple(int(x) for x in k_column)
    m = sum(k) + 1
    lhs = m * m + 14
    rhs = 3 * sum(x * x for x in k) + 11 + 4 * k[j - 1] + 2 * k[j % 3]
    return lhs, rhs


def reversed_b_curve_equation(k_column: tuple[int, int, int], j: int) -> tuple[int, int]:
    """The same quadratic for the reversed cycle: 2 k_jj + 4 k_{j+1,j}."""
    k = tuple(int(x) for x in k_column)
    m = sum(k) + 1
    return m * m + 14, 3 * sum(x * x for x in k) + 11 + 2 * k[j - 1] + 4 * k[j % 3]


def _totals(inc: ExceptionalIncidence, labels=None) -> tuple[int, int, int]:
    labels = labels or sorted({label for label, _ in inc.hits})
    return tuple(sum(inc.hit(label, j) for label in labels) for j in (1, 2, 3))


def prop3_divisibility(inc: ExceptionalIncidence, labels=None) -> bool:
    """sum_i (E.A_i1 + 2 E.A_i2) is divisible by 3."""
    t1, t2, _ = _totals(inc, labels)
    return (t1 + 2 * t2) % 3 == 0


def prop3_sum_bound(inc: ExceptionalIncidence, labels=None) -> bool:
    """sum_i (E.A_i1 + E.A_i2 + E.A_i3) >= 3."""
    return sum(_totals(inc, labels)) >= 3
