"""Enumeration of the intersection matrices k_ij = A_i3 . B_j of the I_9 fibre.

The resolution of Y = X/C7 carries three chains A_i1 - A_i2 - A_i3 of type
[2,2,3] and an elliptic fibration whose I_9 fibre is the cycle
A11, A12, B1, A21, A22, B2, A31, A32, B3. Given the elliptic case (a, b) and
the multiplicity mu of that fibre, every row of (k_ij) sums to n/mu - 1 where
the general fibre is numerically n K.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .intersection import (
    b_curve_incidence,
    e2,
    ek,
    prop3_divisibility,
    prop3_sum_bound,
    reversed_b_curve_equation,
    specialized_b_curve_equation,
)
from .surface import SurfaceModel, preset

# general fibre is numerically FIBER_K_MULTIPLE[case] * K
FIBER_K_MULTIPLE = {(2, 3): 6, (2, 4): 4, (3, 3): 3}

Matrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]


def parse_case(case) -> tuple[int, int]:
    if isinstance(case, str):
        case = tuple(int(x) for x in case.replace("(", "").replace(")", "").split(","))
    case = tuple(case)
    if case not in FIBER_K_MULTIPLE:
        raise ValueError(f"unsupported elliptic case {case}; expected one of {sorted(FIBER_K_MULTIPLE)}")
    return case


def candidate_multiplicities(case) -> tuple[int, ...]:
    """Multiplicities a fibre of an (a, b)-elliptic surface can have."""
    a, b = parse_case(case)
    return tuple(sorted({1, a, b}))


@dataclass(frozen=True)
class FiberScenario:
    case: tuple[int, int]
    mu: int
    reversed_order: bool = False
    n: int = field(init=False)
    row_sum: int = field(init=False)

    def __post_init__(self):
        case = parse_case(self.case)
        object.__setattr__(self, "case", case)
        n = FIBER_K_MULTIPLE[case]
        if self.mu not in candidate_multiplicities(case) or n % self.mu:
            raise ValueError(
                f"multiplicity {self.mu} impossible for case {case}; "
                f"candidates are {candidate_multiplicities(case)}"
            )
        object.__setattr__(self, "n", n)
        # A_i3 . F_0 = n/mu = k_i1 + k_i2 + k_i3 + 1, since K . A_i3 = 1
        object.__setattr__(self, "row_sum", n // self.mu - 1)


@dataclass(frozen=True)
class FiberSolution:
    k: Matrix
    m: tuple[int, int, int]

    def column(self, j: int) -> tuple[int, int, int]:
        return tuple(self.k[i][j - 1] for i in range(3))


def _compositions(total: int, parts: int = 3) -> list[tuple[int, ...]]:
    return [c for c in itertools.product(range(total + 1), repeat=parts) if sum(c) == total]


def _candidates(scenario: FiberScenario) -> Iterator[Matrix]:
    rows = _compositions(scenario.row_sum)
    return itertools.product(rows, rows, rows)


def _columns(k: Matrix) -> list[tuple[int, int, int]]:
    return [tuple(k[i][j] for i in range(3)) for j in range(3)]


def _labels(model: SurfaceModel) -> list[str]:
    return [p.label for p in model.singularities]


@lru_cache(maxsize=None)
def _column_reasons(model: SurfaceModel, reversed_order: bool, col, j: int) -> tuple[str, ...]:
    labels = _labels(model)
    inc = b_curve_incidence(labels, col, j, reversed_order)
    reasons = []
    if not prop3_sum_bound(inc, labels):
        reasons.append("prop3_sum_bound")
    if not prop3_divisibility(inc, labels):
        reasons.append("prop3_divisibility")
    if reversed_order:
        lhs, rhs = reversed_b_curve_equation(col, j)
    else:
        lhs, rhs = specialized_b_curve_equation(model, col, j)
    if lhs != rhs:
        reasons.append("quadratic")
    return tuple(reasons)


def rejection_reasons(scenario: FiberScenario, k: Matrix, model: SurfaceModel | None = None) -> list[str]:
    """Names of the constraints a candidate matrix violates (empty if none)."""
    model = model or preset("X/C7")
    reasons = set()
    for j, col in enumerate(_columns(k), start=1):
        reasons.update(_column_reasons(model, scenario.reversed_order, col, j))
    return sorted(reasons)


def verify_solution(scenario: FiberScenario, sol: FiberSolution, model: SurfaceModel | None = None) -> bool:
    """Recompute B_j.K = 0 and B_j^2 = -2 from the general formulas."""
    model = model or preset("X/C7")
    labels = _labels(model)
    for j, col in enumerate(_columns(sol.k), start=1):
        inc = b_curve_incidence(labels, col, j, scenario.reversed_order)
        if ek(model, inc) != 0 or e2(model, inc) != -2:
            return False
    return True


def solve(scenario: FiberScenario, model: SurfaceModel | None = None) -> list[FiberSolution]:
    """All matrices meeting the row sums, the quadratic and the (-2)-curve bounds.

    Output is in lexicographic order of (k11, k12, ..., k33).
    """
    model = model or preset("X/C7")
    solutions = []
    for k in _candidates(scenario):
        if rejection_reasons(scenario, k, model):
            continue
        sol = FiberSolution(k, tuple(sum(col) + 1 for col in _columns(k)))
        if not verify_solution(scenario, sol, model):
            raise AssertionError(f"specialized and general formulas disagree on {k}")
        solutions.append(sol)
    return solutions


def rotate(k: Matrix) -> Matrix:
    """Simultaneous rotation (A_i3, B_j) -> (A_{i+1},3, B_{j+1})."""
    return tuple(tuple(k[(i - 1) % 3][(j - 1) % 3] for j in range(3)) for i in range(3))


def reverse_relabel(k: Matrix) -> Matrix:
    """Relabelling that reads the I_9 cycle backwards: k'_ij = k_{-i, -j-1}."""
    return tuple(tuple(k[(-i) % 3][(-j - 1) % 3] for j in range(3)) for i in range(3))


def symmetric_solutions(scenario: FiberScenario, model: SurfaceModel | None = None) -> list[FiberSolution]:
    return [s for s in solve(scenario, model) if rotate(s.k) == s.k]


@dataclass(frozen=True)
class MultiplicityVerdict:
    mu: int
    status: str  # "combinatorially-infeasible" | "excluded-by-torsion-argument" | "admissible"
    solutions: int
    detail: str


def exclusion_report(case) -> list[MultiplicityVerdict]:
    """Classify every candidate multiplicity of the I_9 fibre."""
    from .classes import NoContradiction, multiplicity2_exclusion

    case = parse_case(case)
    verdicts = []
    for mu in candidate_multiplicities(case):
        scenario = FiberScenario(case, mu)
        sols = solve(scenario)
        if not sols:
            reasons = Counter()
            for k in _candidates(scenario):
                reasons.update(rejection_reasons(scenario, k))
            total = len(_compositions(scenario.row_sum)) ** 3
            universal = sorted(r for r, c in reasons.items() if c == total)
            detail = f"no matrix with row sum {scenario.row_sum}; violated by every candidate: {', '.join(universal) or 'none'}"
            verdicts.append(MultiplicityVerdict(mu, "combinatorially-infeasible", 0, detail))
            continue
        try:
            cert = multiplicity2_exclusion(case, mu)
        except NoContradiction:
            verdicts.append(MultiplicityVerdict(mu, "admissible", len(sols), "no contradiction derivable"))
        else:
            verdicts.append(
                MultiplicityVerdict(mu, "excluded-by-torsion-argument", len(sols), cert.contradiction)
            )
    return verdicts


def admissible_multiplicities(case) -> set[int]:
    return {v.mu for v in exclusion_report(case) if v.status == "admissible"}
