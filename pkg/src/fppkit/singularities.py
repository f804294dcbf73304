"""Cyclic quotient singularities and their discrepancy divisors."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .hj import HJString, hj_eval, hj_expand, uv_sequences


class SingularMatrixError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SingularityType:
    """A point of type 1/q(1, a); ``string`` is the HJ expansion of q/a."""

    q: int
    a: int
    label: str = "p"
    string: HJString = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "string", hj_expand(self.q, self.a))

    @classmethod
    def from_string(cls, entries: Sequence[int], label: str = "p") -> "SingularityType":
        value = hj_eval(entries)
        return cls(value.numerator, value.denominator, label)

    @property
    def length(self) -> int:
        return len(self.string)

    def relabel(self, label: str) -> "SingularityType":
        return SingularityType(self.q, self.a, label)

    def __str__(self) -> str:
        return f"{self.label}: 1/{self.q}(1,{self.a}) = {self.string}"


@dataclass(frozen=True)
class DiscrepancyDivisor:
    coefficients: tuple[Fraction, ...]
    dpk: Fraction
    dp2: Fraction


def intersection_matrix(entries: Sequence[int]) -> list[list[int]]:
    """Tridiagonal matrix of a chain of curves: -n_j on the diagonal, 1 beside it."""
    l = len(entries)
    return [
        [-entries[i] if i == k else (1 if abs(i - k) == 1 else 0) for k in range(l)]
        for i in range(l)
    ]


def chain_determinant(entries: Sequence[int]) -> int:
    d_prev, d = 1, -entries[0]
    for n in entries[1:]:
        d_prev, d = d, -n * d - d_prev
    return d


def solve_tridiagonal(sub, diag, sup, rhs) -> list[Fraction]:
    """Exact Thomas algorithm; ``sub[0]`` and ``sup[-1]`` are ignored.

    No pivoting: every leading minor must be nonzero, which holds for the
    definite chain matrices used here. A zero pivot raises SingularMatrixError.
    """
    n = len(diag)
    c = [Fraction(0)] * n
    d = [Fraction(0)] * n
    for i in range(n):
        denom = Fraction(diag[i]) - (sub[i] * c[i - 1] if i else 0)
        if denom == 0:
            raise SingularMatrixError("zero pivot in tridiagonal solve")
        c[i] = Fraction(sup[i]) / denom if i < n - 1 else Fraction(0)
        d[i] = (rhs[i] - (sub[i] * d[i - 1] if i else 0)) / denom
    x = [Fraction(0)] * n
    x[-1] = d[-1]
    for i in range(n - 2, -1, -1):
        x[i] = d[i] - c[i] * x[i + 1]
    return x


def _dpk(coefficients: Sequence[Fraction], entries: Sequence[int]) -> Fraction:
    return sum((a * (n - 2) for a, n in zip(coefficients, entries)), Fraction(0))


def discrepancy(s: SingularityType) -> DiscrepancyDivisor:
    """Closed form a_j = 1 - (v_j + u_j)/q."""
    uv = uv_sequences(s.string)
    l = len(s.string)
    coefficients = tuple(
        1 - Fraction(uv.v[j] + uv.u[j], uv.q) for j in range(1, l + 1)
    )
    dpk = _dpk(coefficients, s.string.entries)
    return DiscrepancyDivisor(coefficients, dpk, -dpk)


def discrepancy_by_linear_solve(s: SingularityType) -> DiscrepancyDivisor:
    """Solve D.A_j = 2 + A_j^2 on the chain's intersection matrix."""
    entries = s.string.entries
    l = len(entries)
    diag = [-n for n in entries]
    rhs = [2 - n for n in entries]
    coefficients = tuple(solve_tridiagonal([1] * l, diag, [1] * l, rhs))
    m = intersection_matrix(entries)
    dp2 = sum(
        (coefficients[i] * m[i][k] * coefficients[k] for i in range(l) for k in range(l)),
        Fraction(0),
    )
    # D.K_{S'} via adjunction: K.A_j = n_j - 2
    dpk = _dpk(coefficients, entries)
    return DiscrepancyDivisor(coefficients, dpk, dp2)


def local_discriminant_order(s: SingularityType) -> int:
    return abs(chain_determinant(s.string.entries))
