"""Hirzebruch-Jung continued fractions.

A string [n_1, ..., n_l] with every n_j >= 2 encodes the resolution of a
cyclic quotient singularity 1/q(1, a): the value of the fraction is q/a.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence


@dataclass(frozen=True)
class HJString:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(n) for n in self.entries)
        if not entries:
            raise ValueError("HJ string must have at least one entry")
        if any(n < 2 for n in entries):
            raise ValueError(f"HJ string entries must be >= 2, got {list(entries)}")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.entries)) + "]"

    @property
    def value(self) -> Fraction:
        return hj_eval(self.entries)

    @property
    def order(self) -> int:
        return self.value.numerator


@dataclass(frozen=True)
class UVSequences:
    """u_0..u_{l+1} and v_0..v_{l+1}, with u_{l+1} = v_0 = q."""

    u: tuple[int, ...]
    v: tuple[int, ...]
    q: int


def hj_eval(entries: Sequence[int]) -> Fraction:
    """Exact value n_1 - 1/(n_2 - 1/(... - 1/n_l))."""
    entries = HJString(tuple(entries)).entries
    value = Fraction(entries[-1])
    for n in reversed(entries[:-1]):
        value = n - 1 / value
    return value


def hj_expand(q: int, a: int) -> HJString:
    """The admissible string with value q/a (greedy ceiling recursion)."""
    if not (q > a >= 1):
        raise ValueError(f"need q > a >= 1, got q={q}, a={a}")
    if gcd(q, a) != 1:
        raise ValueError(f"q={q} and a={a} are not coprime")
    entries = []
    num, den = q, a
    while den:
        n = -(-num // den)
        entries.append(n)
        num, den = den, n * den - num
    return HJString(tuple(entries))


def parse_fraction_arg(text: str) -> tuple[int, int]:
    """Parse "q/a" (as used on the command line) into integers."""
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"expected q/a, got {text!r}")
    return int(num), int(den)


def uv_sequences(s: HJString | Sequence[int]) -> UVSequences:
    entries = s.entries if isinstance(s, HJString) else HJString(tuple(s)).entries
    l = len(entries)
    u = [0, 1]
    for j in range(1, l + 1):
        u.append(entries[j - 1] * u[j] - u[j - 1])
    # v is filled from the right: v_{l+1} = 0, v_l = 1, v_{j-1} = n_j v_j - v_{j+1}
    v = [0] * (l + 2)
    v[l] = 1
    for j in range(l, 0, -1):
        v[j - 1] = entries[j - 1] * v[j] - v[j + 1]
    return UVSequences(u=tuple(u), v=tuple(v), q=u[l + 1])
