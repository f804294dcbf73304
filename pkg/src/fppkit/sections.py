"""Linear independence of products of sections by evaluation at marked points.

A section is known only through the set of marked points where it vanishes.
A product g_a g_b is nonzero at a marked point exactly when neither factor
vanishes there. If some point sees exactly one surviving product as nonzero,
the coefficient of that product in any linear relation must be zero.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Monomial = tuple[str, str]


class InconclusiveElimination(RuntimeError):
    """Greedy elimination stalled; this does not disprove independence."""

    def __init__(self, message: str, trace, remaining):
        super().__init__(message)
        self.trace = trace
        self.remaining = remaining


@dataclass(frozen=True)
class VanishingPattern:
    points: tuple[str, ...]
    sections: tuple[tuple[str, frozenset[str]], ...]

    def __post_init__(self):
        points = tuple(self.points)
        sections = tuple((str(name), frozenset(zeros)) for name, zeros in self.sections)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "sections", sections)
        if not points or not sections:
            raise ValueError("need at least one marked point and one section")
        names = [name for name, _ in sections]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate section names {names}")
        for name, zeros in sections:
            if not zeros <= set(points):
                raise ValueError(f"{name} vanishes at unmarked points {sorted(zeros - set(points))}")
            if zeros == set(points):
                raise ValueError(f"{name} vanishes at every marked point (degenerate)")

    @property
    def names(self) -> list[str]:
        return [name for name, _ in self.sections]

    def zeros(self, name: str) -> frozenset[str]:
        return dict(self.sections)[name]

    def nonzero_at(self, mono: Monomial, point: str) -> bool:
        return all(point not in self.zeros(g) for g in mono)

    def all_monomials(self) -> list[Monomial]:
        return list(itertools.combinations_with_replacement(self.names, 2))

    def with_section(self, name: str, zeros: Iterable[str]) -> "VanishingPattern":
        return VanishingPattern(self.points, self.sections + ((name, frozenset(zeros)),))


def monomial_name(mono: Monomial) -> str:
    a, b = mono
    return f"{a}^2" if a == b else f"{a}{b}"


def parse_monomial(text: str, names: Sequence[str]) -> Monomial:
    """Parse "g1^2" or "g1g2" against the known section names."""
    if text.endswith("^2") and text[:-2] in names:
        return (text[:-2], text[:-2])
    for a in names:
        if text.startswith(a) and text[len(a):] in names:
            return (a, text[len(a):])
    raise ValueError(f"cannot parse monomial {text!r} over sections {list(names)}")


@dataclass(frozen=True)
class IndependenceCertificate:
    trace: tuple[tuple[str, Monomial], ...]
    remainder: Monomial | None
    monomials: tuple[Monomial, ...] = field(default=())

    @property
    def independent(self) -> int:
        return len(self.trace) + (self.remainder is not None)

    def describe(self) -> list[str]:
        lines = [f"{point} kills {monomial_name(m)}" for point, m in self.trace]
        if self.remainder is not None:
            lines.append(f"remainder {monomial_name(self.remainder)} independent")
        return lines


def section_independence(
    pattern: VanishingPattern, monomials: Sequence[Monomial] | None = None
) -> IndependenceCertificate:
    """Certify that the given products are linearly independent.

    Monomials are tried in the given order; for each, the marked points are
    scanned in order for one where it is the only surviving nonzero product.
    """
    monomials = list(monomials) if monomials is not None else pattern.all_monomials()
    for mono in monomials:
        for g in mono:
            pattern.zeros(g)  # KeyError on unknown section
    surviving = list(monomials)
    trace = []
    while len(surviving) > 1:
        for mono, point in itertools.product(surviving, pattern.points):
            alive = [m for m in surviving if pattern.nonzero_at(m, point)]
            if alive == [mono]:
                trace.append((point, mono))
                surviving.remove(mono)
                break
        else:
            raise InconclusiveElimination(
                "elimination stalled with " + ", ".join(map(monomial_name, surviving)),
                tuple(trace),
                tuple(surviving),
            )
    # a single product of nonzero sections is a nonzero vector
    remainder = surviving[0] if surviving else None
    return IndependenceCertificate(tuple(trace), remainder, tuple(monomials))


def max_certified(pattern: VanishingPattern) -> int:
    """Size of the largest set of quadratic products the elimination certifies."""
    monos = pattern.all_monomials()
    for size in range(len(monos), 0, -1):
        for subset in itertools.combinations(monos, size):
            try:
                section_independence(pattern, subset)
            except InconclusiveElimination:
                continue
            return size
    return 0


def cyclic_pattern(points: Sequence[str], names: Sequence[str], shift: int = 1) -> VanishingPattern:
    """Section j vanishes at points j and j + shift (indices mod 3), as for three rotated curves."""
    n = len(points)
    return VanishingPattern(
        tuple(points),
        tuple((name, frozenset({points[j], points[(j + shift) % n]})) for j, name in enumerate(names)),
    )
