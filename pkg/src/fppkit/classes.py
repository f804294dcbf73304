"""Numerical divisor classes on a fake projective plane.

A class is m L + t with L an ample generator (L^2 = 1) and t a torsion
element. The canonical class is K = 3L + t_K; chi(O) = 1, p_g = q = 0.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Iterator, Mapping, Sequence

from .fibers import FIBER_K_MULTIPLE, FiberScenario, parse_case, solve
from .sections import cyclic_pattern, monomial_name, section_independence
from .surface import k2_of, preset

UNDETERMINED = "undetermined"

Element = tuple[int, ...]


@dataclass(frozen=True)
class TorsionGroup:
    """Finite abelian group C_{n1} x ... x C_{nk}; elements are residue tuples."""

    cyclic_orders: tuple[int, ...] = ()

    def __post_init__(self):
        orders = tuple(sorted(int(n) for n in self.cyclic_orders))
        if any(n < 2 for n in orders):
            raise ValueError(f"cyclic factors must have order >= 2, got {orders}")
        object.__setattr__(self, "cyclic_orders", orders)

    @classmethod
    def parse(cls, text: str) -> "TorsionGroup":
        """"2,2,2" -> C2^3; "1" or "" -> trivial group."""
        orders = [int(x) for x in text.replace("x", ",").split(",") if x.strip()]
        return cls(tuple(n for n in orders if n != 1))

    @property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    @property
    def zero(self) -> Element:
        return (0,) * len(self.cyclic_orders)

    def elements(self) -> Iterator[Element]:
        return itertools.product(*(range(n) for n in self.cyclic_orders))

    def add(self, s: Element, t: Element) -> Element:
        return tuple((a + b) % n for a, b, n in zip(s, t, self.cyclic_orders))

    def scale(self, k: int, s: Element) -> Element:
        return tuple((k * a) % n for a, n in zip(s, self.cyclic_orders))

    def element_order(self, s: Element) -> int:
        k = 1
        while self.scale(k, s) != self.zero:
            k += 1
        return k

    def contains(self, s: Element) -> bool:
        return len(s) == len(self.cyclic_orders) and all(
            0 <= a < n for a, n in zip(s, self.cyclic_orders)
        )

    def __str__(self) -> str:
        return " x ".join(f"C{n}" for n in self.cyclic_orders) or "trivial"


def abelian_groups_of_order(n: int) -> list[TorsionGroup]:
    """All abelian groups of order n up to isomorphism (primary decomposition)."""
    factors: dict[int, int] = {}
    rest, p = n, 2
    while rest > 1:
        while rest % p == 0:
            factors[p] = factors.get(p, 0) + 1
            rest //= p
        p += 1
    per_prime = [[tuple(p**e for e in part) for part in _partitions(k)] for p, k in factors.items()]
    return [TorsionGroup(sum(choice, ())) for choice in itertools.product(*per_prime)]


def _partitions(k: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = k if largest is None else largest
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for tail in _partitions(k - first, first):
            yield (first,) + tail


@dataclass(frozen=True)
class ClassOnFPP:
    m: int
    t: Element = ()

    @property
    def self_intersection(self) -> int:
        return self.m * self.m


def _m(cls: ClassOnFPP | int) -> int:
    return cls.m if isinstance(cls, ClassOnFPP) else int(cls)


def chi(cls: ClassOnFPP | int) -> int:
    """Riemann-Roch: chi(mL + t) = 1 + m(m - 3)/2."""
    m = _m(cls)
    return 1 + m * (m - 3) // 2


def canonical_class(group: TorsionGroup, k_torsion: Element | None = None) -> ClassOnFPP:
    return ClassOnFPP(3, group.zero if k_torsion is None else tuple(k_torsion))


def h0_large(
    cls: ClassOnFPP,
    canonical: ClassOnFPP | None = None,
    vanishing_certified: bool = False,
) -> int | str:
    """h^0 where it is forced: Kodaira vanishing for m >= 4, p_g = 0 at m = 3.

    For m = 1, 2 the answer is UNDETERMINED unless ``vanishing_certified``
    says a proven vanishing h^0(2L) = 0 covers the surface.
    """
    m = cls.m
    if m >= 4:
        return chi(m)
    if m == 3:
        canonical = canonical or ClassOnFPP(3, tuple(0 for _ in cls.t))
        return 0 if cls == canonical else 1
    if m in (1, 2):
        return 0 if vanishing_certified else UNDETERMINED
    if m == 0:
        return 1 if not any(cls.t) else 0
    return 0


def three_torsion_count(group: TorsionGroup) -> int:
    return prod(gcd(n, 3) for n in group.cyclic_orders)


def is_three_divisible(group: TorsionGroup, t: Element) -> bool:
    """Whether 3L + t is divisible by 3, i.e. t lies in 3G."""
    return any(group.scale(3, s) == tuple(t) for s in group.elements())


def cube_roots_of_K(group: TorsionGroup, k_divisible: bool | None = None) -> int:
    """Number of L0 with 3 L0 = K; any two differ by a 3-torsion element."""
    if group.order % 3:
        return 1
    if k_divisible is None:
        raise ValueError(f"{group} has 3-torsion; divisibility of K must be supplied")
    return three_torsion_count(group) if k_divisible else 0


def two_torsion_pullback_check(group: TorsionGroup) -> bool:
    """Every torsion element has 2s = 0, so automorphisms fix 2L."""
    return all(n == 2 for n in group.cyclic_orders)


def invariant_torsion_count(group: TorsionGroup, automorphism_order: int, pi1_quotient_order: int) -> int:
    """Upper bound on the nontrivial torsion classes fixed by the automorphism."""
    if automorphism_order < 2:
        raise ValueError("automorphism order must be >= 2")
    if pi1_quotient_order == 1:
        return 0
    if pi1_quotient_order == 2:
        two_torsion = sum(1 for s in group.elements() if s != group.zero and group.scale(2, s) == group.zero)
        return min(1, two_torsion)
    raise ValueError(f"unsupported quotient fundamental group order {pi1_quotient_order}")


# -- multiple-fibre exclusions ------------------------------------------------------

# torsion groups of the fake projective planes with automorphism group 7:3
AUT21_TORSION = (TorsionGroup((2, 2, 2)), TorsionGroup((2, 2, 2, 2)), TorsionGroup((2,) * 6))


class NoContradiction(ValueError):
    pass


@dataclass(frozen=True)
class Step:
    claim: str
    expected: object
    computed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


@dataclass(frozen=True)
class ExclusionCertificate:
    case: tuple[int, int]
    mu: int
    steps: tuple[Step, ...]
    contradiction: str
    groups: tuple[str, ...] = field(default=())

    @property
    def balanced(self) -> bool:
        return all(step.ok for step in self.steps)


def multiplicity2_exclusion(case, mu: int, groups: Sequence[TorsionGroup] = AUT21_TORSION) -> ExclusionCertificate:
    """Replay the class arithmetic excluding a multiple I_9 fibre.

    Supported: (2,3) with mu = 2 or 3 and (2,4) with mu = 2. Anything else
    raises NoContradiction.
    """
    case = parse_case(case)
    supported = {((2, 3), 2), ((2, 3), 3), ((2, 4), 2)}
    if (case, mu) not in supported:
        raise NoContradiction(f"no contradiction derivable for case {case} with multiplicity {mu}")
    n = FIBER_K_MULTIPLE[case]
    pi1 = gcd(*case)
    k2_y = k2_of(preset("X/C7"))
    fiber = Fraction(n, mu)
    total_m = 3 * fiber  # pi^* K_Y = K_X = 3L
    per_curve = total_m / 3
    per_curve_on_y = fiber / 3  # B'_j as a multiple of K_Y
    steps = [
        Step(f"F_0 = F/{mu} is numerically {fiber} K", Fraction(n) / mu, fiber),
        Step("three rotated curves share one class: 3 * per-curve = total", total_m, 3 * per_curve),
        Step("per-curve class has integral L-coefficient", per_curve.denominator, 1),
        Step(
            "degree-7 pullback multiplies self-intersection by 7",
            per_curve * per_curve,
            7 * per_curve_on_y * per_curve_on_y * k2_y,
        ),
    ]
    for group in groups:
        bound = invariant_torsion_count(group, 7, pi1)
        steps.append(Step(f"{group}: invariant nontrivial torsion bound (pi_1 order {pi1})", min(pi1 - 1, 1), bound))
    if mu == 2 and case == (2, 3):
        for group in groups:
            steps.append(Step(f"{group}: unique cube root L0 of K", 1, cube_roots_of_K(group)))
        canonical = ClassOnFPP(3, AUT21_TORSION[0].zero)
        steps.append(Step("per-curve class equals K_X = 3 L0", 3, int(per_curve)))
        steps.append(Step("h0(K_X) = p_g = 0", 0, h0_large(canonical, canonical)))
        contradiction = "pi^*B'_1 = K_X would make K_X effective, but p_g(X) = 0"
    else:
        for group in groups:
            steps.append(Step(f"{group}: 2-torsion only, so sigma^*(2L) = 2L", True, two_torsion_pullback_check(group)))
        steps.append(Step("per-curve class is 2L (+ 2-torsion)", 2, int(per_curve)))
        sols = solve(FiberScenario(case, mu))
        identity = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        steps.append(Step("k_ij system has the identity as unique solution", [identity], [s.k for s in sols]))
        pattern = cyclic_pattern(["x1", "x2", "x3"], ["g1", "g2", "g3"])
        monos = [("g1", "g1"), ("g2", "g2"), ("g1", "g2"), ("g3", "g3")]
        cert = section_independence(pattern, monos)
        steps.append(Step("independent products in H0(4L)", 4, cert.independent))
        steps.append(Step("h0(4L) from Riemann-Roch and Kodaira vanishing", 3, h0_large(ClassOnFPP(4))))
        contradiction = (
            f"{', '.join(monomial_name(m) for m in monos)} are independent in H0(4L), "
            f"so h0(4L) >= {cert.independent} > {chi(4)}"
        )
    return ExclusionCertificate(case, mu, tuple(steps), contradiction, tuple(str(g) for g in groups))


# -- vanishing tables -----------------------------------------------------------------

VanishingTable = Mapping[str, Sequence[int]]


def exceptional_sequence_check(vanishing: VanishingTable) -> bool:
    """(O, -L0, -2L0) is exceptional iff h^i(2L0) = h^i(L0) = 0 for i = 0, 1, 2."""
    for key in ("2L0", "L0"):
        row = list(vanishing[key])
        if len(row) != 3:
            raise ValueError(f"row {key} must list h^0, h^1, h^2")
    return all(h == 0 for key in ("2L0", "L0") for h in vanishing[key])


def cube_root_vanishing_table(h0_2l0: int = 0) -> dict[str, list[int]]:
    """Fill in h^i(2L0), h^i(L0) from h^0(2L0) = 0, with K = 3L0.

    h^0(L0) <= h^0(2L0) since L0 has sections only if 2L0 does; Serre duality
    gives h^2(2L0) = h^0(L0), h^2(L0) = h^0(2L0); h^1 follows from chi.
    """
    if h0_2l0 != 0:
        raise ValueError("the chain only runs from the vanishing h0(2L0) = 0")
    h0_l0 = 0
    table = {}
    for key, m, h0, h2 in (("2L0", 2, h0_2l0, h0_l0), ("L0", 1, h0_l0, h0_2l0)):
        h1 = h0 + h2 - chi(m)
        if h1 < 0:
            raise ArithmeticError(f"negative h1 for {key}")
        table[key] = [h0, h1, h2]
    return table


def generator_vanishing_row() -> list[int]:
    """h^i(2L) for every ample generator L, given h^0(2L') = 0 for all L'.

    K - 2L = L + t is again an ample generator, so h^2(2L) = h^0(L + t) = 0.
    """
    h0 = 0
    h2 = 0
    h1 = h0 + h2 - chi(2)
    if h1 < 0:
        raise ArithmeticError("negative h1")
    return [h0, h1, h2]
