import itertools
from fractions import Fraction

import pytest

from fppkit.fibers import (
    FiberScenario,
    FiberSolution,
    admissible_multiplicities,
    candidate_multiplicities,
    exclusion_report,
    parse_case,
    rejection_reasons,
    reverse_relabel,
    rotate,
    solve,
    symmetric_solutions,
    verify_solution,
)
from oracles import discrepancy, pairing

IDENTITY = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
REM23 = {((2, 1, 2), (2, 2, 1), (1, 2, 2)), ((1, 3, 1), (1, 1, 3), (3, 1, 1))}
REM24 = {((1, 2, 0), (0, 1, 2), (2, 0, 1)), ((0, 1, 2), (2, 0, 1), (1, 2, 0))}
# frozen after one brute-force run of the oracle below
COUNTS = {((2, 3), 1): 98, ((2, 3), 2): 8, ((2, 3), 3): 1, ((2, 4), 1): 26, ((2, 4), 2): 1, ((2, 4), 4): 0, ((3, 3), 1): 8, ((3, 3), 3): 0}

G = pairing((2, 2, 3))
A = discrepancy((2, 2, 3))


def _oracle_column_ok(col, j, reversed_order=False):
    """Brute-force test of one B-curve column from first principles."""
    x = {i: [0, 0, col[i]] for i in range(3)}
    here, nxt = j - 1, j % 3
    if reversed_order:
        x[here][0] += 1
        x[nxt][1] += 1
    else:
        x[here][1] += 1
        x[nxt][0] += 1
    m = sum(col) + 1
    k_dot = Fraction(m) * Fraction(9, 7) / 3 - sum(A[r] * x[i][r] for i in range(3) for r in range(3))
    sq = Fraction(m * m) * Fraction(9, 7) / 9 - sum(
        x[i][r] * G[r][s] * x[i][s] for i in range(3) for r in range(3) for s in range(3)
    )
    t1 = sum(x[i][0] for i in range(3))
    t2 = sum(x[i][1] for i in range(3))
    t3 = sum(x[i][2] for i in range(3))
    return k_dot == 0 and sq == -2 and (t1 + 2 * t2) % 3 == 0 and t1 + t2 + t3 >= 3


def _oracle_solutions(case, mu, reversed_order=False):
    n = {(2, 3): 6, (2, 4): 4, (3, 3): 3}[case]
    total = n // mu - 1
    rows = [r for r in itertools.product(range(total + 1), repeat=3) if sum(r) == total]
    out = []
    for k in itertools.product(rows, rows, rows):
        cols = [tuple(k[i][j] for i in range(3)) for j in range(3)]
        if all(_oracle_column_ok(c, j + 1, reversed_order) for j, c in enumerate(cols)):
            out.append(k)
    return out


@pytest.mark.parametrize("case,mu", sorted(COUNTS))
def test_solutions_match_oracle(case, mu):
    sols = solve(FiberScenario(case, mu))
    assert [s.k for s in sols] == _oracle_solutions(case, mu)
    assert len(sols) == COUNTS[(case, mu)]


def test_identity_is_unique_for_mu3():
    sols = solve(FiberScenario((2, 3), 3))
    assert [s.k for s in sols] == [IDENTITY]
    assert sols[0].m == (2, 2, 2)
    assert sols[0].column(2) == (0, 1, 0)


def test_identity_for_24_mu2():
    assert [s.k for s in solve(FiberScenario((2, 4), 2))] == [IDENTITY]


def test_remark_matrices():
    assert {s.k for s in symmetric_solutions(FiberScenario((2, 3), 1))} == REM23
    assert {s.k for s in symmetric_solutions(FiberScenario((2, 4), 1))} == REM24


@pytest.mark.parametrize("case,mu", [((2, 4), 4), ((3, 3), 3)])
def test_sum_bound_infeasibility(case, mu):
    sc = FiberScenario(case, mu)
    assert sc.row_sum == 0
    assert solve(sc) == []
    assert "prop3_sum_bound" in rejection_reasons(sc, ((0, 0, 0),) * 3)


@pytest.mark.parametrize("case,mu", sorted(COUNTS))
def test_solution_set_closed_under_rotation(case, mu):
    ks = {s.k for s in solve(FiberScenario(case, mu))}
    assert {rotate(k) for k in ks} == ks


@pytest.mark.parametrize("case,mu", sorted(COUNTS))
def test_reversed_order_is_a_relabelling(case, mu):
    forward = {s.k for s in solve(FiberScenario(case, mu))}
    backward = {s.k for s in solve(FiberScenario(case, mu, reversed_order=True))}
    assert {reverse_relabel(k) for k in forward} == backward
    assert backward == set(_oracle_solutions(case, mu, reversed_order=True))


def test_rotation_has_order_three():
    k = ((1, 2, 3), (4, 5, 6), (7, 8, 9))
    assert rotate(rotate(rotate(k))) == k and rotate(k) != k


def test_verify_solution_rejects_non_solution():
    sc = FiberScenario((2, 3), 3)
    bad = FiberSolution(((0, 1, 0), (0, 0, 1), (1, 0, 0)), (2, 2, 2))
    assert not verify_solution(sc, bad)
    assert rejection_reasons(sc, bad.k)


def test_scenario_validation():
    assert candidate_multiplicities((2, 3)) == (1, 2, 3)
    assert candidate_multiplicities("3,3") == (1, 3)
    assert FiberScenario((2, 3), 1).row_sum == 5
    with pytest.raises(ValueError):
        FiberScenario((2, 3), 6)
    with pytest.raises(ValueError):
        parse_case("2,5")


@pytest.mark.parametrize("case", [(2, 3), (2, 4), (3, 3)])
def test_only_multiplicity_one_survives(case):
    assert admissible_multiplicities(case) == {1}
    statuses = {v.mu: v.status for v in exclusion_report(case)}
    assert statuses[1] == "admissible"
    for mu, status in statuses.items():
        if mu != 1:
            assert status in ("combinatorially-infeasible", "excluded-by-torsion-argument")


def test_exclusion_statuses():
    assert {v.mu: v.status for v in exclusion_report((2, 4))} == {
        1: "admissible",
        2: "excluded-by-torsion-argument",
        4: "combinatorially-infeasible",
    }
    assert {v.mu: v.status for v in exclusion_report((3, 3))}[3] == "combinatorially-infeasible"
