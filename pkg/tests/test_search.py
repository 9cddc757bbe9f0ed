import random

import pytest

from symbreak.breaking import SymBreak, SymBreakConfig, apply_config
from symbreak.canonical import classify
from symbreak.core import DomainSet, Model, Predicate, VarGrid
from symbreak.models import UnconstrainedParams, build_unconstrained
from symbreak.propagators import AllDifferent, LexLeq, SumRange
from symbreak.search import (SearchConfig, VarOrder, all_solutions, grid_order, propagate,
                             solve_all)

from conftest import all_matrices


def unconstrained(r, c, d, sb="nosb"):
    return apply_config(build_unconstrained(UnconstrainedParams(r, c, d)),
                        SymBreakConfig.parse(sb))


@pytest.mark.parametrize("order", list(VarOrder))
def test_grid_order_is_a_permutation(order):
    for n, m in [(1, 1), (2, 3), (4, 4), (3, 5)]:
        assert sorted(grid_order(n, m, order)) == list(range(n * m))


def test_snake_orders():
    assert grid_order(2, 3, VarOrder.SNAKE_ROW_WISE) == [0, 1, 2, 5, 4, 3]
    assert grid_order(2, 3, VarOrder.SNAKE_COL_WISE) == [0, 3, 4, 1, 2, 5]
    assert grid_order(2, 3, VarOrder.COL_WISE) == [0, 3, 1, 4, 2, 5]


def test_propagate_trivial_cases():
    grid = VarGrid.uniform(2, 2, DomainSet([0, 1, 2]))
    out, failed = propagate(grid, [])
    assert out == grid and not failed
    fixed = VarGrid.from_rows([[1, 1]])
    _, failed = propagate(fixed, [Predicate([0, 1], lambda v: v[0] != v[1])])
    assert failed


def test_propagate_is_confluent():
    rng = random.Random(9)
    for _ in range(200):
        grid = VarGrid(3, 3, tuple(DomainSet(v for v in range(4) if rng.random() < 0.7) or
                                   DomainSet([0]) for _ in range(9)))
        cons = [LexLeq([0, 1, 2], [3, 4, 5]), LexLeq([3, 4, 5], [6, 7, 8]),
                LexLeq([0, 3, 6], [1, 4, 7]), SumRange([2, 5, 8], 3, 6),
                AllDifferent([0, 4, 8])]
        first, failed = propagate(grid, cons)
        for _ in range(3):
            rng.shuffle(cons)
            again, failed_again = propagate(grid, cons)
            assert failed_again == failed
            if not failed:
                assert again == first


@pytest.mark.parametrize("sb,count", [("nosb", 512), ("doublelex", 45), ("snakelex_c", 44),
                                      ("snakelex_r", 44), ("rowwiselex", 36)])
def test_unconstrained_3x3_counts(sb, count):
    st = solve_all(unconstrained(3, 3, 2, sb))
    assert st.complete and st.n_solutions == count


def test_counts_do_not_depend_on_var_order():
    model = unconstrained(3, 3, 3, "snakelex_c")
    counts = {solve_all(model, SearchConfig(o)).n_solutions for o in VarOrder}
    assert counts == {1232}


def test_enumeration_matches_brute_force():
    rng = random.Random(13)
    for _ in range(15):
        n, m = rng.choice([(2, 2), (2, 3), (3, 2)])
        model = Model(VarGrid.uniform(n, m, DomainSet(range(3))))
        model.add(SumRange(model.row_vars(0), rng.randint(0, 2), rng.randint(2, 4)))
        model.add(LexLeq(model.col_vars(0), model.col_vars(1)))
        if rng.random() < 0.5:
            model.add(AllDifferent(model.row_vars(n - 1)))
        model = apply_config(model, SymBreakConfig.parse(rng.choice(["nosb", "snakelex_c"])))
        want = {x for x in all_matrices(n, m, range(3)) if model.satisfied_by(x)}
        got = all_solutions(model)
        assert len(got) == len(want) and set(got) == want


def test_symmetry_breaking_is_monotone():
    base = solve_all(unconstrained(3, 3, 3)).n_solutions
    for sb in ("doublelex", "snakelex_r", "snakelex_c", "rowwiselex"):
        assert solve_all(unconstrained(3, 3, 3, sb)).n_solutions <= base


def test_row_wise_lex_equals_class_count():
    for r, c, d in [(2, 3, 3), (3, 3, 2)]:
        nosb = all_solutions(unconstrained(r, c, d))
        leaders = solve_all(unconstrained(r, c, d, "rowwiselex"))
        assert leaders.n_solutions == classify(nosb).n_classes


def test_limits_mark_incomplete():
    st = solve_all(unconstrained(3, 3, 2), SearchConfig(max_solutions=10))
    assert st.n_solutions == 10 and not st.complete
    st = solve_all(unconstrained(6, 6, 3), SearchConfig(time_budget=0.05))
    assert not st.complete


def test_failures_are_counted():
    model = Model(VarGrid.uniform(1, 3, DomainSet(range(2))))
    model.add(AllDifferent(range(3)))
    st = solve_all(model)
    assert st.n_solutions == 0 and st.complete and st.n_failures >= 1


def test_callback_sees_every_solution():
    seen = []
    st = solve_all(unconstrained(2, 2, 2, "doublelex"), callback=seen.append)
    assert len(seen) == st.n_solutions == len(set(seen))
