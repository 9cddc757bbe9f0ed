from itertools import permutations, product

import pytest

from symbreak.breaking import (PugetOrder, SymBreak, SymBreakConfig, ValueOrder,
                               ValuePrecedence, apply_config, check_double_lex,
                               check_double_lex_col_sum, check_order_1st_row_col,
                               check_snakelex_c, check_snakelex_r, check_value_precedence,
                               first_occurrences, post_double_lex, post_double_lex_col_sum,
                               post_order_1st_row_col, post_puget, post_snakelex_c,
                               post_snakelex_r, puget_channel)
from symbreak.canonical import classify, is_lex_leader
from symbreak.core import DomainSet, Matrix, Model, VarGrid, matrix_transpose
from symbreak.models import EfpaParams, build_efpa
from symbreak.propagators import AllDifferent, SumRange
from symbreak.search import all_solutions, propagate
from symbreak.witnesses import snake_permutation_matrix, theorem2_family

from conftest import EFPA_A, EFPA_B, EFPA_C, all_matrices


def free_model(n, m, values):
    return Model(VarGrid.uniform(n, m, DomainSet(values)))


def function_model(n, m):
    model = free_model(n, m, (0, 1))
    model.add(*(SumRange(model.row_vars(i), 1, 1) for i in range(n)))
    return model


def test_double_lex_checker_examples():
    assert check_double_lex(EFPA_B) and check_double_lex(EFPA_C)
    assert not check_double_lex(EFPA_A)
    _, witnesses = theorem2_family(2)
    assert all(check_double_lex(w) for w in witnesses)


def test_double_lex_gap_example():
    grid = VarGrid.from_rows([[{0, 1}, {0, 1}, 1], [{0, 1}, 0, 1], [1, 1, 1]])
    model = post_double_lex(Model(grid))
    narrowed, failed = propagate(grid, model.constraints)
    assert not failed and 1 in narrowed[0, 0]
    sols = all_solutions(model)
    assert sols and all(s[0, 0] == 0 for s in sols)


def test_double_lex_filter_keeps_every_solution_on_2x2():
    everything = [m for m in all_matrices(2, 2, (0, 1)) if check_double_lex(m)]
    for doms in product([(0,), (1,), (0, 1)], repeat=4):
        grid = VarGrid(2, 2, tuple(DomainSet(d) for d in doms))
        model = post_double_lex(Model(grid))
        narrowed, failed = propagate(grid, model.constraints)
        inside = [m for m in everything
                  if all(x in grid.domains[k] for k, x in enumerate(m.cells))]
        if failed:
            assert not inside
        for m in inside:
            assert all(x in narrowed.domains[k] for k, x in enumerate(m.cells))


def test_snake_checkers():
    p = snake_permutation_matrix(2)
    assert p == Matrix.from_rows([[0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [1, 0, 0, 0]])
    assert check_snakelex_c(p)
    ext = Matrix.from_rows([r + (c,) for r, c in zip(p.rows(), (1, 1, 0, 0))])
    assert check_snakelex_c(ext)
    const = Matrix.from_rows([[2, 2, 2], [2, 2, 2]])
    assert check_snakelex_c(const) and check_snakelex_r(const)
    assert check_snakelex_r(matrix_transpose(p))


@pytest.mark.parametrize("poster,checker", [(post_double_lex, check_double_lex),
                                            (post_snakelex_c, check_snakelex_c),
                                            (post_snakelex_r, check_snakelex_r)])
def test_posters_match_checkers(poster, checker):
    for n, m, values in [(2, 3, (0, 1, 2)), (3, 3, (0, 1)), (3, 2, (0, 1, 2))]:
        want = {x for x in all_matrices(n, m, values) if checker(x)}
        got = all_solutions(poster(free_model(n, m, values)))
        assert len(got) == len(set(got)) and set(got) == want


def test_every_class_keeps_a_member():
    everything = list(all_matrices(3, 3, (0, 1, 2)))
    leaders = [m for m in everything if is_lex_leader(m)]
    assert len(leaders) == 738
    assert all(check_double_lex(m) for m in leaders)
    for checker in (check_snakelex_c, check_snakelex_r):
        assert classify(m for m in everything if checker(m)).n_classes == 738


def test_order_1st_row_col():
    model = free_model(2, 2, range(1, 5))
    model.add(AllDifferent(range(4)))
    model.tags = frozenset({"alldiff"})
    sols = all_solutions(post_order_1st_row_col(model))
    expected = {Matrix.from_rows([[1, b], [c, d]]) for b, c, d in permutations((2, 3, 4))
                if b > 1 and c > 1}
    assert set(sols) == expected
    assert all(check_order_1st_row_col(s) for s in sols)
    with pytest.raises(ValueError):
        post_order_1st_row_col(free_model(2, 2, range(4)))


def test_order_1st_row_col_fixes_corner():
    model = free_model(3, 3, range(1, 10))
    model.add(AllDifferent(range(9)))
    model.tags = frozenset({"alldiff"})
    posted = post_order_1st_row_col(model)
    narrowed, failed = propagate(posted.grid, posted.constraints)
    assert not failed and narrowed[0, 0] == DomainSet([1])


def test_double_lex_col_sum_examples():
    assert check_double_lex_col_sum(Matrix.from_rows([[0, 0, 1], [0, 1, 0], [1, 0, 0]]))
    assert not check_double_lex_col_sum(Matrix.from_rows([[0, 1, 0], [0, 1, 0], [0, 0, 1]]))
    assert not check_double_lex_col_sum(Matrix.from_rows([[0, 1], [1, 1]]))
    with pytest.raises(ValueError):
        post_double_lex_col_sum(free_model(2, 2, (0, 1, 2)))


@pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 3), (3, 2), (4, 3)])
def test_double_lex_col_sum_poster_matches_leaders(n, m):
    everything = [x for x in all_matrices(n, m, (0, 1)) if all(sum(r) == 1 for r in x.rows())]
    want = {x for x in everything if is_lex_leader(x)}
    got = all_solutions(post_double_lex_col_sum(function_model(n, m)))
    assert set(got) == want and len(got) == len(want)


def test_value_precedence_examples():
    assert check_value_precedence([0, 1, 2, 1], 1, 2)
    assert not check_value_precedence([0, 2, 1], 1, 2)
    assert check_value_precedence([0, 0], 1, 2)
    assert check_value_precedence(EFPA_B.cells, 1, 2)


def test_first_occurrences():
    assert first_occurrences([2, 4, 1, 3], [1, 2, 3, 4]) == [3, 1, 4, 2]
    assert first_occurrences([1, 1, 2], [1, 2]) == [1, 3]
    with pytest.raises(ValueError):
        first_occurrences([1, 1], [2])


def test_puget_channel_requires_surjection():
    with pytest.raises(ValueError):
        puget_channel(free_model(1, 2, (1, 2)), [1, 2])


def test_puget_order_removes_solution():
    model = free_model(1, 4, range(1, 5))
    model.add(AllDifferent(range(4)))
    model.tags = frozenset({"surjective"})
    fixed = Model(VarGrid.from_rows([[2, 4, 1, 3]]), tags=frozenset({"surjective"}))
    assert len(all_solutions(puget_channel(fixed, [1, 4])[0])) == 1
    assert all_solutions(post_puget(fixed, [(1, 4)], [1, 4])) == []
    sols = all_solutions(post_puget(model, [(1, 4)], [1, 4]))
    assert sols and all(s.cells.index(1) < s.cells.index(4) for s in sols)


def test_config_parse():
    c = SymBreakConfig.parse("DoubleLex", "precedence:colwise")
    assert c.kind is SymBreak.DOUBLE_LEX
    assert c.value_breaking == ValuePrecedence(ValueOrder.COL_WISE)
    assert c.name == "doublelex+precedence:colwise"
    assert SymBreakConfig.parse("nosb", "puget").value_breaking == PugetOrder()
    with pytest.raises(ValueError):
        SymBreakConfig.parse("triplelex")
    with pytest.raises(ValueError):
        SymBreakConfig.parse("nosb", "magic")


def test_efpa_precedence_keeps_forced_first_row():
    model = build_efpa(EfpaParams(q=3, lam=2, d=4, v=3))
    base = all_solutions(apply_config(model, SymBreakConfig(SymBreak.DOUBLE_LEX)))
    both = all_solutions(apply_config(model, SymBreakConfig.parse("doublelex", "precedence")))
    assert base and set(both) == set(base)
    assert all(s.row(0) == (0, 0, 1, 1, 2, 2) for s in base)
