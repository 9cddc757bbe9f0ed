from itertools import permutations

import pytest

from symbreak.breaking import check_double_lex, check_snakelex_c
from symbreak.canonical import canonical_form, classify, is_lex_leader, orbit
from symbreak.core import Matrix, Predicate, ResourceLimitError
from symbreak.search import all_solutions
from symbreak.witnesses import (averages_instance, balanced_columns,
                                diffs_equal_or_not_arithmetic, invert_nonzero,
                                means_all_different, reflection_images, reflection_instance,
                                reflection_leader, snake_permutation_matrix, theorem2_family,
                                theorem7_family)

AVG_A = Matrix.from_rows([[0, 2, 3], [4, 8, 5], [7, 6, 1]])
AVG_B = Matrix.from_rows([[0, 2, 3], [4, 1, 5], [7, 6, 8]])


def test_factorial_family_small_case():
    _, witnesses = theorem2_family(2)
    assert witnesses == [
        Matrix.from_rows([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 1, 0], [1, 0, 0, 1]]),
        Matrix.from_rows([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]),
    ]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_factorial_family_witnesses(n):
    model, witnesses = theorem2_family(n)
    assert len(witnesses) == len(set(witnesses)) == len(list(permutations(range(n))))
    for w in witnesses:
        assert model.satisfied_by(w) and check_double_lex(w)
    assert classify(witnesses).n_classes == 1


def test_factorial_family_limits():
    with pytest.raises(ValueError):
        theorem2_family(1)
    with pytest.raises(ResourceLimitError):
        theorem2_family(9)


def test_snake_extension_family():
    assert len(balanced_columns(2)) == 6 and len(balanced_columns(3)) == 20
    family = theorem7_family(2)
    assert len(family) == 6
    listed = {(1, 1, 0, 0), (1, 0, 1, 0), (0, 1, 1, 0), (0, 0, 1, 1)}
    verdicts = {m.col(4): check_snakelex_c(m) for m in family}
    print("balanced fifth column -> passes the snake constraints:", verdicts)
    assert all(verdicts[c] for c in listed)
    passing = [m for m in family if check_snakelex_c(m)]
    assert len({canonical_form(m) for m in passing}) == 1


def test_snake_permutation_matrix_is_a_permutation():
    for n in (2, 3, 4):
        p = snake_permutation_matrix(n)
        assert all(sum(r) == 1 for r in p.rows()) and all(sum(c) == 1 for c in p.cols())
        assert check_snakelex_c(p)


def test_difference_predicate():
    assert not diffs_equal_or_not_arithmetic([3, 2, 4, 1])
    assert diffs_equal_or_not_arithmetic([2, 4, 1, 3])
    assert diffs_equal_or_not_arithmetic([1, 2, 3, 4])


def test_reflection_class_and_puget():
    model = reflection_instance()
    sols = {s.cells for s in all_solutions(model)}
    cls = {(2, 4, 1, 3), (3, 1, 4, 2)}
    assert cls <= sols
    assert set(reflection_images((2, 4, 1, 3))) | {(2, 4, 1, 3)} == cls
    assert [x for x in cls if reflection_leader(x)] == [(2, 4, 1, 3)]
    # Puget's ordering on the same linearization: value 1 first occurs before value 4
    both = [x for x in cls if reflection_leader(x) and x.index(1) < x.index(4)]
    assert both == []


def test_averages_instance_verdict():
    model = averages_instance()
    assert model.satisfied_by(AVG_A) and model.satisfied_by(AVG_B)
    assert means_all_different(AVG_A.cells)
    assert is_lex_leader(AVG_A) and is_lex_leader(AVG_B)
    assert invert_nonzero(0) == 0 and invert_nonzero(2) == 7
    same_class = AVG_B in orbit(AVG_A, [invert_nonzero])
    print("averages instance: second matrix in the first one's class:", same_class)
    assert len(orbit(AVG_A, [invert_nonzero])) == 72
