import pytest
from hypothesis import given
from hypothesis import strategies as st

from symbreak.core import Matrix
from symbreak.lexorder import (entwine, entwined_lex_leq, lex_leq, lex_lt, linearize_row_wise,
                               reversed_lex_leq)

from conftest import EFPA_B

vec_pairs = st.integers(0, 6).flatmap(
    lambda n: st.tuples(*(st.lists(st.integers(0, 3), min_size=n, max_size=n) for _ in range(3))))


def test_lex_leq_examples():
    assert lex_leq([0, 1], [1, 0])
    assert lex_leq([2, 2], [2, 2])
    assert lex_leq([0, 2, 1, 2, 0, 1], [0, 2, 2, 1, 1, 0])
    assert not lex_leq([1, 0], [0, 1])


def test_lex_lt_examples():
    assert not lex_lt([3, 1], [3, 1])
    assert lex_lt([1], [2])
    with pytest.raises(ValueError):
        lex_lt([0, 1], [0, 1, 0])
    with pytest.raises(ValueError):
        lex_leq([0], [])


def test_entwined_examples():
    assert entwined_lex_leq([4, 1, 2], [4, 1, 2])
    assert entwined_lex_leq([0, 1], [1, 0])
    assert not entwined_lex_leq([1, 0], [0, 1])
    with pytest.raises(ValueError):
        entwined_lex_leq([1], [1, 2])


def test_linearize_row_wise():
    assert linearize_row_wise(Matrix.from_rows([[1, 2], [3, 4]])) == (1, 2, 3, 4)
    assert linearize_row_wise(Matrix.from_rows([[7, 8, 9]])) == (7, 8, 9)
    assert linearize_row_wise(EFPA_B) == (0, 0, 1, 1, 2, 2, 0, 1, 0, 2, 1, 2,
                                          0, 2, 1, 2, 0, 1, 0, 2, 2, 1, 1, 0)


@given(vec_pairs)
def test_lex_leq_is_a_total_order(vs):
    u, v, w = vs
    assert lex_leq(u, v) or lex_leq(v, u)
    if lex_leq(u, v) and lex_leq(v, u):
        assert u == v
    if lex_leq(u, v) and lex_leq(v, w):
        assert lex_leq(u, w)
    assert lex_leq(u, v) == (u <= v)
    assert lex_lt(u, v) == (lex_leq(u, v) and u != v)


@given(vec_pairs)
def test_entwined_matches_materialized_definition(vs):
    u, v, _ = vs
    left, right = entwine(u, v)
    assert entwined_lex_leq(u, v) == (left <= right)
    assert (entwined_lex_leq(u, v) and entwined_lex_leq(v, u)) == (u == v)


@given(vec_pairs)
def test_reversed_matches_direct_definition(vs):
    u, v, _ = vs
    assert reversed_lex_leq(u, v) == lex_leq(u[::-1], v[::-1])
