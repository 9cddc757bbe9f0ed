"""Constructions showing how much symmetry static constraints can leave, and
small instances where value and variable symmetry breaking collide."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from .core import DomainSet, Matrix, Model, Predicate, ResourceLimitError, VarGrid
from .propagators import AllDifferent, SumRange

MAX_FAMILY_N = 8


def _zeros(n: int, m: int) -> list[list[int]]:
    return [[0] * m for _ in range(n)]


def theorem2_family(n: int) -> tuple[Model, list[Matrix]]:
    """A ``2n x 2n`` 0/1 model (``3n`` ones, one or two per row and column)
    and its ``n!`` DoubleLex solutions ``[[0, J], [J, P]]``, where ``J`` is
    the reflected identity and ``P`` ranges over permutation matrices."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > MAX_FAMILY_N:
        raise ResourceLimitError(f"{n}! witnesses is too many to materialize")
    size = 2 * n
    model = Model(VarGrid.uniform(size, size, DomainSet([0, 1])), name="doublelex_witness",
                  params={"n": n})
    model.add(SumRange(range(size * size), 3 * n, 3 * n))
    model.add(*(SumRange(model.row_vars(i), 1, 2) for i in range(size)))
    model.add(*(SumRange(model.col_vars(j), 1, 2) for j in range(size)))

    witnesses = []
    for perm in permutations(range(n)):
        rows = _zeros(size, size)
        for i in range(n):
            rows[i][size - 1 - i] = 1          # top-right J
            rows[n + i][n - 1 - i] = 1         # bottom-left J
            rows[n + i][n + perm[i]] = 1       # bottom-right P
        witnesses.append(Matrix.from_rows(rows))
    return model, witnesses


def snake_permutation_matrix(n: int) -> Matrix:
    """The ``2n x 2n`` permutation matrix with ones at ``(i, 2i+1)`` for the
    top half and ``(2n-1-k, 2k)`` for the bottom half."""
    size = 2 * n
    rows = _zeros(size, size)
    for k in range(n):
        rows[k][2 * k + 1] = 1
        rows[size - 1 - k][2 * k] = 1
    return Matrix.from_rows(rows)


def balanced_columns(n: int) -> list[tuple[int, ...]]:
    """All 0/1 columns of height ``2n`` with exactly ``n`` ones, lex descending."""
    size = 2 * n
    cols = []
    for ones in combinations(range(size), n):
        cols.append(tuple(1 if i in ones else 0 for i in range(size)))
    return cols


def theorem7_family(n: int) -> list[Matrix]:
    """The snake permutation matrix extended by every balanced column."""
    if n < 2:
        raise ValueError("n must be at least 2")
    base = snake_permutation_matrix(n)
    return [Matrix.from_rows([r + (c[i],) for i, r in enumerate(base.rows())])
            for c in balanced_columns(n)]


def _abs_diffs(xs):
    return [abs(b - a) for a, b in zip(xs, xs[1:])]


def diffs_equal_or_not_arithmetic(xs) -> bool:
    """Neighbouring absolute differences are all equal or not an arithmetic
    progression."""
    d = _abs_diffs(xs)
    if len(set(d)) <= 1:
        return True
    steps = {b - a for a, b in zip(d, d[1:])}
    return len(steps) != 1


def reflection_instance() -> Model:
    """``X1..X4`` over ``1..4``: all different, neighbouring differences all
    equal or not arithmetic. Symmetric under reversal and under ``v -> 5-v``."""
    model = Model(VarGrid.uniform(1, 4, DomainSet.range(1, 4)), name="reflection",
                  tags=frozenset({"surjective", "alldiff"}))
    scope = list(range(4))
    model.add(AllDifferent(scope))
    model.add(Predicate(scope, diffs_equal_or_not_arithmetic, "differences"))
    return model


def means_all_different(values) -> bool:
    """Averages of the non-zero entries of the three rows and three columns
    of a 3x3 matrix are pairwise different."""
    rows = [values[3 * i:3 * i + 3] for i in range(3)]
    lines = rows + [list(c) for c in zip(*rows)]
    means = []
    for line in lines:
        nz = [x for x in line if x]
        if not nz:
            return False
        means.append(Fraction(sum(nz), len(nz)))
    return len(set(means)) == len(means)


def averages_instance() -> Model:
    """3x3 over ``0..8``, every value used once, row/column means of non-zero
    entries all different. Symmetric under ``v -> 9-v`` for ``v > 0``."""
    model = Model(VarGrid.uniform(3, 3, DomainSet.range(0, 8)), name="averages",
                  tags=frozenset({"surjective", "alldiff"}))
    scope = list(range(9))
    model.add(AllDifferent(scope))
    model.add(Predicate(scope, means_all_different, "distinct means"))
    return model


def invert_nonzero(v: int) -> int:
    return 9 - v if v else 0


def reflection_images(xs) -> list[tuple[int, ...]]:
    """The reflection instance's symmetric images of ``xs``: reversal, value
    reflection ``v -> 5-v`` and both."""
    xs = tuple(xs)
    flip = tuple(5 - x for x in xs)
    return [xs[::-1], flip, flip[::-1]]


def reflection_leader(xs) -> bool:
    """Lex-leader constraint of the reflection instance on ``X1..X4``."""
    return all(tuple(xs) <= img for img in reflection_images(xs))
