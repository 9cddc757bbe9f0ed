"""Exact row/column symmetry handling for complete matrices.

Fixing a row permutation leaves only column symmetry, and the least column
permutation under row-wise linearization is obtained by sorting the columns.
The canonical form is therefore the minimum, over row permutations, of the
column-sorted image. Row permutations are explored as a search tree: the
first ``d`` rows of the column-sorted image depend only on the first ``d``
rows chosen, so at each depth only the rows giving the smallest next image
row are expanded, and a branch is cut as soon as its prefix exceeds the best
image found so far.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

from .core import (Matrix, ResourceLimitError, apply_row_col_perm, apply_value_map,
                   matrix_transpose)

DEFAULT_ROW_LIMIT = 8


def min_col_permutation(m: Matrix) -> Matrix:
    """Sort the columns of ``m`` into lex non-decreasing order (stable)."""
    cols = sorted(m.cols())
    return Matrix.from_rows(list(zip(*cols)))


def _check_limit(m: Matrix, limit: int) -> None:
    if m.n_rows > limit:
        raise ResourceLimitError(
            f"{m.n_rows} rows exceed the canonicalization limit of {limit}; "
            f"canonicalize the transpose or raise the limit")


def _expand(rows, prefixes, used, depth):
    """Candidate next image rows, grouped: {row tuple: [(r, new prefixes)]}."""
    seen = set()
    out: dict[tuple[int, ...], list] = {}
    for r, row in enumerate(rows):
        if used >> r & 1 or row in seen:
            continue
        # identical unused rows give identical subtrees
        seen.add(row)
        keys = [p + (x,) for p, x in zip(prefixes, row)]
        image_row = tuple(k[depth] for k in sorted(keys))
        out.setdefault(image_row, []).append((r, keys))
    return out


def canonical_form(m: Matrix, limit: int = DEFAULT_ROW_LIMIT) -> Matrix:
    """Least row/column permutation of ``m`` under row-wise linearization."""
    _check_limit(m, limit)
    n = m.n_rows
    rows = m.rows()
    best: list[tuple[int, ...]] | None = None
    image: list[tuple[int, ...]] = []

    def search(depth: int, used: int, prefixes: list) -> None:
        # invariant: image <= best[:depth]
        nonlocal best
        if depth == n:
            if best is None or image < best:
                best = list(image)
            return
        groups = _expand(rows, prefixes, used, depth)
        row_min = min(groups)
        if best is not None and row_min > best[depth] and image == best[:depth]:
            return
        for r, keys in groups[row_min]:
            image.append(row_min)
            search(depth + 1, used | (1 << r), keys)
            image.pop()

    search(0, 0, [()] * m.n_cols)
    return Matrix.from_rows(best)


def is_lex_leader(m: Matrix, limit: int = DEFAULT_ROW_LIMIT) -> bool:
    """True iff no row/column permutation of ``m`` is row-wise lex smaller."""
    _check_limit(m, limit)
    n = m.n_rows
    rows = m.rows()

    def search(depth: int, used: int, prefixes: list) -> bool:
        # invariant: image rows < depth equal m's rows < depth
        if depth == n:
            return True
        groups = _expand(rows, prefixes, used, depth)
        row_min = min(groups)
        if row_min < rows[depth]:
            return False
        if row_min > rows[depth]:
            return True
        return all(search(depth + 1, used | (1 << r), keys) for r, keys in groups[row_min])

    return search(0, 0, [()] * m.n_cols)


def canonical_key(m: Matrix, limit: int = DEFAULT_ROW_LIMIT) -> tuple[int, ...]:
    return canonical_form(m, limit).cells


@dataclass
class ClassReport:
    """Solutions grouped by symmetry class.

    ``classes`` maps each canonical form to its members. When
    ``transposed`` is set the keys are canonical forms of the transposed
    members (used when there are too many rows but few enough columns).
    """

    classes: dict[Matrix, list[Matrix]] = field(default_factory=dict)
    n_solutions: int = 0
    transposed: bool = False

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def multiplicities(self) -> list[int]:
        return sorted((len(v) for v in self.classes.values()), reverse=True)


class Classifier:
    """Incremental version of :func:`classify` for streaming solutions."""

    def __init__(self, limit: int = DEFAULT_ROW_LIMIT, keep_members: bool = True):
        self.limit = limit
        self.keep_members = keep_members
        self.report = ClassReport()
        self._shape: tuple[int, int] | None = None

    def add(self, m: Matrix) -> Matrix:
        if self._shape is None:
            self._shape = m.shape
            self.report.transposed = m.n_rows > self.limit and m.n_cols <= self.limit
        elif m.shape != self._shape:
            raise ValueError(f"shape {m.shape} differs from {self._shape}")
        if self.report.transposed:
            key = canonical_form(matrix_transpose(m), self.limit)
        else:
            key = canonical_form(m, self.limit)
        members = self.report.classes.setdefault(key, [])
        if self.keep_members:
            members.append(m)
        self.report.n_solutions += 1
        return key


def classify(solutions: Iterable[Matrix], limit: int = DEFAULT_ROW_LIMIT) -> ClassReport:
    c = Classifier(limit)
    for m in solutions:
        c.add(m)
    return c.report


def orbit(m: Matrix, value_maps: Sequence = ()) -> set[Matrix]:
    """Every row/column permutation of ``m`` and of its images under
    ``value_maps`` (callables on values). Exponential; for small matrices."""
    seeds = {m}
    frontier = [m]
    # close the seeds under the value maps
    while frontier:
        x = frontier.pop()
        for f in value_maps:
            y = apply_value_map(x, f)
            if y not in seeds:
                seeds.add(y)
                frontier.append(y)
    out = set()
    for s in seeds:
        for sigma in permutations(range(m.n_rows)):
            for pi in permutations(range(m.n_cols)):
                out.add(apply_row_col_perm(s, sigma, pi))
    return out
