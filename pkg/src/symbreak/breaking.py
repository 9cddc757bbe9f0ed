"""Static symmetry-breaking constraints for matrix models.

Each method comes as a checker on complete matrices (``check_*``) and as a
poster (``post_*``) that returns a copy of a model with the corresponding
filtered constraints added.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .canonical import DEFAULT_ROW_LIMIT, is_lex_leader
from .core import DomainSet, Matrix, Model, Predicate, matrix_transpose
from .dfa import Regular, build_col_sum_dfa, build_row_function_dfa, row_delimiter
from .lexorder import entwined_lex_leq, lex_leq, reversed_lex_leq
from .propagators import LexLeq, Less, Precedence, PugetChannel


class SymBreak(enum.Enum):
    NOSB = "nosb"
    ROW_WISE_LEX = "rowwiselex"
    DOUBLE_LEX = "doublelex"
    SNAKELEX_R = "snakelex_r"
    SNAKELEX_C = "snakelex_c"
    ORDER_1ST_ROW_COL = "order1strowcol"
    DOUBLE_LEX_COL_SUM = "dlexcolsum"


class ValueOrder(enum.Enum):
    ROW_WISE = "rowwise"
    COL_WISE = "colwise"


@dataclass(frozen=True)
class ValuePrecedence:
    """Value precedence over ``groups`` of interchangeable values."""

    order: ValueOrder = ValueOrder.ROW_WISE
    groups: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class PugetOrder:
    """Puget's first-occurrence channeling; ``less`` lists pairs ``(a, b)``
    posted as ``Z_a < Z_b``. Empty means chain all values in order."""

    order: ValueOrder = ValueOrder.ROW_WISE
    less: tuple[tuple[int, int], ...] = ()


@dataclass(frozen=True)
class SymBreakConfig:
    kind: SymBreak = SymBreak.NOSB
    value_breaking: ValuePrecedence | PugetOrder | None = None

    @classmethod
    def parse(cls, sb: str, value_sb: str | None = None) -> SymBreakConfig:
        """Parse CLI strings such as ``doublelex`` and ``precedence:rowwise``."""
        try:
            kind = SymBreak(sb.strip().lower())
        except ValueError:
            raise ValueError(
                f"unknown symmetry breaking {sb!r}; choose from "
                + ", ".join(k.value for k in SymBreak)) from None
        vb = None
        if value_sb:
            name, _, arg = value_sb.partition(":")
            order = ValueOrder(arg or "rowwise")
            if name == "precedence":
                vb = ValuePrecedence(order)
            elif name == "puget":
                vb = PugetOrder(order)
            else:
                raise ValueError(f"unknown value symmetry breaking {value_sb!r}")
        return cls(kind, vb)

    @property
    def name(self) -> str:
        if self.value_breaking is None:
            return self.kind.value
        tag = "precedence" if isinstance(self.value_breaking, ValuePrecedence) else "puget"
        return f"{self.kind.value}+{tag}:{self.value_breaking.order.value}"


# --- checkers --------------------------------------------------------------

def _chain(vectors, leq) -> bool:
    return all(leq(a, b) for a, b in zip(vectors, vectors[1:]))


def check_double_lex(m: Matrix) -> bool:
    return _chain(m.rows(), lex_leq) and _chain(m.cols(), lex_leq)


def _snake_pairs(k: int):
    """(j, j2, reversed?) comparisons between lines of a snake unfolding."""
    for j in range(k):
        for j2 in (j + 1, j + 2):
            if j2 < k:
                yield j, j2, j % 2 == 1


def check_snakelex_c(m: Matrix) -> bool:
    """Snake unfolding down column 0, up column 1, down column 2, ...:
    columns ordered against their next two neighbours (reversed for odd
    columns) and neighbouring rows in entwined order."""
    cols = m.cols()
    for j, j2, rev in _snake_pairs(len(cols)):
        if not (reversed_lex_leq if rev else lex_leq)(cols[j], cols[j2]):
            return False
    return _chain(m.rows(), entwined_lex_leq)


def check_snakelex_r(m: Matrix) -> bool:
    return check_snakelex_c(matrix_transpose(m))


def check_order_1st_row_col(m: Matrix) -> bool:
    """Top-left entry smallest, first row and first column strictly increasing."""
    def increasing(xs):
        return all(a < b for a, b in zip(xs, xs[1:]))

    if not (increasing(m.row(0)) and increasing(m.col(0))):
        return False
    corner = m[0, 0]
    return all(x > corner for x in m.cells[1:])


def row_positions(m: Matrix) -> list[int] | None:
    """1-based column of the single 1 in each row, or None if not a function matrix."""
    out = []
    for row in m.rows():
        if any(x not in (0, 1) for x in row) or sum(row) != 1:
            return None
        out.append(row.index(1) + 1)
    return out


def check_double_lex_col_sum(m: Matrix) -> bool:
    ys = row_positions(m)
    return ys is not None and build_col_sum_dfa(m.n_rows, m.n_cols).accepts(ys)


def check_value_precedence(seq: Sequence[int], i: int, j: int) -> bool:
    """True iff ``j`` does not occur before the first occurrence of ``i``."""
    for x in seq:
        if x == i:
            return True
        if x == j:
            return False
    return True


def first_occurrences(seq: Sequence[int], values: Sequence[int]) -> list[int]:
    """1-based index of the first occurrence of each value (Puget's ``Z``)."""
    out = []
    for v in values:
        try:
            out.append(list(seq).index(v) + 1)
        except ValueError:
            raise ValueError(f"value {v} does not occur") from None
    return out


# --- posters ---------------------------------------------------------------

def _with(model: Model, *constraints) -> Model:
    out = model.copy()
    out.add(*constraints)
    return out


def post_double_lex(model: Model) -> Model:
    """Pairwise lex constraints between adjacent rows and adjacent columns.

    Each pair is filtered to domain consistency, but the conjunction is not:
    complete propagation of the whole constraint is NP-hard.
    """
    rows = [model.row_vars(i) for i in range(model.n_rows)]
    cols = [model.col_vars(j) for j in range(model.n_cols)]
    cs = [LexLeq(a, b) for a, b in zip(rows, rows[1:])]
    cs += [LexLeq(a, b) for a, b in zip(cols, cols[1:])]
    return _with(model, *cs)


def _snake_constraints(major: list[list[int]], minor: list[list[int]]):
    out = []
    for j, j2, rev in _snake_pairs(len(major)):
        a, b = major[j], major[j2]
        out.append(LexLeq(a[::-1], b[::-1]) if rev else LexLeq(a, b))
    for u, v in zip(minor, minor[1:]):
        x = [u[k] if k % 2 == 0 else v[k] for k in range(len(u))]
        y = [v[k] if k % 2 == 0 else u[k] for k in range(len(u))]
        out.append(LexLeq(x, y))
    return out


def post_snakelex_c(model: Model) -> Model:
    rows = [model.row_vars(i) for i in range(model.n_rows)]
    cols = [model.col_vars(j) for j in range(model.n_cols)]
    return _with(model, *_snake_constraints(cols, rows))


def post_snakelex_r(model: Model) -> Model:
    rows = [model.row_vars(i) for i in range(model.n_rows)]
    cols = [model.col_vars(j) for j in range(model.n_cols)]
    return _with(model, *_snake_constraints(rows, cols))


def post_row_wise_lex_leader(model: Model, limit: int = DEFAULT_ROW_LIMIT) -> Model:
    """Complete row/column symmetry breaking.

    The lex-leader is checked on complete assignments; the implied pairwise
    row and column lex constraints prune partial assignments.
    """
    n, m = model.n_rows, model.n_cols
    if n > limit:
        raise ValueError(f"{n} rows exceed the lex-leader row limit {limit}")

    def leader(values):
        return is_lex_leader(Matrix(n, m, tuple(values)), limit)

    out = post_double_lex(model)
    out.add(Predicate(range(model.n_grid_vars), leader, "row-wise lex-leader"))
    return out


def post_order_1st_row_col(model: Model) -> Model:
    """``X00 < X10 < ...``, ``X00 < X01 < ...`` and ``X00 < X(1+i)(1+j)``."""
    if "alldiff" not in model.tags:
        raise ValueError("Order1stRowCol requires an all-different matrix model")
    v = model.var
    n, m = model.n_rows, model.n_cols
    cs = [Less(v(i, 0), v(i + 1, 0)) for i in range(n - 1)]
    cs += [Less(v(0, j), v(0, j + 1)) for j in range(m - 1)]
    cs += [Less(v(0, 0), v(1 + i, 1 + j)) for i in range(n - 1) for j in range(m - 1)]
    return _with(model, *cs)


def post_double_lex_col_sum(model: Model) -> Model:
    """Encode complete symmetry breaking on a 0/1 function matrix with one
    Regular constraint per row (linking the row to ``Y_i``) and one over
    ``Y_1..Y_n``."""
    if not model.is_zero_one():
        raise ValueError("DoubleLexColSum requires a 0/1 matrix model")
    n, m = model.n_rows, model.n_cols
    out = model.copy()
    row_dfa = build_row_function_dfa(m)
    hash_ = out.add_aux(DomainSet([row_delimiter(m)]))
    ys = []
    for i in range(n):
        y = out.add_aux(DomainSet.range(1, m))
        ys.append(y)
        out.add(Regular(model.row_vars(i) + [hash_, y], row_dfa))
    out.add(Regular(ys, build_col_sum_dfa(n, m)))
    out.tags = out.tags | {"function"}
    return out


def grid_sequence(model: Model, order: ValueOrder) -> list[int]:
    if order is ValueOrder.ROW_WISE:
        return list(range(model.n_grid_vars))
    return [v for j in range(model.n_cols) for v in model.col_vars(j)]


def post_precedence(model: Model, groups: Sequence[Sequence[int]],
                    order: ValueOrder = ValueOrder.ROW_WISE) -> Model:
    """For each group of interchangeable values, chain precedence between
    consecutive values along a row-wise or column-wise scan."""
    seq = grid_sequence(model, order)
    cs = []
    for g in groups:
        g = sorted(g)
        cs += [Precedence(seq, s, t) for s, t in zip(g, g[1:])]
    return _with(model, *cs)


def puget_channel(model: Model, values: Sequence[int],
                  sequence: Sequence[int] | None = None) -> tuple[Model, dict[int, int]]:
    """Add ``Z_v`` = 1-based first position of value ``v`` along ``sequence``.

    Returns the new model and the map from value to its ``Z`` variable id.
    """
    if "surjective" not in model.tags:
        raise ValueError("Puget channeling requires a surjective model (every value occurs)")
    seq = list(range(model.n_grid_vars)) if sequence is None else list(sequence)
    out = model.copy()
    zs = {}
    for val in values:
        z = out.add_aux(DomainSet.range(1, len(seq)))
        zs[val] = z
        out.add(PugetChannel(seq, z, val))
    return out, zs


def post_puget(model: Model, less: Sequence[tuple[int, int]], values: Sequence[int],
               sequence: Sequence[int] | None = None) -> Model:
    """Channel ``values`` and post ``Z_a < Z_b`` for each pair in ``less``."""
    out, zs = puget_channel(model, values, sequence)
    out.add(*(Less(zs[a], zs[b]) for a, b in less))
    return out


def apply_config(model: Model, config: SymBreakConfig) -> Model:
    kind = config.kind
    if kind is SymBreak.NOSB:
        out = model.copy()
    elif kind is SymBreak.DOUBLE_LEX:
        out = post_double_lex(model)
    elif kind is SymBreak.SNAKELEX_C:
        out = post_snakelex_c(model)
    elif kind is SymBreak.SNAKELEX_R:
        out = post_snakelex_r(model)
    elif kind is SymBreak.ROW_WISE_LEX:
        out = post_row_wise_lex_leader(model)
    elif kind is SymBreak.ORDER_1ST_ROW_COL:
        out = post_order_1st_row_col(model)
    elif kind is SymBreak.DOUBLE_LEX_COL_SUM:
        out = post_double_lex_col_sum(model)
    else:  # pragma: no cover
        raise ValueError(kind)
    vb = config.value_breaking
    values = sorted(model.value_domain())
    if isinstance(vb, ValuePrecedence):
        groups = vb.groups or (tuple(values),)
        out = post_precedence(out, groups, vb.order)
    elif isinstance(vb, PugetOrder):
        less = vb.less or tuple(zip(values, values[1:]))
        out = post_puget(out, less, values, grid_sequence(model, vb.order))
    return out
