"""Depth-first enumeration with propagation to a fixpoint.

Branching follows a static variable order over the grid (then the auxiliary
variables) and tries values in ascending order. Every dead end, i.e. a
branch whose propagation wipes out a domain, counts as one failure.
"""
from __future__ import annotations

import enum
import time
from collections import deque
from dataclasses import dataclass
from operator import itemgetter
from typing import Callable, Iterable, Sequence

from .core import Constraint, DomainSet, Failure, Matrix, Model, VarGrid


class VarOrder(enum.Enum):
    ROW_WISE = "rowwise"
    COL_WISE = "colwise"
    SNAKE_ROW_WISE = "snake_rowwise"
    SNAKE_COL_WISE = "snake_colwise"


def grid_order(n_rows: int, n_cols: int, order: VarOrder) -> list[int]:
    """Variable ids (``i * n_cols + j``) in the visiting order."""
    if order is VarOrder.ROW_WISE:
        return list(range(n_rows * n_cols))
    if order is VarOrder.COL_WISE:
        return [i * n_cols + j for j in range(n_cols) for i in range(n_rows)]
    if order is VarOrder.SNAKE_ROW_WISE:
        out = []
        for i in range(n_rows):
            js = range(n_cols) if i % 2 == 0 else range(n_cols - 1, -1, -1)
            out += [i * n_cols + j for j in js]
        return out
    out = []
    for j in range(n_cols):
        is_ = range(n_rows) if j % 2 == 0 else range(n_rows - 1, -1, -1)
        out += [i * n_cols + j for i in is_]
    return out


@dataclass
class SearchConfig:
    var_order: VarOrder = VarOrder.ROW_WISE
    max_solutions: int | None = None
    time_budget: float | None = None  # seconds


@dataclass
class SearchStats:
    n_solutions: int = 0
    n_failures: int = 0
    n_nodes: int = 0
    elapsed: float = 0.0
    complete: bool = True


class _Stop(Exception):
    pass


class Propagator:
    """Constraint-oriented FIFO propagation over a bitmask store."""

    def __init__(self, n_vars: int, constraints: Sequence[Constraint]):
        self.constraints = list(constraints)
        self.watch: list[list[int]] = [[] for _ in range(n_vars)]
        self.getters = []
        for k, c in enumerate(self.constraints):
            for v in set(c.scope):
                self.watch[v].append(k)
            scope = tuple(c.scope)
            # snapshots as tuples, taken and compared without a Python loop
            if len(scope) > 1:
                self.getters.append(itemgetter(*scope))
            else:
                self.getters.append(lambda s, scope=scope: tuple(s[v] for v in scope))

    def run(self, store: list[int], dirty: Iterable[int] | None = None) -> bool:
        """Filter until no domain changes. ``dirty`` lists the constraints to
        start from (all when None). Returns False on failure."""
        cons = self.constraints
        watch = self.watch
        getters = self.getters
        queued = [False] * len(cons)
        queue: deque[int] = deque()
        for k in range(len(cons)) if dirty is None else dirty:
            if not queued[k]:
                queued[k] = True
                queue.append(k)
        while queue:
            k = queue.popleft()
            queued[k] = False
            c = cons[k]
            get = getters[k]
            before = get(store)
            try:
                c.prune(store)
            except Failure:
                return False
            after = get(store)
            if after == before:
                continue
            idem = c.idempotent
            for v, b, a in zip(c.scope, before, after):
                if a != b:
                    if not a:
                        return False
                    for k2 in watch[v]:
                        if not queued[k2] and (k2 != k or not idem):
                            queued[k2] = True
                            queue.append(k2)
        return True


def propagate(grid: VarGrid, constraints: Sequence[Constraint],
              aux: Sequence[DomainSet] = ()) -> tuple[VarGrid, bool]:
    """Run every constraint's filter to a common fixpoint.

    Returns the narrowed grid and whether propagation failed.
    """
    store = grid.masks() + [d.mask for d in aux]
    ok = Propagator(len(store), constraints).run(store)
    doms = tuple(DomainSet.from_mask(m) for m in store[:grid.n_rows * grid.n_cols])
    return VarGrid(grid.n_rows, grid.n_cols, doms), not ok


class Solver:
    def __init__(self, model: Model, config: SearchConfig | None = None):
        self.model = model
        self.config = config or SearchConfig()
        self.order = grid_order(model.n_rows, model.n_cols, self.config.var_order)
        self.order += list(range(model.n_grid_vars, model.n_vars))
        self.prop = Propagator(model.n_vars, model.constraints)
        self.stats = SearchStats()

    def solve(self, callback: Callable[[Matrix], object] | None = None) -> SearchStats:
        self.callback = callback
        cfg = self.config
        self.deadline = None if cfg.time_budget is None else time.perf_counter() + cfg.time_budget
        start = time.perf_counter()
        store = self.model.initial_store()
        try:
            if any(d == 0 for d in store) or not self.prop.run(store):
                self.stats.n_failures += 1
            else:
                self._dfs(store, 0)
        except _Stop:
            self.stats.complete = False
        self.stats.elapsed = time.perf_counter() - start
        return self.stats

    def _leaf(self, store: list[int]) -> None:
        model = self.model
        values = [d.bit_length() - 1 for d in store]
        for c in model.constraints:
            if not c.check([values[v] for v in c.scope]):
                raise AssertionError(f"{c!r} violated by a propagated leaf")
        stats = self.stats
        stats.n_solutions += 1
        if self.callback is not None:
            ng = model.n_grid_vars
            self.callback(Matrix(model.n_rows, model.n_cols, tuple(values[:ng])))
        cfg = self.config
        if cfg.max_solutions is not None and stats.n_solutions >= cfg.max_solutions:
            raise _Stop

    def _dfs(self, store: list[int], pos: int) -> None:
        order = self.order
        n = len(order)
        while pos < n:
            d = store[order[pos]]
            if d & (d - 1):
                break
            pos += 1
        if pos == n:
            self._leaf(store)
            return
        stats = self.stats
        stats.n_nodes += 1
        if self.deadline is not None and stats.n_nodes % 256 == 0 \
                and time.perf_counter() > self.deadline:
            raise _Stop
        var = order[pos]
        dirty = self.prop.watch[var]
        d = store[var]
        while d:
            low = d & -d
            d ^= low
            child = store.copy()
            child[var] = low
            if self.prop.run(child, dirty):
                self._dfs(child, pos + 1)
            else:
                stats.n_failures += 1


def solve_all(model: Model, config: SearchConfig | None = None,
              callback: Callable[[Matrix], object] | None = None) -> SearchStats:
    """Enumerate every solution of ``model``; ``callback`` sees each one."""
    return Solver(model, config).solve(callback)


def all_solutions(model: Model, config: SearchConfig | None = None) -> list[Matrix]:
    out: list[Matrix] = []
    solve_all(model, config, out.append)
    return out
