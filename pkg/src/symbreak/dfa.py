"""Explicit-state automata, the Regular constraint and the two automata that
encode complete symmetry breaking on 0/1 function matrices.

A function matrix has one 1 per row. Writing ``Y_i`` for the (1-based)
column of the 1 in row ``i``, the lex-leader of its row/column class is
exactly the matrix whose ``Y`` sequence starts at the last column, steps
down one column at a time, and never lets a run get longer than the run
before it (column sums are non-increasing from right to left).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence

from .core import Constraint, DomainSet, Failure, Strength, mask_values


@dataclass(frozen=True)
class Dfa:
    states: frozenset[int]
    alphabet: frozenset[int]
    transitions: Mapping[int, Mapping[int, int]]
    initial: int
    accepting: frozenset[int]
    labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if self.initial not in self.states or not self.accepting <= self.states:
            raise ValueError("initial/accepting states must be declared")
        for q, row in self.transitions.items():
            if q not in self.states:
                raise ValueError(f"transition from undeclared state {q}")
            for a, r in row.items():
                if a not in self.alphabet or r not in self.states:
                    raise ValueError(f"bad transition {q} -{a}-> {r}")

    def accepts(self, word: Sequence[int]) -> bool:
        q = self.initial
        for a in word:
            q = self.transitions.get(q, {}).get(a)
            if q is None:
                return False
        return q in self.accepting


class _Builder:
    """Numbers hashable state labels on first use."""

    def __init__(self):
        self.ids: dict[Hashable, int] = {}
        self.trans: dict[int, dict[int, int]] = {}
        self.alphabet: set[int] = set()

    def state(self, label: Hashable) -> int:
        if label not in self.ids:
            self.ids[label] = len(self.ids)
            self.trans[self.ids[label]] = {}
        return self.ids[label]

    def edge(self, src: Hashable, symbol: int, dst: Hashable) -> None:
        self.alphabet.add(symbol)
        self.trans[self.state(src)][symbol] = self.state(dst)

    def build(self, initial: Hashable, accepting) -> Dfa:
        init = self.state(initial)
        acc = frozenset(self.state(a) for a in accepting)
        labels = tuple(sorted(self.ids, key=self.ids.get))
        return Dfa(frozenset(self.ids.values()), frozenset(self.alphabet),
                   self.trans, init, acc, labels)


def row_delimiter(m_cols: int) -> int:
    """Symbol separating a row's cells from its position variable."""
    return max(1, m_cols) + 1


def build_row_function_dfa(m_cols: int) -> Dfa:
    """Accepts ``x_1 .. x_m # y`` where the 0/1 word ``x`` has a single 1 at
    (1-based) position ``y``. States are ``(row sum, position, where the 1 is)``."""
    if m_cols < 1:
        raise ValueError("m_cols must be positive")
    hash_ = row_delimiter(m_cols)
    b = _Builder()
    for d in range(m_cols):
        b.edge((0, d, 0), 0, (0, d + 1, 0))
        b.edge((0, d, 0), 1, (1, d + 1, d + 1))
        for p in range(1, d + 1):
            b.edge((1, d, p), 0, (1, d + 1, p))
    for p in range(1, m_cols + 1):
        b.edge((1, m_cols, p), hash_, ("#", p))
        b.edge(("#", p), p, "accept")
    return b.build((0, 0, 0), ["accept"])


def build_col_sum_dfa(n_rows: int, m_cols: int) -> Dfa:
    """Accepts ``Y_1 .. Y_n`` over ``1..m`` that start at ``m``, are
    non-increasing in unit steps, and whose run lengths never increase.

    States are ``(last value, its run length, previous run length)``; the
    first run is bounded only by ``n_rows``.
    """
    if n_rows < 1 or m_cols < 1:
        raise ValueError("n_rows and m_cols must be positive")
    b = _Builder()
    b.state("start")
    b.edge("start", m_cols, (m_cols, 1, n_rows))
    accepting = []
    todo = [(m_cols, 1, n_rows)]
    seen = set(todo)
    while todo:
        v, s, r = q = todo.pop()
        accepting.append(q)
        nxt = []
        if s < r:
            nxt.append((v, (v, s + 1, r)))
        if v > 1:
            nxt.append((v - 1, (v - 1, 1, s)))
        for sym, dst in nxt:
            b.edge(q, sym, dst)
            if dst not in seen:
                seen.add(dst)
                todo.append(dst)
    b.alphabet.update(range(1, m_cols + 1))
    return b.build("start", accepting)


def _regular_masks(masks: list[int], dfa: Dfa) -> list[int]:
    """Keep the values lying on an accepted path through the layered graph."""
    trans = dfa.transitions
    n = len(masks)
    layers = [{dfa.initial}]
    for k in range(n):
        syms = mask_values(masks[k])
        nxt = set()
        for q in layers[k]:
            row = trans.get(q)
            if row:
                for a in syms:
                    r = row.get(a)
                    if r is not None:
                        nxt.add(r)
        if not nxt:
            raise Failure
        layers.append(nxt)
    alive = layers[n] & dfa.accepting
    if not alive:
        raise Failure
    out = [0] * n
    for k in range(n - 1, -1, -1):
        syms = mask_values(masks[k])
        keep = set()
        mask = 0
        for q in layers[k]:
            row = trans.get(q)
            if not row:
                continue
            for a in syms:
                if row.get(a) in alive:
                    keep.add(q)
                    mask |= 1 << a
        out[k] = mask
        alive = keep
    return out


def dfa_filter(domains: Sequence[DomainSet], dfa: Dfa) -> tuple[list[DomainSet], bool]:
    """Domain-consistent filtering of ``domains`` against the language of
    ``dfa``. Returns the filtered domains and whether the filter failed."""
    try:
        masks = _regular_masks([d.mask for d in domains], dfa)
    except Failure:
        return [DomainSet() for _ in domains], True
    return [DomainSet.from_mask(m) for m in masks], False


class Regular(Constraint):
    strength = Strength.DOMAIN_CONSISTENT

    def __init__(self, scope: Sequence[int], dfa: Dfa):
        super().__init__(scope)
        self.dfa = dfa

    def check(self, values):
        return self.dfa.accepts(values)

    def prune(self, store):
        scope = self.scope
        new = _regular_masks([store[v] for v in scope], self.dfa)
        for v, m in zip(scope, new):
            store[v] &= m
            if not store[v]:
                raise Failure
