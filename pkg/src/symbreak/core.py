"""Matrices, domains, variable grids, models and the constraint contract.

Indexing is 0-based everywhere in code and in files. Cell ``(i, j)`` of an
``n x m`` grid is variable ``i * m + j``; auxiliary variables follow the grid
cells in the order they were added.

Domains are kept by the search engine as integer bitmasks (bit ``v`` set iff
value ``v`` is present), so all domain values must be non-negative.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Iterator, Mapping, MutableSequence, Sequence

Perm = Sequence[int]
Store = MutableSequence[int]


class Failure(Exception):
    """Raised internally by filters on a domain wipe-out."""


class ResourceLimitError(RuntimeError):
    """An operation would exceed an explicit size limit (e.g. n! enumeration)."""


# --- bitmask helpers -------------------------------------------------------

def mask_of(values: Iterable[int]) -> int:
    m = 0
    for v in values:
        if v < 0:
            raise ValueError(f"domain values must be non-negative, got {v}")
        m |= 1 << v
    return m


def mask_values(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_min(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def mask_max(mask: int) -> int:
    return mask.bit_length() - 1


def is_singleton(mask: int) -> bool:
    return mask != 0 and mask & (mask - 1) == 0


# --- matrices --------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    """A complete ``n_rows x n_cols`` integer assignment, stored row-major."""

    n_rows: int
    n_cols: int
    cells: tuple[int, ...]

    def __post_init__(self):
        if self.n_rows < 1 or self.n_cols < 1:
            raise ValueError("matrix dimensions must be positive")
        if len(self.cells) != self.n_rows * self.n_cols:
            raise ValueError(
                f"expected {self.n_rows * self.n_cols} cells, got {len(self.cells)}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Matrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("rows must be non-empty and of equal length")
        return cls(len(rows), len(rows[0]), tuple(x for r in rows for x in r))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError(f"cell {ij} outside {self.n_rows}x{self.n_cols}")
        return self.cells[i * self.n_cols + j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    def row(self, i: int) -> tuple[int, ...]:
        m = self.n_cols
        return self.cells[i * m:(i + 1) * m]

    def col(self, j: int) -> tuple[int, ...]:
        return self.cells[j::self.n_cols]

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.n_rows)]

    def cols(self) -> list[tuple[int, ...]]:
        return [self.col(j) for j in range(self.n_cols)]

    def values(self) -> set[int]:
        return set(self.cells)

    def to_text(self) -> str:
        lines = [f"{self.n_rows} {self.n_cols}"]
        lines += [" ".join(str(x) for x in r) for r in self.rows()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Matrix:
        """Parse ``"n m"`` followed by ``n`` lines of ``m`` integers."""
        lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
        if not lines or len(lines[0]) != 2:
            raise ValueError("first line must be 'n m'")
        n, m = int(lines[0][0]), int(lines[0][1])
        body = lines[1:]
        if len(body) != n or any(len(r) != m for r in body):
            raise ValueError(f"expected {n} rows of {m} integers")
        return cls.from_rows([[int(x) for x in r] for r in body])

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows())


def matrix_transpose(m: Matrix) -> Matrix:
    return Matrix(m.n_cols, m.n_rows, tuple(x for c in m.cols() for x in c))


def check_permutation(p: Perm, size: int) -> tuple[int, ...]:
    p = tuple(p)
    if len(p) != size or sorted(p) != list(range(size)):
        raise ValueError(f"{p} is not a permutation of range({size})")
    return p


def compose(p: Perm, q: Perm) -> tuple[int, ...]:
    """``(p o q)(i) = p[q[i]]``."""
    return tuple(p[i] for i in q)


def apply_row_col_perm(m: Matrix, sigma: Perm, pi: Perm) -> Matrix:
    """Return the matrix ``R`` with ``R[i, j] = m[sigma[i], pi[j]]``.

    With this convention applying ``(s1, p1)`` and then ``(s2, p2)`` equals
    applying ``(compose(s1, s2), compose(p1, p2))`` once.
    """
    sigma = check_permutation(sigma, m.n_rows)
    pi = check_permutation(pi, m.n_cols)
    rows = m.rows()
    return Matrix.from_rows([[rows[s][p] for p in pi] for s in sigma])


def apply_value_map(m: Matrix, theta: Mapping[int, int] | Callable[[int], int]) -> Matrix:
    if callable(theta):
        fn = theta
    else:
        def fn(v):
            try:
                return theta[v]
            except KeyError:
                raise ValueError(f"value {v} not in value map") from None
    return Matrix(m.n_rows, m.n_cols, tuple(fn(x) for x in m.cells))


# --- domains ---------------------------------------------------------------

class DomainSet:
    """Immutable finite set of non-negative integers."""

    __slots__ = ("mask",)

    def __init__(self, values: Iterable[int] = ()):
        self.mask = mask_of(values)

    @classmethod
    def from_mask(cls, mask: int) -> DomainSet:
        d = cls.__new__(cls)
        d.mask = mask
        return d

    @classmethod
    def range(cls, lo: int, hi: int) -> DomainSet:
        """Values ``lo..hi`` inclusive."""
        return cls.from_mask(((1 << (hi + 1)) - 1) & ~((1 << lo) - 1) if hi >= lo else 0)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(mask_values(self.mask))

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(mask_values(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        return isinstance(other, DomainSet) and other.mask == self.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def min(self) -> int:
        if not self.mask:
            raise ValueError("empty domain")
        return mask_min(self.mask)

    def max(self) -> int:
        if not self.mask:
            raise ValueError("empty domain")
        return mask_max(self.mask)

    def remove(self, v: int) -> DomainSet:
        return DomainSet.from_mask(self.mask & ~(1 << v))

    def is_singleton(self) -> bool:
        return is_singleton(self.mask)

    def __repr__(self) -> str:
        return f"DomainSet({list(self.values)})"


@dataclass(frozen=True)
class VarGrid:
    n_rows: int
    n_cols: int
    domains: tuple[DomainSet, ...]

    @classmethod
    def uniform(cls, n_rows: int, n_cols: int, domain: DomainSet) -> VarGrid:
        return cls(n_rows, n_cols, (domain,) * (n_rows * n_cols))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Iterable[int] | int]]) -> VarGrid:
        doms = []
        for r in rows:
            for d in r:
                doms.append(DomainSet([d] if isinstance(d, int) else d))
        return cls(len(rows), len(rows[0]), tuple(doms))

    @classmethod
    def from_matrix(cls, m: Matrix) -> VarGrid:
        return cls(m.n_rows, m.n_cols, tuple(DomainSet([x]) for x in m.cells))

    def __getitem__(self, ij: tuple[int, int]) -> DomainSet:
        i, j = ij
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError(f"cell {ij} outside {self.n_rows}x{self.n_cols}")
        return self.domains[i * self.n_cols + j]

    def is_assigned(self) -> bool:
        return all(d.is_singleton() for d in self.domains)

    def to_matrix(self) -> Matrix:
        if not self.is_assigned():
            raise ValueError("grid is not fully assigned")
        return Matrix(self.n_rows, self.n_cols, tuple(d.min() for d in self.domains))

    def masks(self) -> list[int]:
        return [d.mask for d in self.domains]


# --- constraints -----------------------------------------------------------

class Strength(enum.Enum):
    CHECK_ONLY = "check-only"
    FORWARD_CHECKING = "forward-checking"
    DOMAIN_CONSISTENT = "domain-consistent"


class Constraint:
    """A checker plus a domain filter over ``scope`` (a tuple of variable ids).

    Subclasses implement :meth:`check` and :meth:`prune`. ``prune`` narrows
    the bitmask store in place and raises :class:`Failure` on a wipe-out.
    The default prune only checks once every scoped variable is fixed.
    """

    strength = Strength.CHECK_ONLY
    # prune reaches its own fixpoint in one call
    idempotent = True

    def __init__(self, scope: Iterable[int]):
        self.scope = tuple(scope)

    def check(self, values: Sequence[int]) -> bool:
        raise NotImplementedError

    def prune(self, store: Store) -> None:
        vals = []
        for v in self.scope:
            d = store[v]
            if d & (d - 1):
                return
            vals.append(d.bit_length() - 1)
        if not self.check(vals):
            raise Failure

    def filter(self, store: Store) -> tuple[bool, bool]:
        """Run the filter on ``store``; return ``(changed, failed)``."""
        before = [store[v] for v in self.scope]
        try:
            self.prune(store)
        except Failure:
            return True, True
        changed = any(store[v] != b for v, b in zip(self.scope, before))
        failed = any(store[v] == 0 for v in self.scope)
        return changed, failed

    def filter_domains(self, domains: Sequence[DomainSet]) -> tuple[list[DomainSet], bool, bool]:
        """Filter domains given positionally for ``scope``; handy for tests."""
        if len(domains) != len(self.scope):
            raise ValueError("one domain per scoped variable expected")
        store: dict[int, int] = {}
        for v, d in zip(self.scope, domains):
            store[v] = store.get(v, d.mask) & d.mask
        size = max(self.scope, default=-1) + 1
        flat = [0] * size
        for v, m in store.items():
            flat[v] = m
        changed, failed = self.filter(flat)
        return [DomainSet.from_mask(flat[v]) for v in self.scope], changed, failed

    def __repr__(self) -> str:
        return f"{type(self).__name__}(scope={self.scope})"


class Predicate(Constraint):
    """Check-only constraint defined by a Python predicate over scope values."""

    def __init__(self, scope: Iterable[int], fn: Callable[[Sequence[int]], bool], name: str = ""):
        super().__init__(scope)
        self.fn = fn
        self.name = name or getattr(fn, "__name__", "predicate")

    def check(self, values: Sequence[int]) -> bool:
        return bool(self.fn(values))

    def __repr__(self) -> str:
        return f"Predicate({self.name!r}, arity={len(self.scope)})"


@dataclass
class Model:
    """A variable grid, auxiliary variables and constraints.

    ``tags`` records structural facts the symmetry-breaking posters rely on:
    ``"alldiff"`` (every cell takes a different value), ``"surjective"``
    (every value occurs) and ``"function"`` (0/1 cells, row sums 1).
    """

    grid: VarGrid
    constraints: list[Constraint] = field(default_factory=list)
    aux_vars: list[DomainSet] = field(default_factory=list)
    name: str = "model"
    params: dict = field(default_factory=dict)
    tags: frozenset[str] = frozenset()

    @property
    def n_rows(self) -> int:
        return self.grid.n_rows

    @property
    def n_cols(self) -> int:
        return self.grid.n_cols

    @property
    def n_grid_vars(self) -> int:
        return self.grid.n_rows * self.grid.n_cols

    @property
    def n_vars(self) -> int:
        return self.n_grid_vars + len(self.aux_vars)

    def var(self, i: int, j: int) -> int:
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise IndexError(f"cell {(i, j)} outside {self.n_rows}x{self.n_cols}")
        return i * self.n_cols + j

    def row_vars(self, i: int) -> list[int]:
        return [self.var(i, j) for j in range(self.n_cols)]

    def col_vars(self, j: int) -> list[int]:
        return [self.var(i, j) for i in range(self.n_rows)]

    def copy(self) -> Model:
        return replace(self, constraints=list(self.constraints),
                       aux_vars=list(self.aux_vars), params=dict(self.params))

    def add_aux(self, domain: DomainSet) -> int:
        self.aux_vars.append(domain)
        return self.n_vars - 1

    def add(self, *constraints: Constraint) -> None:
        n = self.n_vars
        for c in constraints:
            if any(not 0 <= v < n for v in c.scope):
                raise ValueError(f"{c!r} has a scope variable out of range")
            self.constraints.append(c)

    def initial_store(self) -> list[int]:
        return self.grid.masks() + [d.mask for d in self.aux_vars]

    def value_domain(self) -> set[int]:
        out: set[int] = set()
        for d in self.grid.domains:
            out.update(d.values)
        return out

    def is_zero_one(self) -> bool:
        return all(d.mask & ~0b11 == 0 for d in self.grid.domains)

    def satisfied_by(self, m: Matrix, constraints: Iterable[Constraint] | None = None) -> bool:
        """True iff ``m`` (plus some aux completion) satisfies every grid-only
        constraint; constraints touching aux variables are skipped."""
        if m.shape != (self.n_rows, self.n_cols):
            raise ValueError("shape mismatch")
        ng = self.n_grid_vars
        for c in self.constraints if constraints is None else constraints:
            if any(v >= ng for v in c.scope):
                continue
            if not c.check([m.cells[v] for v in c.scope]):
                return False
        return True
