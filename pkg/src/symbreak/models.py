"""Benchmark matrix models with interchangeable rows and columns."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations, product

from .core import DomainSet, Model, VarGrid
from .propagators import Cardinality, Cover, Hamming, ScalarProduct, SumRange


@dataclass(frozen=True)
class UnconstrainedParams:
    r: int
    c: int
    d: int


@dataclass(frozen=True)
class EfpaParams:
    q: int
    lam: int
    d: int
    v: int


@dataclass(frozen=True)
class BibdParams:
    v: int
    k: int
    lam: int

    @property
    def b(self) -> int:
        num, den = self.lam * self.v * (self.v - 1), self.k * (self.k - 1)
        if den == 0 or num % den:
            raise ValueError(f"b = {num}/{den} is not integral for {self}")
        return num // den

    @property
    def r(self) -> int:
        num, den = self.lam * (self.v - 1), self.k - 1
        if den == 0 or num % den:
            raise ValueError(f"r = {num}/{den} is not integral for {self}")
        return num // den


@dataclass(frozen=True)
class CaParams:
    t: int
    k: int
    g: int
    b: int


def build_unconstrained(p: UnconstrainedParams) -> Model:
    if min(p.r, p.c, p.d) < 1:
        raise ValueError(f"all parameters must be positive: {p}")
    grid = VarGrid.uniform(p.r, p.c, DomainSet.range(0, p.d - 1))
    return Model(grid, name="unconstrained", params=asdict(p))


def build_efpa(p: EfpaParams) -> Model:
    """``v`` code words of length ``q * lam`` over symbols ``0..q-1``; each
    word holds ``lam`` copies of every symbol and every pair of words is at
    Hamming distance ``d``."""
    if min(p.q, p.lam, p.v) < 1:
        raise ValueError(f"q, lam and v must be positive: {p}")
    width = p.q * p.lam
    grid = VarGrid.uniform(p.v, width, DomainSet.range(0, p.q - 1))
    model = Model(grid, name="efpa", params=asdict(p), tags=frozenset({"surjective"}))
    rows = [model.row_vars(i) for i in range(p.v)]
    counts = {s: p.lam for s in range(p.q)}
    model.add(*(Cardinality(r, counts) for r in rows))
    model.add(*(Hamming(a, b, p.d) for a, b in combinations(rows, 2)))
    return model


def build_bibd(p: BibdParams) -> Model:
    """``v x b`` incidence matrix: row sums ``r``, column sums ``k`` and
    scalar product ``lam`` between any two rows."""
    b, r = p.b, p.r
    grid = VarGrid.uniform(p.v, b, DomainSet([0, 1]))
    model = Model(grid, name="bibd", params=dict(asdict(p), b=b, r=r))
    rows = [model.row_vars(i) for i in range(p.v)]
    model.add(*(SumRange(row, r, r) for row in rows))
    model.add(*(SumRange(model.col_vars(j), p.k, p.k) for j in range(b)))
    model.add(*(ScalarProduct(x, y, p.lam) for x, y in combinations(rows, 2)))
    return model


def build_ca(p: CaParams) -> Model:
    """``b`` vectors of length ``k`` over ``0..g-1`` such that every ``t``
    columns exhibit every one of the ``g**t`` tuples in some row."""
    if not 1 <= p.t <= p.k:
        raise ValueError(f"need 1 <= t <= k: {p}")
    grid = VarGrid.uniform(p.b, p.k, DomainSet.range(0, p.g - 1))
    model = Model(grid, name="ca", params=asdict(p))
    for cols in combinations(range(p.k), p.t):
        rows = [[model.var(i, j) for j in cols] for i in range(p.b)]
        for pattern in product(range(p.g), repeat=p.t):
            model.add(Cover(rows, pattern))
    return model


PROBLEMS = {
    "unconstrained": (UnconstrainedParams, build_unconstrained),
    "efpa": (EfpaParams, build_efpa),
    "bibd": (BibdParams, build_bibd),
    "ca": (CaParams, build_ca),
}


def parse_problem(text: str):
    """Parse ``name:key=value,...`` into ``(name, params)``."""
    name, _, rest = text.partition(":")
    name = name.strip().lower()
    if name not in PROBLEMS:
        raise ValueError(f"unknown problem {name!r}; choose from {', '.join(PROBLEMS)}")
    cls, _ = PROBLEMS[name]
    kwargs = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"expected key=value, got {item!r}")
        kwargs[key.strip()] = int(value)
    try:
        return name, cls(**kwargs)
    except TypeError as e:
        raise ValueError(f"bad parameters for {name}: {e}") from None


def build(name: str, params) -> Model:
    return PROBLEMS[name][1](params)


def format_params(params) -> str:
    return ",".join(f"{k}={v}" for k, v in asdict(params).items())
