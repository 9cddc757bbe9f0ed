from itertools import product

import pytest

from symbreak.core import Matrix

EFPA_A = Matrix.from_rows([[0, 2, 1, 2, 0, 1], [0, 2, 2, 1, 1, 0],
                           [0, 1, 0, 2, 1, 2], [0, 0, 1, 1, 2, 2]])
EFPA_B = Matrix.from_rows([[0, 0, 1, 1, 2, 2], [0, 1, 0, 2, 1, 2],
                           [0, 2, 1, 2, 0, 1], [0, 2, 2, 1, 1, 0]])
EFPA_C = Matrix.from_rows([[0, 0, 1, 1, 2, 2], [0, 1, 0, 2, 1, 2],
                           [0, 1, 2, 0, 2, 1], [0, 2, 2, 1, 1, 0]])
EFPA_D = Matrix.from_rows([[0, 1, 2, 1, 0, 2], [0, 1, 1, 2, 2, 0],
                           [0, 2, 0, 1, 2, 1], [0, 0, 2, 2, 1, 1]])


def all_matrices(n, m, values):
    for cells in product(values, repeat=n * m):
        yield Matrix(n, m, cells)


def supported(constraint, domains):
    """Brute force: per scope position, the values occurring in some
    satisfying assignment (shared variables take one value)."""
    scope = constraint.scope
    var_dom = {}
    for v, d in zip(scope, domains):
        var_dom[v] = var_dom.get(v, set(d.values)) & set(d.values)
    vars_ = sorted(var_dom)
    out = [set() for _ in scope]
    for combo in product(*(sorted(var_dom[v]) for v in vars_)):
        assign = dict(zip(vars_, combo))
        values = [assign[v] for v in scope]
        if constraint.check(values):
            for k, x in enumerate(values):
                out[k].add(x)
    return out


@pytest.fixture
def efpa_a():
    return EFPA_A
