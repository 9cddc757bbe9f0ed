"""Lexicographic comparisons of integer vectors and matrix linearizations."""
from __future__ import annotations

from typing import Sequence

from .core import Matrix


def _same_length(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise ValueError(f"cannot compare vectors of lengths {len(u)} and {len(v)}")


def lex_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    _same_length(u, v)
    for a, b in zip(u, v):
        if a != b:
            return a < b
    return True


def lex_lt(u: Sequence[int], v: Sequence[int]) -> bool:
    _same_length(u, v)
    for a, b in zip(u, v):
        if a != b:
            return a < b
    return False


def reversed_lex_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """``reverse(u) <=lex reverse(v)`` without building the reversed copies."""
    _same_length(u, v)
    for k in range(len(u) - 1, -1, -1):
        if u[k] != v[k]:
            return u[k] < v[k]
    return True


def entwined_lex_leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """``<u0, v1, u2, v3, ...> <=lex <v0, u1, v2, u3, ...>``.

    This is the order a snake-wise (column-major, alternating direction)
    linearization induces on two neighbouring rows ``u`` and ``v``.
    """
    _same_length(u, v)
    for k in range(len(u)):
        a, b = u[k], v[k]
        if a != b:
            # even positions compare u against v, odd positions v against u
            return a < b if k % 2 == 0 else b < a
    return True


def entwine(u: Sequence[int], v: Sequence[int]) -> tuple[list[int], list[int]]:
    """The two interleavings compared by :func:`entwined_lex_leq`."""
    _same_length(u, v)
    left = [u[k] if k % 2 == 0 else v[k] for k in range(len(u))]
    right = [v[k] if k % 2 == 0 else u[k] for k in range(len(u))]
    return left, right


def linearize_row_wise(m: Matrix) -> tuple[int, ...]:
    return m.cells
