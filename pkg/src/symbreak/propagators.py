"""Constraint classes with domain filters over the engine's bitmask store.

Every ``prune`` narrows ``store`` in place and raises :class:`Failure` on a
wipe-out. Each filter is sound; those marked ``DOMAIN_CONSISTENT`` leave
only supported values when their variables are pairwise distinct.
"""
from __future__ import annotations

from typing import Mapping, Sequence

from .core import Constraint, Failure, Store, Strength, is_singleton, mask_min


def _set(store: Store, v: int, new: int) -> None:
    if not new:
        raise Failure
    store[v] = new


class LexLeq(Constraint):
    """``x <=lex y`` for two equal-length variable vectors.

    One backward pass computes, for every suffix, whether it can still be
    ordered given an equal prefix; one forward pass then keeps for each
    position the values that either make ``x`` strictly smaller there or
    equal with a satisfiable suffix. The pass stops at the first position
    where ``x`` can become strictly smaller, after which nothing is forced.
    """

    strength = Strength.DOMAIN_CONSISTENT

    def __init__(self, x: Sequence[int], y: Sequence[int]):
        if len(x) != len(y):
            raise ValueError("lex vectors must have equal length")
        super().__init__(list(x) + list(y))
        self.x = tuple(x)
        self.y = tuple(y)

    def check(self, values):
        n = len(self.x)
        for a, b in zip(values[:n], values[n:]):
            if a != b:
                return a < b
        return True

    def prune(self, store):
        x, y = self.x, self.y
        n = len(x)
        # skip the prefix already fixed to equal values
        start = 0
        while start < n:
            dx = store[x[start]]
            if dx & (dx - 1) or dx != store[y[start]]:
                break
            start += 1
        if start == n:
            return
        ok_suffix = [False] * (n + 1)
        ok_suffix[n] = True
        for k in range(n - 1, start - 1, -1):
            dx, dy = store[x[k]], store[y[k]]
            ok_suffix[k] = ((dx & -dx).bit_length() < dy.bit_length()) or (
                bool(dx & dy) and ok_suffix[k + 1])
        if not ok_suffix[start]:
            raise Failure
        for k in range(start, n):
            dx, dy = store[x[k]], store[y[k]]
            lo_x = (dx & -dx).bit_length() - 1
            hi_y = dy.bit_length() - 1
            if ok_suffix[k + 1]:
                nx = dx & (((1 << hi_y) - 1) | dy)
                ny = dy & (~((2 << lo_x) - 1) | dx)
            else:
                nx = dx & ((1 << hi_y) - 1)
                ny = dy & ~((2 << lo_x) - 1)
            if nx != dx:
                _set(store, x[k], nx)
            if ny != dy:
                # x and y may share variables (e.g. a vector against its reverse)
                _set(store, y[k], store[y[k]] & ny)
            if lo_x < hi_y:
                break


class Less(Constraint):
    """``x < y``; bounds reasoning is domain consistent for this relation."""

    strength = Strength.DOMAIN_CONSISTENT

    def __init__(self, x: int, y: int):
        super().__init__((x, y))

    def check(self, values):
        return values[0] < values[1]

    def prune(self, store):
        x, y = self.scope
        dx, dy = store[x], store[y]
        hi_y = dy.bit_length() - 1
        lo_x = (dx & -dx).bit_length() - 1
        nx = dx & ((1 << hi_y) - 1)
        ny = dy & ~((1 << (lo_x + 1)) - 1)
        if nx != dx:
            _set(store, x, nx)
        if ny != dy:
            _set(store, y, ny)


class AllDifferent(Constraint):
    """Pairwise different values.

    Removes fixed values from the other domains and prunes with Hall
    intervals: when ``k`` variables lie inside an interval of ``k`` values,
    no other variable may take a value from it.
    """

    strength = Strength.FORWARD_CHECKING

    def check(self, values):
        return len(set(values)) == len(values)

    def prune(self, store):
        while True:
            changed = self._forward(store) | self._hall(store)
            if not changed:
                return

    def _forward(self, store) -> bool:
        done = 0
        changed = False
        while True:
            fixed = 0
            for v in self.scope:
                d = store[v]
                if not d & (d - 1):
                    if fixed & d:
                        raise Failure
                    fixed |= d
            if fixed == done:
                return changed
            for v in self.scope:
                d = store[v]
                if d & (d - 1) and d & fixed:
                    _set(store, v, d & ~fixed)
                    changed = True
            done = fixed

    def _hall(self, store) -> bool:
        doms = [store[v] for v in self.scope]
        union = 0
        for d in doms:
            union |= d
        if union.bit_count() < len(doms):
            raise Failure
        los = sorted({(d & -d).bit_length() - 1 for d in doms})
        his = sorted({d.bit_length() - 1 for d in doms})
        changed = False
        for a in los:
            for b in his:
                if b < a:
                    continue
                interval = ((2 << b) - 1) & ~((1 << a) - 1)
                inside = sum(1 for d in doms if not d & ~interval)
                size = (union & interval).bit_count()
                if inside > size:
                    raise Failure
                if inside == size:
                    for k, v in enumerate(self.scope):
                        d = store[v]
                        if d & ~interval and d & interval:
                            _set(store, v, d & ~interval)
                            doms[k] = store[v]
                            changed = True
        return changed


class SumRange(Constraint):
    """``lo <= sum(vars) <= hi`` with bounds reasoning (DC on 0/1 variables)."""

    strength = Strength.FORWARD_CHECKING

    def __init__(self, scope: Sequence[int], lo: int, hi: int):
        super().__init__(scope)
        self.lo, self.hi = lo, hi

    def check(self, values):
        return self.lo <= sum(values) <= self.hi

    def prune(self, store):
        scope, lo, hi = self.scope, self.lo, self.hi
        while True:
            smin = smax = 0
            for v in scope:
                d = store[v]
                smin += (d & -d).bit_length() - 1
                smax += d.bit_length() - 1
            if smin > hi or smax < lo:
                raise Failure
            if smin >= lo and smax <= hi:
                return
            changed = False
            for v in scope:
                d = store[v]
                if not d & (d - 1):
                    continue
                dmin, dmax = (d & -d).bit_length() - 1, d.bit_length() - 1
                cap = hi - (smin - dmin)
                floor = lo - (smax - dmax)
                nd = d
                if cap < dmax:
                    nd &= (1 << (cap + 1)) - 1 if cap >= 0 else 0
                if floor > dmin:
                    nd &= ~((1 << floor) - 1)
                if nd != d:
                    _set(store, v, nd)
                    changed = True
            if not changed:
                return


class Cardinality(Constraint):
    """Each value ``v`` in ``counts`` occurs exactly ``counts[v]`` times."""

    strength = Strength.FORWARD_CHECKING

    def __init__(self, scope: Sequence[int], counts: Mapping[int, int]):
        super().__init__(scope)
        self.counts = dict(counts)

    def check(self, values):
        return all(sum(1 for x in values if x == v) == c for v, c in self.counts.items())

    def prune(self, store):
        scope = self.scope
        changed = True
        while changed:
            changed = False
            for v, c in self.counts.items():
                bit = 1 << v
                sure = possible = 0
                for x in scope:
                    d = store[x]
                    if d & bit:
                        possible += 1
                        if d == bit:
                            sure += 1
                if sure > c or possible < c:
                    raise Failure
                if sure == possible:
                    continue
                if sure == c:
                    for x in scope:
                        d = store[x]
                        if d & bit and d != bit:
                            _set(store, x, d & ~bit)
                    changed = True
                elif possible == c:
                    for x in scope:
                        if store[x] & bit:
                            store[x] = bit
                    changed = True


class Hamming(Constraint):
    """Vectors ``x`` and ``y`` differ in exactly ``distance`` positions."""

    strength = Strength.FORWARD_CHECKING

    def __init__(self, x: Sequence[int], y: Sequence[int], distance: int):
        super().__init__(list(x) + list(y))
        self.x, self.y = tuple(x), tuple(y)
        self.distance = distance

    def check(self, values):
        n = len(self.x)
        return sum(1 for a, b in zip(values[:n], values[n:]) if a != b) == self.distance

    def prune(self, store):
        x, y, want = self.x, self.y, self.distance
        while True:
            differ = 0
            open_ = []
            for a, b in zip(x, y):
                da, db = store[a], store[b]
                if not da & db:
                    differ += 1
                elif da & (da - 1) or db & (db - 1):
                    open_.append((a, b))
            if differ > want or differ + len(open_) < want:
                raise Failure
            if not open_:
                return
            changed = False
            if differ == want:
                # every open position must be equal
                for a, b in open_:
                    common = store[a] & store[b]
                    store[a] = store[b] = common
                return
            if differ + len(open_) == want:
                # every open position must differ
                for a, b in open_:
                    da, db = store[a], store[b]
                    if not da & (da - 1):
                        _set(store, b, db & ~da)
                        changed = True
                    elif not db & (db - 1):
                        _set(store, a, da & ~db)
                        changed = True
            if not changed:
                return


class ScalarProduct(Constraint):
    """``sum(x_k * y_k) == value`` over 0/1 vectors."""

    strength = Strength.FORWARD_CHECKING

    def __init__(self, x: Sequence[int], y: Sequence[int], value: int):
        super().__init__(list(x) + list(y))
        self.x, self.y = tuple(x), tuple(y)
        self.value = value

    def check(self, values):
        n = len(self.x)
        return sum(a * b for a, b in zip(values[:n], values[n:])) == self.value

    def prune(self, store):
        sure = 0
        open_ = []
        for a, b in zip(self.x, self.y):
            da, db = store[a], store[b]
            if da & 2 and db & 2:
                if da == 2 and db == 2:
                    sure += 1
                else:
                    open_.append((a, b))
        if sure > self.value or sure + len(open_) < self.value:
            raise Failure
        if not open_:
            return
        if sure + len(open_) == self.value:
            for a, b in open_:
                store[a] = store[b] = 2
        elif sure == self.value:
            for a, b in open_:
                if store[a] == 2:
                    _set(store, b, store[b] & ~2)
                elif store[b] == 2:
                    _set(store, a, store[a] & ~2)


class Cover(Constraint):
    """At least one of ``rows`` (each a tuple of variables) equals ``pattern``."""

    strength = Strength.DOMAIN_CONSISTENT

    def __init__(self, rows: Sequence[Sequence[int]], pattern: Sequence[int]):
        self.rows = [tuple(r) for r in rows]
        self.pattern = tuple(pattern)
        self.bits = tuple(1 << v for v in self.pattern)
        super().__init__([v for r in self.rows for v in r])

    def check(self, values):
        t = len(self.pattern)
        return any(tuple(values[i:i + t]) == self.pattern for i in range(0, len(values), t))

    def prune(self, store):
        bits = self.bits
        found = None
        for r in self.rows:
            if all(store[v] & b for v, b in zip(r, bits)):
                if found is not None:
                    return
                found = r
        if found is None:
            raise Failure
        for v, b in zip(found, bits):
            store[v] = b


class Precedence(Constraint):
    """Along ``scope``, value ``s`` occurs before the first ``t`` (if any ``t``)."""

    strength = Strength.FORWARD_CHECKING

    def __init__(self, scope: Sequence[int], s: int, t: int):
        super().__init__(scope)
        self.s, self.t = s, t

    def check(self, values):
        for x in values:
            if x == self.s:
                return True
            if x == self.t:
                return False
        return True

    def prune(self, store):
        sbit, tbit = 1 << self.s, 1 << self.t
        for v in self.scope:
            d = store[v]
            if d & tbit:
                _set(store, v, d & ~tbit)
                d &= ~tbit
            if d & sbit:
                return


class PugetChannel(Constraint):
    """``z`` is the 1-based position of the first ``value`` along ``xs``.

    Encodes ``X_i = value => Z <= i`` and ``Z = i => X_i = value``.
    """

    strength = Strength.FORWARD_CHECKING

    def __init__(self, xs: Sequence[int], z: int, value: int):
        super().__init__(list(xs) + [z])
        self.xs = tuple(xs)
        self.z = z
        self.value = value

    def check(self, values):
        xs, z = values[:-1], values[-1]
        for i, x in enumerate(xs, start=1):
            if x == self.value:
                return z == i
        return False

    def prune(self, store):
        bit = 1 << self.value
        xs, z = self.xs, self.z
        while True:
            dz = store[z]
            nz = dz
            for i, v in enumerate(xs, start=1):
                d = store[v]
                if not d & bit:
                    nz &= ~(1 << i)
                elif d == bit:
                    nz &= (1 << (i + 1)) - 1
                    break
            if nz != dz:
                _set(store, z, nz)
            first = mask_min(nz)
            for i in range(1, first):
                d = store[xs[i - 1]]
                if d & bit:
                    _set(store, xs[i - 1], d & ~bit)
            if is_singleton(nz) and store[xs[first - 1]] != bit:
                _set(store, xs[first - 1], store[xs[first - 1]] & bit)
                continue
            return

