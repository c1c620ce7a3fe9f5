"""Finite semigroups as Cayley tables, closures, and structure predicates.

Elements are dense integer ids 0..n-1; labels are display-only metadata.
Every value here is immutable, so instances can be shared freely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import (
    BadImageError,
    EmptyGeneratorsError,
    NotAssociativeError,
    OutOfRangeError,
    TooLargeError,
)

Table = tuple[tuple[int, ...], ...]

UNDEFINED = -1  # sentinel for undefined points of partial maps


@dataclass(frozen=True)
class FiniteSemigroup:
    """An associative Cayley table over elements 0..n-1."""

    n: int
    table: Table
    labels: Optional[tuple[str, ...]] = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def elements(self) -> range:
        return range(self.n)

    def carrier(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    def __repr__(self) -> str:  # keep pytest diffs readable
        return f"FiniteSemigroup(n={self.n})"


@dataclass(frozen=True)
class StructureFlags:
    identity: Optional[int]
    is_group: bool
    is_inverse: bool
    inverse_map: Optional[tuple[int, ...]]
    idempotents: frozenset[int]


def _as_table(rows: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(x) for x in row) for row in rows)


def validate_table(raw: Sequence[Sequence[int]],
                   labels: Optional[Sequence[str]] = None) -> FiniteSemigroup:
    """Build a carrier from a raw grid, rejecting out-of-range entries and
    non-associative operations (first violating triple in lex order)."""
    n = len(raw)
    if n < 1:
        raise OutOfRangeError(0, 0, 0, 0)
    if any(len(row) != n for row in raw):
        raise OutOfRangeError(next(i for i, r in enumerate(raw) if len(r) != n), 0, 0, n)
    for i, row in enumerate(raw):
        for j, v in enumerate(row):
            if not (0 <= int(v) < n):
                raise OutOfRangeError(i, j, int(v), n)
    t = np.array(raw, dtype=np.int64)
    left = t[t]            # left[a,b,c] = t[t[a,b],c]
    right = t[:, t]        # right[a,b,c] = t[a,t[b,c]]
    if not np.array_equal(left, right):
        a, b, c = np.argwhere(left != right)[0]
        raise NotAssociativeError(int(a), int(b), int(c))
    return FiniteSemigroup(n, _as_table(raw), tuple(labels) if labels else None)


def closure(sg: FiniteSemigroup, xs: Iterable[int]) -> frozenset[int]:
    """Smallest subset containing xs and closed under the table; empty for empty xs."""
    t = sg.table
    got = set(xs)
    todo = list(got)
    while todo:
        a = todo.pop()
        for b in list(got):
            for c in (t[a][b], t[b][a]):
                if c not in got:
                    got.add(c)
                    todo.append(c)
    return frozenset(got)


def closure_with_inverses(sg: FiniteSemigroup, inverse_map: Sequence[int],
                          xs: Iterable[int]) -> frozenset[int]:
    """Closure under the table and the unary inverse map."""
    t = sg.table
    got = set(xs)
    todo = list(got)
    while todo:
        a = todo.pop()
        inv = inverse_map[a]
        if inv not in got:
            got.add(inv)
            todo.append(inv)
        for b in list(got):
            for c in (t[a][b], t[b][a]):
                if c not in got:
                    got.add(c)
                    todo.append(c)
    return frozenset(got)


def is_monogenic(sg: FiniteSemigroup) -> Optional[int]:
    """Least element generating the whole carrier, or None."""
    full = sg.carrier()
    for x in sg.elements:
        if closure(sg, (x,)) == full:
            return x
    return None


def find_identity(sg: FiniteSemigroup) -> Optional[int]:
    t = sg.table
    rng = sg.elements
    for e in rng:
        if all(t[e][x] == x == t[x][e] for x in rng):
            return e
    return None


def structure_flags(sg: FiniteSemigroup) -> StructureFlags:
    """Identity, group/inverse predicates, idempotents, and the inverse map.

    is_group uses the identity + Latin-square test; is_inverse uses the
    one-idempotent-per-R-class-and-L-class criterion.
    """
    from . import greens  # deferred: greens depends on this module's types

    t = sg.table
    rng = sg.elements
    n = sg.n
    identity = find_identity(sg)
    idempotents = frozenset(x for x in rng if t[x][x] == x)
    full = set(rng)
    is_group = identity is not None and all(
        set(t[a]) == full and {t[b][a] for b in rng} == full for a in rng
    )

    gd = greens.greens_classes(sg)
    is_inverse = all(len(cls & idempotents) == 1 for cls in gd.r_classes) and all(
        len(cls & idempotents) == 1 for cls in gd.l_classes
    )

    inverse_map = None
    if is_inverse:
        inv = []
        for a in rng:
            matches = [x for x in rng if t[t[a][x]][a] == a and t[t[x][a]][x] == x]
            assert len(matches) == 1, "inverse criterion held but inverse not unique"
            inv.append(matches[0])
        assert all(inv[inv[a]] == a for a in rng)
        inverse_map = tuple(inv)

    return StructureFlags(identity, is_group, is_inverse, inverse_map, idempotents)


def adjoin_identity(sg: FiniteSemigroup) -> FiniteSemigroup:
    """Return sg unchanged if it has an identity, else append a fresh one."""
    if find_identity(sg) is not None:
        return sg
    return adjoin_fresh_identity(sg)


def adjoin_fresh_identity(sg: FiniteSemigroup) -> FiniteSemigroup:
    """Append a fresh two-sided identity even if one already exists."""
    n = sg.n
    rows = [list(row) + [i] for i, row in enumerate(sg.table)]
    rows.append(list(range(n + 1)))
    labels = None
    if sg.labels:
        labels = sg.labels + ("1",)
    return FiniteSemigroup(n + 1, _as_table(rows), labels)


def restrict(sg: FiniteSemigroup, elements: Iterable[int]) -> tuple[FiniteSemigroup, tuple[int, ...]]:
    """Sub-table on a closed subset; returns the new carrier and new->old index map."""
    new_to_old = tuple(sorted(set(elements)))
    old_to_new = {x: i for i, x in enumerate(new_to_old)}
    t = sg.table
    rows = []
    for a in new_to_old:
        row = []
        for b in new_to_old:
            c = t[a][b]
            if c not in old_to_new:
                raise ValueError(f"subset not closed: {a}*{b}={c} escapes")
            row.append(old_to_new[c])
        rows.append(row)
    labels = tuple(sg.label(x) for x in new_to_old) if sg.labels else None
    return FiniteSemigroup(len(new_to_old), _as_table(rows), labels), new_to_old


def build_cyclic(index: int, period: int) -> FiniteSemigroup:
    """Monogenic semigroup of order index+period-1 with x^(index+period) = x^index."""
    if index < 1 or period < 1:
        raise ValueError("index and period must be >= 1")
    n = index + period - 1

    def reduce_power(e: int) -> int:  # powers are 1-based
        return e if e <= n else index + (e - index) % period

    rows = [[reduce_power(a + b + 2) - 1 for b in range(n)] for a in range(n)]
    labels = tuple("x" if k == 0 else f"x^{k + 1}" for k in range(n))
    return FiniteSemigroup(n, _as_table(rows), labels)


def build_null(n: int) -> FiniteSemigroup:
    """Null semigroup: element 0 is the zero and every product equals 0."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = [[0] * n for _ in range(n)]
    return FiniteSemigroup(n, _as_table(rows))


def _compose(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    # right action: point x goes through f, then g; UNDEFINED is a sink
    return tuple(UNDEFINED if f[x] == UNDEFINED else g[f[x]] for x in range(len(f)))


def _map_label(f: tuple[int, ...]) -> str:
    return "[" + " ".join("-" if v == UNDEFINED else str(v) for v in f) + "]"


def transformation_closure(
    m: int, gens: Sequence[Sequence[Optional[int]]]
) -> tuple[FiniteSemigroup, dict[int, tuple[int, ...]]]:
    """Semigroup generated by (partial) maps on m points under composition.

    Entries of a generator are images of 0..m-1; None (or -1) marks an
    undefined point. Returns the carrier and an element->map dictionary.
    """
    if not gens:
        raise EmptyGeneratorsError("at least one generator is required")
    normalized: list[tuple[int, ...]] = []
    for gi, g in enumerate(gens):
        if len(g) != m:
            raise BadImageError(gi, len(g), -2, m)
        row = []
        for p, v in enumerate(g):
            if v is None or v == UNDEFINED:
                row.append(UNDEFINED)
            elif 0 <= int(v) < m:
                row.append(int(v))
            else:
                raise BadImageError(gi, p, int(v), m)
        normalized.append(tuple(row))

    index: dict[tuple[int, ...], int] = {}
    order: list[tuple[int, ...]] = []
    for g in normalized:
        if g not in index:
            index[g] = len(order)
            order.append(g)
    frontier = list(order)
    while frontier:
        f = frontier.pop(0)
        for g in list(order):
            for h in (_compose(f, g), _compose(g, f)):
                if h not in index:
                    index[h] = len(order)
                    order.append(h)
                    frontier.append(h)

    n = len(order)
    rows = [[index[_compose(order[a], order[b])] for b in range(n)] for a in range(n)]
    labels = tuple(_map_label(f) for f in order)
    sg = FiniteSemigroup(n, _as_table(rows), labels)
    return sg, {i: f for i, f in enumerate(order)}


def build_symmetric_inverse_monoid(m: int) -> FiniteSemigroup:
    """All partial injective maps on m points; order grows as sum C(m,k)^2 k!."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > 4:
        raise TooLargeError(f"symmetric inverse monoid on {m} points is too large")
    maps = [
        f
        for f in itertools.product(range(UNDEFINED, m), repeat=m)
        if _is_partial_injection(f)
    ]
    index = {f: i for i, f in enumerate(maps)}
    n = len(maps)
    rows = [[index[_compose(maps[a], maps[b])] for b in range(n)] for a in range(n)]
    labels = tuple(_map_label(f) for f in maps)
    return FiniteSemigroup(n, _as_table(rows), labels)


def _is_partial_injection(f: Sequence[int]) -> bool:
    seen = set()
    for v in f:
        if v == UNDEFINED:
            continue
        if v in seen:
            return False
        seen.add(v)
    return True
