"""Subgroup lattices of small finite groups, exact sigma_g, minimum proper
index, and the self-contained group catalog used by the test corpus."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import setcover
from .core import (
    FiniteSemigroup,
    structure_flags,
    transformation_closure,
    validate_table,
)
from .covers import INFINITE, Cover, CoveringResult, Kind, Value, verify_cover
from .errors import NotAGroupError, OrderCapExceededError

DEFAULT_CAP = 128


@dataclass(frozen=True)
class SubgroupLattice:
    subgroups: tuple[frozenset[int], ...]       # sorted by (size, elements)
    maximal_proper: tuple[int, ...]             # indices into subgroups


def _require_group(group: FiniteSemigroup, cap: int) -> None:
    if group.n > cap:
        raise OrderCapExceededError(group.n, cap)
    t = group.table
    full = set(group.elements)
    identity = next(
        (e for e in group.elements if all(t[e][x] == x == t[x][e] for x in group.elements)),
        None,
    )
    if identity is None or not all(
        set(t[a]) == full and {t[b][a] for b in group.elements} == full
        for a in group.elements
    ):
        raise NotAGroupError("carrier is not a group")


def _generated(table: Sequence[Sequence[int]], gens: Sequence[int]) -> frozenset[int]:
    # all nonempty products of the generators; a subgroup by torsion
    got = set(gens)
    frontier = list(got)
    while frontier:
        y = frontier.pop()
        for x in gens:
            z = table[y][x]
            if z not in got:
                got.add(z)
                frontier.append(z)
    return frozenset(got)


def subgroup_lattice(group: FiniteSemigroup, cap: int = DEFAULT_CAP) -> SubgroupLattice:
    """All subgroups, by extending known generating sets one element at a time
    until fixpoint (subsemigroups of a finite group are subgroups)."""
    _require_group(group, cap)
    t = group.table
    found: dict[frozenset[int], tuple[int, ...]] = {}
    for x in group.elements:
        h = _generated(t, (x,))
        found.setdefault(h, (x,))
    frontier = list(found.items())
    while frontier:
        h, gens = frontier.pop()
        for x in group.elements:
            if x in h:
                continue
            extended = _generated(t, gens + (x,))
            if extended not in found:
                found[extended] = gens + (x,)
                frontier.append((extended, gens + (x,)))
    subgroups = tuple(sorted(found, key=lambda s: (len(s), sorted(s))))
    proper = [i for i, h in enumerate(subgroups) if len(h) < group.n]
    maximal = tuple(
        i for i in proper
        if not any(subgroups[i] < subgroups[j] for j in proper if j != i)
    )
    return SubgroupLattice(subgroups, maximal)


def sigma_g(group: FiniteSemigroup, cap: int = DEFAULT_CAP) -> CoveringResult:
    """Minimum cover by proper subgroups; infinite exactly for cyclic groups."""
    _require_group(group, cap)
    t = group.table
    full = group.carrier()
    for x in group.elements:
        if _generated(t, (x,)) == full:
            return CoveringResult(INFINITE, "cyclic", None, x, "classifier")
    lattice = subgroup_lattice(group, cap)
    parts = [lattice.subgroups[i] for i in lattice.maximal_proper]
    masks = [sum(1 << x for x in p) for p in parts]
    chosen = setcover.minimum_cover((1 << group.n) - 1, masks)
    assert chosen is not None, "maximal subgroups cover any non-cyclic group"
    cover = Cover(Kind.SUBGROUP, tuple(parts[i] for i in chosen))
    assert verify_cover(group, structure_flags(group), cover).ok
    return CoveringResult(len(chosen), "subgroup_cover", cover, None, "classifier")


def min_proper_index(group: FiniteSemigroup, cap: int = DEFAULT_CAP) -> Value:
    """Minimum of |G|/|H| over proper subgroups H; infinite for the trivial group."""
    lattice = subgroup_lattice(group, cap)
    proper = [h for h in lattice.subgroups if len(h) < group.n]
    if not proper:
        return INFINITE
    return min(group.n // len(h) for h in proper)


# --- group catalog ---------------------------------------------------------
# Self-contained Cayley tables: cyclic and Klein tables are direct formulas,
# the rest close permutation generators.


def cyclic_group(n: int) -> FiniteSemigroup:
    """C_n with identity at index 0."""
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = tuple("e" if i == 0 else f"g^{i}" for i in range(n))
    return FiniteSemigroup(n, tuple(tuple(r) for r in rows), labels)


def klein_four() -> FiniteSemigroup:
    rows = [[i ^ j for j in range(4)] for i in range(4)]
    return FiniteSemigroup(4, tuple(tuple(r) for r in rows), ("e", "a", "b", "ab"))


def _perm_group(m: int, gens: list[list[int]]) -> FiniteSemigroup:
    sg, _ = transformation_closure(m, gens)
    return sg


def symmetric_group(m: int) -> FiniteSemigroup:
    if m == 1:
        return cyclic_group(1)
    if m == 2:
        return cyclic_group(2)
    cycle = [(i + 1) % m for i in range(m)]
    swap = list(range(m))
    swap[0], swap[1] = 1, 0
    return _perm_group(m, [cycle, swap])


def alternating_group(m: int) -> FiniteSemigroup:
    if m <= 2:
        return cyclic_group(1)
    if m == 3:
        return cyclic_group(3)
    three_cycle = list(range(m))
    three_cycle[0], three_cycle[1], three_cycle[2] = 1, 2, 0
    if m % 2 == 1:
        rest = [(i + 1) % m for i in range(m)]
    else:
        rest = [0] + [1 + i % (m - 1) for i in range(1, m)]
    return _perm_group(m, [three_cycle, rest])


def dihedral_group(m: int) -> FiniteSemigroup:
    """Symmetries of the regular m-gon, order 2m."""
    rotation = [(i + 1) % m for i in range(m)]
    reflection = [(m - i) % m for i in range(m)]
    return _perm_group(m, [rotation, reflection])


_Q8_UNIT = {  # (u1, u2) -> (u3, sign) for units 0=1, 1=i, 2=j, 3=k
    (0, 0): (0, 0), (0, 1): (1, 0), (0, 2): (2, 0), (0, 3): (3, 0),
    (1, 0): (1, 0), (1, 1): (0, 1), (1, 2): (3, 0), (1, 3): (2, 1),
    (2, 0): (2, 0), (2, 1): (3, 1), (2, 2): (0, 1), (2, 3): (1, 0),
    (3, 0): (3, 0), (3, 1): (2, 0), (3, 2): (1, 1), (3, 3): (0, 1),
}


def quaternion_group() -> FiniteSemigroup:
    """Q_8 with elements 2u+s encoding (-1)^s * unit u."""
    def mul(a: int, b: int) -> int:
        u1, s1 = divmod(a, 2)
        u2, s2 = divmod(b, 2)
        u3, s3 = _Q8_UNIT[(u1, u2)]
        return 2 * u3 + (s1 ^ s2 ^ s3)

    rows = [[mul(a, b) for b in range(8)] for a in range(8)]
    labels = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    return validate_table(rows, labels)


def catalog() -> dict[str, FiniteSemigroup]:
    """Named small groups: C_2..C_12, Klein four, S_3, D_4, Q_8, A_4, D_5, S_4, A_5."""
    groups: dict[str, FiniteSemigroup] = {}
    for n in range(2, 13):
        groups[f"c{n}"] = cyclic_group(n)
    groups["klein4"] = klein_four()
    groups["s3"] = symmetric_group(3)
    groups["d4"] = dihedral_group(4)
    groups["q8"] = quaternion_group()
    groups["a4"] = alternating_group(4)
    groups["d5"] = dihedral_group(5)
    groups["s4"] = symmetric_group(4)
    groups["a5"] = alternating_group(5)
    return groups
