"""Green's J/R/L relations, the J-class order, principal factors, and cover lifting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .core import FiniteSemigroup, closure
from .errors import (
    EmptyComplementError,
    NotMaximalError,
    PartNotProperAfterLiftError,
)


@dataclass(frozen=True)
class GreensData:
    j_class_of: tuple[int, ...]
    r_class_of: tuple[int, ...]
    l_class_of: tuple[int, ...]
    j_classes: tuple[frozenset[int], ...]
    r_classes: tuple[frozenset[int], ...]
    l_classes: tuple[frozenset[int], ...]
    # (a, b) present iff J_a <= J_b under ideal containment; reflexive-transitive
    j_order: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class PrincipalFactor:
    """J u {0} with products redirected to 0 when they leave J; zero at index 0."""

    factor: FiniteSemigroup
    phi: tuple[int, ...]  # parent element -> factor element (outside J -> 0)
    source_class: int
    tag: str  # "null" | "zero_simple"
    parent: FiniteSemigroup
    source_maximal: bool
    source_generates: bool


def _partition(ideals: Sequence[frozenset[int]]) -> tuple[tuple[int, ...], tuple[frozenset[int], ...]]:
    by_ideal: dict[frozenset[int], list[int]] = {}
    for x, ideal in enumerate(ideals):
        by_ideal.setdefault(ideal, []).append(x)
    classes = sorted((frozenset(v) for v in by_ideal.values()), key=min)
    class_of = [0] * len(ideals)
    for cid, cls in enumerate(classes):
        for x in cls:
            class_of[x] = cid
    return tuple(class_of), tuple(classes)


def greens_classes(sg: FiniteSemigroup) -> GreensData:
    """Classes from principal-ideal equality over S^1; order from containment."""
    n, t = sg.n, sg.table
    rng = range(n)
    row_sets = [frozenset(row) for row in t]
    right_ideals = [frozenset((x,)) | row_sets[x] for x in rng]
    left_ideals = [frozenset((x,)) | frozenset(t[a][x] for a in rng) for x in rng]
    two_sided = []
    for x in rng:
        col = [t[a][x] for a in rng]
        sxs: set[int] = set()
        for ax in col:
            sxs |= row_sets[ax]
        two_sided.append(right_ideals[x] | frozenset(col) | frozenset(sxs))

    j_class_of, j_classes = _partition(two_sided)
    r_class_of, r_classes = _partition(right_ideals)
    l_class_of, l_classes = _partition(left_ideals)

    rep_ideal = [two_sided[min(cls)] for cls in j_classes]
    order = frozenset(
        (a, b)
        for a in range(len(j_classes))
        for b in range(len(j_classes))
        if rep_ideal[a] <= rep_ideal[b]
    )
    return GreensData(j_class_of, r_class_of, l_class_of,
                      j_classes, r_classes, l_classes, order)


def maximal_j_classes(sg: FiniteSemigroup, gd: GreensData) -> list[int]:
    """Class ids maximal under the J-order, ascending."""
    upper = {a: {b for (x, b) in gd.j_order if x == a} for a in range(len(gd.j_classes))}
    return [a for a in range(len(gd.j_classes)) if upper[a] == {a}]


def complement_subsemigroup(sg: FiniteSemigroup, gd: GreensData, j_class: int) -> frozenset[int]:
    """S - J for a maximal class J; closed by the J-order product law."""
    rest = sg.carrier() - gd.j_classes[j_class]
    if not rest:
        raise EmptyComplementError("J-class is the whole carrier")
    assert all(sg.table[a][b] in rest for a in rest for b in rest), \
        "complement of a maximal J-class must be closed"
    return rest


def jclass_generates(sg: FiniteSemigroup, j_class_elements: frozenset[int]) -> bool:
    return closure(sg, j_class_elements) == sg.carrier()


def principal_factor(sg: FiniteSemigroup, gd: GreensData, j_class: int) -> PrincipalFactor:
    """Build J* per the redirect-to-zero product, tagged null or zero_simple."""
    j = sorted(gd.j_classes[j_class])
    j_set = gd.j_classes[j_class]
    to_factor = {x: i + 1 for i, x in enumerate(j)}
    phi = tuple(to_factor.get(x, 0) for x in range(sg.n))
    m = len(j) + 1
    rows = [[0] * m for _ in range(m)]
    any_inside = False
    for a in j:
        for b in j:
            ab = sg.table[a][b]
            if ab in j_set:
                rows[to_factor[a]][to_factor[b]] = to_factor[ab]
                any_inside = True
    labels = ("0",) + tuple(sg.label(x) for x in j)
    factor = FiniteSemigroup(m, tuple(tuple(r) for r in rows), labels)
    tag = "zero_simple" if any_inside else "null"
    maximal = j_class in maximal_j_classes(sg, gd)
    return PrincipalFactor(
        factor=factor,
        phi=phi,
        source_class=j_class,
        tag=tag,
        parent=sg,
        source_maximal=maximal,
        source_generates=jclass_generates(sg, j_set),
    )


def lift_cover(pf: PrincipalFactor, parts: Sequence[frozenset[int]]) -> list[frozenset[int]]:
    """Preimages under phi of a cover of the factor; a cover of the parent."""
    if not pf.source_maximal:
        raise NotMaximalError(f"J-class {pf.source_class} is not maximal")
    if not pf.source_generates:
        raise ValueError("lift requires the source class to generate the parent")
    parent_all = pf.parent.carrier()
    lifted = []
    for part in parts:
        pre = frozenset(x for x in pf.parent.elements if pf.phi[x] in part)
        if pre == parent_all:
            raise PartNotProperAfterLiftError("lifted part equals the whole carrier")
        lifted.append(pre)
    assert frozenset().union(*lifted) == parent_all
    return lifted
