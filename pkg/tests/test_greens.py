"""Green's relations, the J-order, principal factors, and cover lifting."""

from __future__ import annotations

import pytest

from semicover import build_cyclic, build_symmetric_inverse_monoid
from semicover.core import restrict
from semicover.errors import EmptyComplementError, NotMaximalError
from semicover.greens import (
    complement_subsemigroup,
    greens_classes,
    jclass_generates,
    lift_cover,
    maximal_j_classes,
    principal_factor,
)
from semicover.groups import cyclic_group


def test_example1_three_singleton_classes(example1):
    gd = greens_classes(example1)
    assert gd.j_classes == (frozenset({0}), frozenset({1}), frozenset({2}))
    assert maximal_j_classes(example1, gd) == [0, 1]


def test_group_has_single_class():
    c3 = cyclic_group(3)
    gd = greens_classes(c3)
    assert len(gd.j_classes) == 1
    assert len(gd.r_classes) == 1
    assert len(gd.l_classes) == 1


def test_b2_classes(brandt_b2):
    gd = greens_classes(brandt_b2)
    assert frozenset({0}) in gd.j_classes
    assert frozenset({1, 2, 3, 4}) in gd.j_classes
    nonzero_r = [c for c in gd.r_classes if 0 not in c]
    nonzero_l = [c for c in gd.l_classes if 0 not in c]
    assert len(nonzero_r) == 2 and len(nonzero_l) == 2


def test_maximal_class_of_i2_is_bijections():
    i2 = build_symmetric_inverse_monoid(2)
    gd = greens_classes(i2)
    (top,) = maximal_j_classes(i2, gd)
    bijections = {
        x for x in i2.elements if i2.labels[x] in ("[0 1]", "[1 0]")
    }
    assert gd.j_classes[top] == frozenset(bijections)


def test_complement_subsemigroup(example1):
    gd = greens_classes(example1)
    assert complement_subsemigroup(example1, gd, 0) == frozenset({1, 2})


def test_complement_of_whole_carrier_raises():
    c3 = cyclic_group(3)
    gd = greens_classes(c3)
    with pytest.raises(EmptyComplementError):
        complement_subsemigroup(c3, gd, 0)


def test_complement_i2_non_bijections_closed():
    i2 = build_symmetric_inverse_monoid(2)
    gd = greens_classes(i2)
    (top,) = maximal_j_classes(i2, gd)
    rest = complement_subsemigroup(i2, gd, top)
    assert len(rest) == 5  # rank cannot increase under composition


def test_jclass_generates(brandt_b2, example1):
    gd = greens_classes(brandt_b2)
    nonzero = next(c for c in gd.j_classes if len(c) == 4)
    assert jclass_generates(brandt_b2, nonzero)
    gd1 = greens_classes(example1)
    assert not jclass_generates(example1, gd1.j_classes[0])
    c3 = cyclic_group(3)
    assert jclass_generates(c3, greens_classes(c3).j_classes[0])


def test_principal_factor_of_idempotent_singleton(example1):
    gd = greens_classes(example1)
    pf = principal_factor(example1, gd, 0)
    assert pf.factor.n == 2
    assert pf.tag == "zero_simple"  # a*a = a stays in the class
    assert pf.phi == (1, 0, 0)


def test_principal_factor_null_tag():
    sg = build_cyclic(2, 1)  # {x, x^2} with x^2 as zero-ish sink
    gd = greens_classes(sg)
    x_class = gd.j_class_of[0]
    pf = principal_factor(sg, gd, x_class)
    assert pf.tag == "null"


def test_principal_factor_of_i2_rank1_class():
    from semicover.rees import decompose_zero_simple

    i2 = build_symmetric_inverse_monoid(2)
    gd = greens_classes(i2)
    rank1 = next(c for c in gd.j_classes if len(c) == 4)
    pf = principal_factor(i2, gd, gd.j_class_of[min(rank1)])
    assert pf.factor.n == 5 and pf.tag == "zero_simple"
    # the factor is Brandt-like: |K| = |Lambda| = 2 over the trivial group
    rs = decompose_zero_simple(pf.factor)
    assert (rs.k_size, rs.lambda_size, rs.group.n) == (2, 2, 1)


def test_lift_cover_identity_like(brandt_b2):
    gd = greens_classes(brandt_b2)
    nonzero_id = next(i for i, c in enumerate(gd.j_classes) if len(c) == 4)
    pf = principal_factor(brandt_b2, gd, nonzero_id)
    # the factor is isomorphic to B_2 itself; lift a 2-part factor cover
    factor_parts = [frozenset({0, 1, 2}), frozenset({0, 3, 4})]
    lifted = lift_cover(pf, factor_parts)
    assert frozenset().union(*lifted) == brandt_b2.carrier()
    assert all(part != brandt_b2.carrier() for part in lifted)


def test_lift_cover_through_ideal_of_i2():
    from semicover import sigma_s

    i2 = build_symmetric_inverse_monoid(2)
    gd = greens_classes(i2)
    (top,) = maximal_j_classes(i2, gd)
    ideal, _ = restrict(i2, complement_subsemigroup(i2, gd, top))
    result = sigma_s(ideal)
    assert result.value == 2
    assert result.case_tag == "principal_factor_zero_simple"


def test_lift_cover_rejects_non_maximal(example1):
    gd = greens_classes(example1)
    pf = principal_factor(example1, gd, 2)  # {0} is the bottom class
    with pytest.raises(NotMaximalError):
        lift_cover(pf, [frozenset({0, 1})])


def test_j_order_product_law_on_small_carriers(brandt_b2, example1):
    for sg in (brandt_b2, example1, build_symmetric_inverse_monoid(2)):
        gd = greens_classes(sg)
        for x in sg.elements:
            for y in sg.elements:
                xy = sg.table[x][y]
                assert (gd.j_class_of[xy], gd.j_class_of[x]) in gd.j_order
                assert (gd.j_class_of[xy], gd.j_class_of[y]) in gd.j_order
