"""Carrier construction, closures, and structure predicates."""

from __future__ import annotations

from math import comb, factorial

import pytest

from semicover import (
    adjoin_identity,
    build_cyclic,
    build_null,
    build_symmetric_inverse_monoid,
    closure,
    is_monogenic,
    structure_flags,
    transformation_closure,
    validate_table,
)
from semicover.core import UNDEFINED, adjoin_fresh_identity, find_identity, restrict
from semicover.errors import (
    BadImageError,
    EmptyGeneratorsError,
    NotAssociativeError,
    OutOfRangeError,
    TooLargeError,
)
from semicover.groups import cyclic_group, klein_four


def assert_associative(sg):
    t = sg.table
    for a in sg.elements:
        for b in sg.elements:
            for c in sg.elements:
                assert t[t[a][b]][c] == t[a][t[b][c]]


def test_validate_trivial():
    sg = validate_table([[0]])
    assert sg.n == 1


def test_validate_null_two():
    sg = validate_table([[0, 0], [0, 0]])
    assert sg.n == 2


def test_validate_rejects_non_associative():
    with pytest.raises(NotAssociativeError) as err:
        validate_table([[1, 0], [0, 0]])
    # first violating triple in lexicographic order
    assert err.value.triple == (0, 0, 1)


def test_validate_rejects_out_of_range():
    with pytest.raises(OutOfRangeError):
        validate_table([[0, 2], [0, 0]])


def test_closure_example1(example1):
    assert closure(example1, [0]) == frozenset({0})
    assert closure(example1, []) == frozenset()
    assert closure(example1, range(3)) == frozenset(range(3))


def test_closure_b2_offdiagonal_squares_to_zero(brandt_b2):
    assert closure(brandt_b2, [2]) == frozenset({0, 2})


def test_is_monogenic():
    assert is_monogenic(build_cyclic(2, 2)) == 0
    assert is_monogenic(build_cyclic(1, 3)) == 0


def test_is_monogenic_none_for_example1(example1):
    assert is_monogenic(example1) is None


def test_is_monogenic_none_for_b2(brandt_b2):
    assert is_monogenic(brandt_b2) is None


def test_structure_flags_klein():
    flags = structure_flags(klein_four())
    assert flags.is_group and flags.is_inverse
    assert flags.identity == 0
    assert flags.inverse_map == (0, 1, 2, 3)  # every element is an involution


def test_structure_flags_b2(brandt_b2):
    flags = structure_flags(brandt_b2)
    assert not flags.is_group
    assert flags.is_inverse
    assert flags.idempotents == frozenset({0, 1, 4})
    inv = flags.inverse_map
    assert inv[2] == 3 and inv[3] == 2


def test_structure_flags_left_zero(left_zero_2):
    flags = structure_flags(left_zero_2)
    assert not flags.is_group
    assert not flags.is_inverse  # two idempotents share an L-class


def test_adjoin_identity_noop_on_monoid():
    c3 = cyclic_group(3)
    assert adjoin_identity(c3) is c3
    assert adjoin_identity(klein_four()) is klein_four() or adjoin_identity(klein_four()).n == 4


def test_adjoin_identity_on_null():
    sg = adjoin_identity(build_null(2))
    assert sg.n == 3
    assert find_identity(sg) == 2
    assert_associative(sg)


def test_adjoin_fresh_identity_always_appends():
    sg = adjoin_fresh_identity(klein_four())
    assert sg.n == 5
    assert find_identity(sg) == 4


@pytest.mark.parametrize("index,period", [(1, 3), (2, 2), (2, 1), (3, 4)])
def test_build_cyclic(index, period):
    sg = build_cyclic(index, period)
    assert sg.n == index + period - 1
    assert is_monogenic(sg) == 0
    assert_associative(sg)
    flags = structure_flags(sg)
    assert flags.is_group == (index == 1)


def test_build_cyclic_2_1_is_null_tailed():
    sg = build_cyclic(2, 1)
    assert sg.table == ((1, 1), (1, 1))


def test_build_null_j_classes_are_singletons():
    from semicover.greens import greens_classes

    sg = build_null(3)
    gd = greens_classes(sg)
    assert all(len(c) == 1 for c in gd.j_classes)


def test_transformation_closure_swap_gives_c2():
    sg, elems = transformation_closure(2, [[1, 0]])
    assert sg.n == 2
    assert structure_flags(sg).is_group
    assert set(elems.values()) == {(1, 0), (0, 1)}


def test_transformation_closure_constant_is_trivial():
    sg, _ = transformation_closure(2, [[0, 0]])
    assert sg.n == 1


def test_transformation_closure_generates_i2():
    gens = [[0, 1], [1, 0], [0, UNDEFINED], [UNDEFINED, UNDEFINED]]
    sg, _ = transformation_closure(2, gens)
    assert sg.n == 7
    assert structure_flags(sg).is_inverse


def test_transformation_closure_rejects_bad_image():
    with pytest.raises(BadImageError):
        transformation_closure(2, [[0, 5]])


def test_transformation_closure_rejects_empty():
    with pytest.raises(EmptyGeneratorsError):
        transformation_closure(2, [])


@pytest.mark.parametrize("m", [1, 2, 3])
def test_symmetric_inverse_monoid_order(m):
    # independent oracle: |I_m| = sum over ranks of C(m,k)^2 k!
    expected = sum(comb(m, k) ** 2 * factorial(k) for k in range(m + 1))
    sg = build_symmetric_inverse_monoid(m)
    assert sg.n == expected
    flags = structure_flags(sg)
    assert flags.is_inverse and flags.identity is not None


def test_symmetric_inverse_monoid_too_large():
    with pytest.raises(TooLargeError):
        build_symmetric_inverse_monoid(5)


def test_restrict_requires_closed_subset(example1):
    sub, new_to_old = restrict(example1, [0, 2])
    assert sub.n == 2 and new_to_old == (0, 2)
    with pytest.raises(ValueError):
        restrict(example1, [0, 1])  # 0*1 = 2 escapes


def test_closure_properties_on_small_carriers(brandt_b2, example1):
    for sg in (brandt_b2, example1):
        full = sg.carrier()
        for x in sg.elements:
            c = closure(sg, [x])
            assert c <= full and x in c
            assert closure(sg, c) == c  # idempotent
        assert closure(sg, [0]) <= closure(sg, [0, 1])  # monotone
