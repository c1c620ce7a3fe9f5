"""Rees matrix builders, decomposition round-trips, normalization, covers."""

from __future__ import annotations

import pytest

from semicover import structure_flags
from semicover.errors import (
    IrregularMatrixError,
    IsGroupCaseError,
    KTooSmallError,
    NotInverseError,
    NotSimpleError,
    TrivialGroupError,
    ZeroEntryInPlainReesError,
)
from semicover.groups import cyclic_group, klein_four
from semicover.rees import (
    build_rees,
    build_rees0,
    cover_simple,
    cover_zero_simple,
    decompose_simple,
    decompose_zero_simple,
    inverse_cover_k2,
    inverse_cover_k_ge3,
    is_completely_zero_simple,
    normalize_inverse,
)
from semicover.greens import greens_classes


def identity_matrix(k, e=0):
    return [[e if i == j else None for j in range(k)] for i in range(k)]


def test_build_rees_left_zero():
    sg, rs = build_rees(2, cyclic_group(1), 1, [[0, 0]])
    assert sg.n == 2
    assert sg.table == ((0, 0), (1, 1))


def test_build_rees_1x1_is_group():
    sg, _ = build_rees(1, cyclic_group(2), 1, [[0]])
    assert structure_flags(sg).is_group


def test_build_rees_1x1_nonidentity_entry_still_group():
    # sandwich entry x: (kappa, x^-1, lambda) acts as the identity
    sg, _ = build_rees(1, cyclic_group(2), 1, [[1]])
    flags = structure_flags(sg)
    assert flags.is_group
    assert flags.identity == 1  # the triple carrying the non-identity element


def test_build_rees_rejects_zero_entry():
    with pytest.raises(ZeroEntryInPlainReesError):
        build_rees(2, cyclic_group(1), 1, [[0, None]])


def test_build_rees0_b2(brandt_b2):
    assert brandt_b2.n == 5
    assert structure_flags(brandt_b2).is_inverse


def test_build_rees0_c2_has_order_9():
    sg, _ = build_rees0(2, cyclic_group(2), 2, identity_matrix(2))
    assert sg.n == 9
    assert structure_flags(sg).is_inverse


def test_build_rees0_rejects_irregular():
    with pytest.raises(IrregularMatrixError):
        build_rees0(2, cyclic_group(1), 2, [[0, 0], [None, None]])


def test_is_completely_zero_simple(brandt_b2):
    from semicover import build_null

    assert is_completely_zero_simple(brandt_b2, greens_classes(brandt_b2))
    null2 = build_null(2)
    assert not is_completely_zero_simple(null2, greens_classes(null2))
    c3 = cyclic_group(3)
    assert not is_completely_zero_simple(c3, greens_classes(c3))


def test_decompose_left_zero(left_zero_2):
    rs = decompose_simple(left_zero_2)
    assert (rs.k_size, rs.lambda_size, rs.group.n) == (2, 1, 1)


def test_decompose_right_zero():
    from semicover import validate_table

    rs = decompose_simple(validate_table([[0, 1], [0, 1]]))
    assert (rs.k_size, rs.lambda_size, rs.group.n) == (1, 2, 1)


def test_decompose_group_case():
    rs = decompose_simple(cyclic_group(3))
    assert (rs.k_size, rs.lambda_size, rs.group.n) == (1, 1, 3)


def test_decompose_rejects_non_simple(example1):
    with pytest.raises(NotSimpleError):
        decompose_simple(example1)


def test_decompose_zero_simple_b2(brandt_b2):
    rs = decompose_zero_simple(brandt_b2)
    assert (rs.k_size, rs.lambda_size, rs.group.n) == (2, 2, 1)
    nonzero = [
        (lam, kap)
        for lam in range(2)
        for kap in range(2)
        if rs.matrix[lam][kap] is not None
    ]
    assert len(nonzero) == 2  # identity pattern up to row/column order


@pytest.mark.parametrize("group", [cyclic_group(1), cyclic_group(2), klein_four()])
def test_round_trip_zero_simple(group):
    sg, built = build_rees0(2, group, 2, identity_matrix(2))
    rs = decompose_zero_simple(sg)
    assert rs.k_size == built.k_size
    assert rs.lambda_size == built.lambda_size
    assert rs.group.n == built.group.n


@pytest.mark.parametrize("k,l,group", [
    (2, 1, cyclic_group(1)),
    (2, 2, cyclic_group(2)),
    (1, 3, cyclic_group(3)),
])
def test_round_trip_simple(k, l, group):
    matrix = [[0] * k for _ in range(l)]
    sg, built = build_rees(k, group, l, matrix)
    rs = decompose_simple(sg)
    assert (rs.k_size, rs.lambda_size, rs.group.n) == (k, l, group.n)


def test_normalize_permuted_matrix():
    anti_diagonal = [[None, 0], [0, None]]
    sg, rs = build_rees0(2, cyclic_group(1), 2, anti_diagonal)
    out = normalize_inverse(rs)
    assert out.matrix == ((0, None), (None, 0))


def test_normalize_scales_entries():
    # diagonal (e, x) over C_2 scales to (e, e); the isomorphism re-verifies
    sg, rs = build_rees0(2, cyclic_group(2), 2, [[0, None], [None, 1]])
    out = normalize_inverse(rs)
    assert out.matrix == ((0, None), (None, 0))
    assert sorted(out.iso_to_parent) == list(range(sg.n))


def test_normalize_rejects_non_inverse():
    sg, rs = build_rees0(2, cyclic_group(1), 2, [[0, 0], [0, 0]])
    with pytest.raises(NotInverseError):
        normalize_inverse(rs)


def test_cover_simple_left_zero(left_zero_2):
    rs = decompose_simple(left_zero_2)
    parts = cover_simple(rs)
    assert sorted(sorted(p) for p in parts) == [[0], [1]]


def test_cover_simple_three_by_one():
    sg, rs = build_rees(3, cyclic_group(1), 1, [[0, 0, 0]])
    parts = cover_simple(rs)
    assert sorted(len(p) for p in parts) == [1, 2]


def test_cover_simple_group_case_raises():
    _, rs = build_rees(1, cyclic_group(2), 1, [[0]])
    with pytest.raises(IsGroupCaseError):
        cover_simple(rs)


def test_cover_zero_simple_b2(brandt_b2):
    rs = decompose_zero_simple(brandt_b2)
    parts = cover_zero_simple(rs)
    assert [len(p) for p in parts] == [3, 3]
    assert frozenset({0}) == parts[0] & parts[1]


def test_cover_zero_simple_group_with_zero():
    sg, rs = build_rees0(1, cyclic_group(2), 1, [[1]])
    parts = cover_zero_simple(rs)
    assert sorted(sorted(p) for p in parts) == [[0], [1, 2]]


def test_cover_zero_simple_order9():
    sg, rs = build_rees0(2, cyclic_group(2), 2, identity_matrix(2))
    parts = cover_zero_simple(rs)
    assert [len(p) for p in parts] == [5, 5]


def test_inverse_cover_k3_trivial_group():
    sg, rs = build_rees0(3, cyclic_group(1), 3, identity_matrix(3))
    parts = inverse_cover_k_ge3(normalize_inverse(rs))
    assert sg.n == 10
    assert [len(p) for p in parts] == [5, 5, 5]
    assert frozenset().union(*parts) == sg.carrier()


def test_inverse_cover_k3_c2():
    sg, rs = build_rees0(3, cyclic_group(2), 3, identity_matrix(3))
    parts = inverse_cover_k_ge3(normalize_inverse(rs))
    assert sg.n == 19
    assert [len(p) for p in parts] == [9, 9, 9]
    assert frozenset().union(*parts) == sg.carrier()


def test_inverse_cover_k4_trivial_group():
    sg, rs = build_rees0(4, cyclic_group(1), 4, identity_matrix(4))
    parts = inverse_cover_k_ge3(normalize_inverse(rs))
    assert sg.n == 17
    assert [len(p) for p in parts] == [10, 10, 10]
    assert frozenset().union(*parts) == sg.carrier()


def test_inverse_cover_k3_requires_k3(brandt_b2):
    rs = normalize_inverse(decompose_zero_simple(brandt_b2))
    with pytest.raises(KTooSmallError):
        inverse_cover_k_ge3(rs)


def test_inverse_cover_k2_c2():
    sg, rs = build_rees0(2, cyclic_group(2), 2, identity_matrix(2))
    parts = inverse_cover_k2(normalize_inverse(rs), frozenset({0}))
    assert len(parts) == 3  # min index of C_2 is 2
    assert frozenset().union(*parts) == sg.carrier()


def test_inverse_cover_k2_c3():
    sg, rs = build_rees0(2, cyclic_group(3), 2, identity_matrix(2))
    parts = inverse_cover_k2(normalize_inverse(rs), frozenset({0}))
    assert len(parts) == 4
    assert frozenset().union(*parts) == sg.carrier()


def test_inverse_cover_k2_trivial_group_raises(brandt_b2):
    rs = normalize_inverse(decompose_zero_simple(brandt_b2))
    with pytest.raises(TrivialGroupError):
        inverse_cover_k2(rs, frozenset({0}))
