"""Rees (0-)matrix semigroups: building, decomposing, normalizing, and the
explicit two- and three-part covers they admit."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .core import FiniteSemigroup, find_identity
from .errors import (
    IrregularMatrixError,
    IsGroupCaseError,
    IsoCheckFailedError,
    KTooSmallError,
    NotInverseError,
    NotMinimalIndexError,
    NotSimpleError,
    NotSquareError,
    NotZeroSimpleError,
    TrivialGroupError,
    ZeroEntryInPlainReesError,
)
from .greens import GreensData, greens_classes

Matrix = tuple[tuple[Optional[int], ...], ...]  # lambda_size rows x k_size cols; None = zero


@dataclass(frozen=True)
class ReesStructure:
    """(K, G, Lambda, P) presentation with a verified isomorphism onto a parent."""

    has_zero: bool
    k_size: int
    lambda_size: int
    group: FiniteSemigroup
    group_identity: int
    group_inverse: tuple[int, ...]
    matrix: Matrix
    semigroup: FiniteSemigroup          # carrier in dense Rees coordinates
    parent: FiniteSemigroup
    iso_to_parent: tuple[int, ...]      # dense index -> parent element

    def dense(self, kappa: int, g: int, lam: int) -> int:
        base = 1 if self.has_zero else 0
        return base + (kappa * self.group.n + g) * self.lambda_size + lam

    def triple(self, dense: int) -> tuple[int, int, int]:
        base = 1 if self.has_zero else 0
        i = dense - base
        lam = i % self.lambda_size
        i //= self.lambda_size
        return i // self.group.n, i % self.group.n, lam

    @property
    def zero_dense(self) -> Optional[int]:
        return 0 if self.has_zero else None


def _group_identity_and_inverse(group: FiniteSemigroup) -> tuple[int, tuple[int, ...]]:
    e = find_identity(group)
    if e is None:
        raise ValueError("Rees structure group has no identity")
    t = group.table
    inv = []
    for a in group.elements:
        bs = [b for b in group.elements if t[a][b] == e and t[b][a] == e]
        if len(bs) != 1:
            raise ValueError("Rees structure group is not a group")
        inv.append(bs[0])
    return e, tuple(inv)


def _check_matrix(matrix: Sequence[Sequence[Optional[int]]], k: int, l: int,
                  group_order: int, allow_zero: bool) -> Matrix:
    if len(matrix) != l or any(len(row) != k for row in matrix):
        raise ValueError(f"matrix must be {l}x{k}")
    rows = []
    for li, row in enumerate(matrix):
        out = []
        for ki, v in enumerate(row):
            if v is None:
                if not allow_zero:
                    raise ZeroEntryInPlainReesError(li, ki)
                out.append(None)
            elif 0 <= int(v) < group_order:
                out.append(int(v))
            else:
                raise ValueError(f"matrix entry {v} at ({li},{ki}) outside group")
        rows.append(tuple(out))
    result: Matrix = tuple(rows)
    if allow_zero:
        for li in range(l):
            if all(v is None for v in result[li]):
                raise IrregularMatrixError("row", li)
        for ki in range(k):
            if all(result[li][ki] is None for li in range(l)):
                raise IrregularMatrixError("column", ki)
    return result


def _triple_label(group: FiniteSemigroup, kappa: int, g: int, lam: int) -> str:
    return f"({kappa + 1},{group.label(g)},{lam + 1})"


def _build_table(k: int, group: FiniteSemigroup, l: int, matrix: Matrix,
                 has_zero: bool) -> FiniteSemigroup:
    gn = group.n
    gt = group.table
    base = 1 if has_zero else 0
    n = base + k * gn * l

    def dense(kappa: int, g: int, lam: int) -> int:
        return base + (kappa * gn + g) * l + lam

    rows = [[0] * n for _ in range(n)]
    for kappa in range(k):
        for g in range(gn):
            for lam in range(l):
                a = dense(kappa, g, lam)
                for mu in range(k):
                    for h in range(gn):
                        for nu in range(l):
                            b = dense(mu, h, nu)
                            p = matrix[lam][mu]
                            if p is None:
                                rows[a][b] = 0
                            else:
                                rows[a][b] = dense(kappa, gt[gt[g][p]][h], nu)
    labels = (("0",) if has_zero else tuple()) + tuple(
        _triple_label(group, kappa, g, lam)
        for kappa in range(k) for g in range(gn) for lam in range(l)
    )
    return FiniteSemigroup(n, tuple(tuple(r) for r in rows), labels)


def build_rees(k_size: int, group: FiniteSemigroup, lambda_size: int,
               matrix: Sequence[Sequence[Optional[int]]]) -> tuple[FiniteSemigroup, ReesStructure]:
    """Rees matrix semigroup M[K,G,Lambda;P]; all matrix entries in G."""
    e, inv = _group_identity_and_inverse(group)
    mat = _check_matrix(matrix, k_size, lambda_size, group.n, allow_zero=False)
    sg = _build_table(k_size, group, lambda_size, mat, has_zero=False)
    rs = ReesStructure(
        has_zero=False, k_size=k_size, lambda_size=lambda_size, group=group,
        group_identity=e, group_inverse=inv, matrix=mat, semigroup=sg,
        parent=sg, iso_to_parent=tuple(range(sg.n)),
    )
    return sg, rs


def build_rees0(k_size: int, group: FiniteSemigroup, lambda_size: int,
                matrix: Sequence[Sequence[Optional[int]]]) -> tuple[FiniteSemigroup, ReesStructure]:
    """Rees 0-matrix semigroup M0[K,G,Lambda;P] with a regular matrix; zero at 0."""
    e, inv = _group_identity_and_inverse(group)
    mat = _check_matrix(matrix, k_size, lambda_size, group.n, allow_zero=True)
    sg = _build_table(k_size, group, lambda_size, mat, has_zero=True)
    rs = ReesStructure(
        has_zero=True, k_size=k_size, lambda_size=lambda_size, group=group,
        group_identity=e, group_inverse=inv, matrix=mat, semigroup=sg,
        parent=sg, iso_to_parent=tuple(range(sg.n)),
    )
    return sg, rs


def find_zero(sg: FiniteSemigroup) -> Optional[int]:
    t = sg.table
    for z in sg.elements:
        if all(t[z][s] == z == t[s][z] for s in sg.elements):
            return z
    return None


def is_completely_zero_simple(sg: FiniteSemigroup, gd: GreensData) -> bool:
    """Zero present, exactly two J-classes ({0} and the rest), and S^2 != {0}."""
    z = find_zero(sg)
    if z is None or len(gd.j_classes) != 2:
        return False
    if gd.j_classes[gd.j_class_of[z]] != frozenset((z,)):
        return False
    t = sg.table
    return any(t[a][b] != z for a in sg.elements for b in sg.elements)


def _verify_iso(rs: ReesStructure) -> None:
    iso = rs.iso_to_parent
    if sorted(iso) != list(range(rs.parent.n)):
        raise IsoCheckFailedError("triple map is not a bijection onto the parent")
    st, pt = rs.semigroup.table, rs.parent.table
    for a in range(rs.semigroup.n):
        for b in range(rs.semigroup.n):
            if iso[st[a][b]] != pt[iso[a]][iso[b]]:
                raise IsoCheckFailedError(
                    f"product mismatch at dense pair ({a},{b})"
                )


def _decompose(sg: FiniteSemigroup, gd: GreensData, j_elements: frozenset[int],
               zero: Optional[int]) -> ReesStructure:
    t = sg.table
    r_classes = sorted((c for c in gd.r_classes if c <= j_elements), key=min)
    l_classes = sorted((c for c in gd.l_classes if c <= j_elements), key=min)
    idempotents = [x for x in sorted(j_elements) if t[x][x] == x]
    if not idempotents:
        raise IsoCheckFailedError("no idempotent in the (nonzero) J-class")
    e = idempotents[0]
    r_e = next(c for c in r_classes if e in c)
    l_e = next(c for c in l_classes if e in c)

    h_e = sorted(r_e & l_e)
    group, g_new_to_old = _subgroup_table(sg, h_e)
    g_old_to_new = {x: i for i, x in enumerate(g_new_to_old)}

    reps_r = [min(cls & l_e) for cls in r_classes]   # r_kappa in R_kappa n L_e
    reps_l = [min(r_e & cls) for cls in l_classes]   # q_lambda in R_e n L_lambda

    matrix_rows = []
    for q in reps_l:
        row: list[Optional[int]] = []
        for r in reps_r:
            prod = t[q][r]
            if zero is not None and prod == zero:
                row.append(None)
            else:
                if prod not in g_old_to_new:
                    raise IsoCheckFailedError("sandwich entry escaped the H-class group")
                row.append(g_old_to_new[prod])
        matrix_rows.append(tuple(row))
    matrix: Matrix = tuple(matrix_rows)

    has_zero = zero is not None
    if has_zero:
        matrix = _check_matrix(matrix, len(reps_r), len(reps_l), group.n, allow_zero=True)
    ge, ginv = _group_identity_and_inverse(group)
    rees_sg = _build_table(len(reps_r), group, len(reps_l), matrix, has_zero)

    iso = [0] * rees_sg.n
    if has_zero:
        iso[0] = zero
    base = 1 if has_zero else 0
    for kappa, r in enumerate(reps_r):
        for g in range(group.n):
            for lam, q in enumerate(reps_l):
                dense = base + (kappa * group.n + g) * len(reps_l) + lam
                iso[dense] = t[t[r][g_new_to_old[g]]][q]

    rs = ReesStructure(
        has_zero=has_zero, k_size=len(reps_r), lambda_size=len(reps_l),
        group=group, group_identity=ge, group_inverse=ginv, matrix=matrix,
        semigroup=rees_sg, parent=sg, iso_to_parent=tuple(iso),
    )
    _verify_iso(rs)
    return rs


def _subgroup_table(sg: FiniteSemigroup, elements: list[int]) -> tuple[FiniteSemigroup, list[int]]:
    old_to_new = {x: i for i, x in enumerate(elements)}
    rows = []
    for a in elements:
        row = []
        for b in elements:
            c = sg.table[a][b]
            if c not in old_to_new:
                raise IsoCheckFailedError("H-class of the idempotent is not closed")
            row.append(old_to_new[c])
        rows.append(tuple(row))
    labels = tuple(sg.label(x) for x in elements) if sg.labels else None
    return FiniteSemigroup(len(elements), tuple(rows), labels), elements


def decompose_simple(sg: FiniteSemigroup) -> ReesStructure:
    """Rees coordinates of a completely simple semigroup (single J-class)."""
    gd = greens_classes(sg)
    if len(gd.j_classes) != 1:
        raise NotSimpleError(f"{len(gd.j_classes)} J-classes")
    return _decompose(sg, gd, gd.j_classes[0], zero=None)


def decompose_zero_simple(sg: FiniteSemigroup) -> ReesStructure:
    """Rees coordinates of a completely 0-simple semigroup."""
    gd = greens_classes(sg)
    if not is_completely_zero_simple(sg, gd):
        raise NotZeroSimpleError("carrier is not completely 0-simple")
    zero = find_zero(sg)
    assert zero is not None
    nonzero = next(c for c in gd.j_classes if c != frozenset((zero,)))
    return _decompose(sg, gd, nonzero, zero)


def normalize_inverse(rs: ReesStructure) -> ReesStructure:
    """Permute and scale an inverse Rees 0-matrix so P becomes the identity matrix."""
    if not rs.has_zero:
        raise NotInverseError("inverse Rees matrix semigroups without zero are groups")
    if rs.k_size != rs.lambda_size:
        raise NotSquareError(f"|K|={rs.k_size} but |Lambda|={rs.lambda_size}")
    k = rs.k_size
    nonzero_col: list[int] = []
    for lam in range(k):
        cols = [kappa for kappa in range(k) if rs.matrix[lam][kappa] is not None]
        if len(cols) != 1:
            raise NotInverseError(f"matrix row {lam} has {len(cols)} nonzero entries")
        nonzero_col.append(cols[0])
    if sorted(nonzero_col) != list(range(k)):
        raise NotInverseError("matrix columns do not pair off with rows")

    gt = rs.group.table
    scale = [0] * k  # new row index -> right-multiplier applied to g
    for lam in range(k):
        p = rs.matrix[lam][nonzero_col[lam]]
        assert p is not None
        scale[nonzero_col[lam]] = p

    identity_matrix: Matrix = tuple(
        tuple(rs.group_identity if lam == kappa else None for kappa in range(k))
        for lam in range(k)
    )
    new_sg = _build_table(k, rs.group, k, identity_matrix, has_zero=True)
    new_iso = [0] * new_sg.n
    new_iso[0] = rs.iso_to_parent[0]
    for kappa in range(k):
        for g in range(rs.group.n):
            for lam in range(k):
                # theta(kappa, g, lam) = (kappa, g * p_{lam, c(lam)}, c(lam))
                old_dense = rs.dense(kappa, g, lam)
                new_lam = nonzero_col[lam]
                new_g = gt[g][scale[new_lam]]
                new_dense = 1 + (kappa * rs.group.n + new_g) * k + new_lam
                new_iso[new_dense] = rs.iso_to_parent[old_dense]

    out = replace(rs, lambda_size=k, matrix=identity_matrix,
                  semigroup=new_sg, iso_to_parent=tuple(new_iso))
    _verify_iso(out)
    return out


def _block(rs: ReesStructure, kappa: int, gs: Sequence[int], lam: int) -> set[int]:
    return {rs.dense(kappa, g, lam) for g in gs}


def _to_parent(rs: ReesStructure, dense_parts: Sequence[set[int]]) -> list[frozenset[int]]:
    return [frozenset(rs.iso_to_parent[d] for d in part) for part in dense_parts]


def cover_simple(rs: ReesStructure) -> list[frozenset[int]]:
    """Two-part cover of a non-group Rees matrix semigroup, in parent ids."""
    if rs.has_zero:
        raise ValueError("cover_simple expects a plain Rees matrix structure")
    gs = range(rs.group.n)
    if rs.k_size > 1:
        first = {rs.dense(0, g, lam) for g in gs for lam in range(rs.lambda_size)}
    elif rs.lambda_size > 1:
        first = {rs.dense(kappa, g, 0) for kappa in range(rs.k_size) for g in gs}
    else:
        raise IsGroupCaseError("|K|=|Lambda|=1: the carrier is a group")
    rest = set(range(rs.semigroup.n)) - first
    return _to_parent(rs, [first, rest])


def cover_zero_simple(rs: ReesStructure) -> list[frozenset[int]]:
    """Two-part cover of a regular Rees 0-matrix semigroup, in parent ids."""
    if not rs.has_zero:
        raise ValueError("cover_zero_simple expects a Rees 0-matrix structure")
    gs = range(rs.group.n)
    zero = 0
    if rs.k_size > 1:
        first = {rs.dense(0, g, lam) for g in gs for lam in range(rs.lambda_size)} | {zero}
    elif rs.lambda_size > 1:
        first = {rs.dense(kappa, g, 0) for kappa in range(rs.k_size) for g in gs} | {zero}
    else:
        # single sandwich entry is a group element, so the triples are closed
        triples = {rs.dense(0, g, 0) for g in gs}
        return _to_parent(rs, [triples, {zero}])
    rest = (set(range(rs.semigroup.n)) - first) | {zero}
    return _to_parent(rs, [first, rest])


def _require_normalized(rs: ReesStructure) -> None:
    if not rs.has_zero or rs.k_size != rs.lambda_size:
        raise NotInverseError("structure is not a normalized inverse Rees 0-matrix")
    for lam in range(rs.lambda_size):
        for kappa in range(rs.k_size):
            expected = rs.group_identity if lam == kappa else None
            if rs.matrix[lam][kappa] != expected:
                raise NotInverseError("matrix is not the identity; normalize first")


def inverse_cover_k_ge3(rs: ReesStructure) -> list[frozenset[int]]:
    """Three inverse-closed parts omitting one of the first three indices each."""
    _require_normalized(rs)
    k = rs.k_size
    if k < 3:
        raise KTooSmallError(f"|K|={k} < 3")
    gs = range(rs.group.n)
    parts = []
    for j in range(3):
        keep = [i for i in range(k) if i != j]
        part = {rs.dense(a, g, b) for a in keep for g in gs for b in keep} | {0}
        parts.append(part)
    return _to_parent(rs, parts)


def inverse_cover_k2(rs: ReesStructure, subgroup: frozenset[int],
                     reps: Optional[Sequence[int]] = None) -> list[frozenset[int]]:
    """n+1 inverse-closed parts from a minimal-index subgroup B and coset reps."""
    from .groups import min_proper_index  # deferred: groups builds on covers

    _require_normalized(rs)
    if rs.k_size != 2:
        raise KTooSmallError(f"|K|={rs.k_size} != 2")
    g_order = rs.group.n
    if g_order == 1:
        raise TrivialGroupError("|G|=1: the carrier is monogenic, no finite cover")
    gt = rs.group.table
    ginv = rs.group_inverse
    b = sorted(subgroup)
    if g_order % len(b) != 0:
        raise NotMinimalIndexError("subgroup order does not divide the group order")
    index = g_order // len(b)
    minimal = min_proper_index(rs.group)
    if index != minimal:
        raise NotMinimalIndexError(f"index {index} exceeds the minimum {minimal}")

    if reps is None:
        reps = []
        covered: set[int] = set()
        for g in range(g_order):
            if g not in covered:
                reps.append(g)
                covered |= {gt[x][g] for x in b}
    if len(reps) != index:
        raise NotMinimalIndexError("coset representatives do not match the index")

    parts = []
    for g in reps:
        right_coset = [gt[x][g] for x in b]                 # B g_i
        left_coset = [gt[ginv[g]][x] for x in b]            # g_i^-1 B
        conjugate = [gt[gt[ginv[g]][x]][g] for x in b]      # g_i^-1 B g_i
        part = (
            _block(rs, 0, b, 0)
            | _block(rs, 0, right_coset, 1)
            | _block(rs, 1, left_coset, 0)
            | _block(rs, 1, conjugate, 1)
            | {0}
        )
        parts.append(part)
    everything_diagonal = (
        _block(rs, 0, range(g_order), 0) | _block(rs, 1, range(g_order), 1) | {0}
    )
    parts.append(everything_diagonal)
    return _to_parent(rs, parts)
