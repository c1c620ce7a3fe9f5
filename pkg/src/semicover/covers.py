"""Covering-number engines for semigroups, inverse semigroups, and monoids,
plus the certificate checker every finite result must pass."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from . import greens as greens_mod
from . import rees as rees_mod
from .core import (
    FiniteSemigroup,
    StructureFlags,
    closure,
    closure_with_inverses,
    is_monogenic,
    restrict,
    structure_flags,
)
from .errors import NoIdentityError, NotInverseError


class _Infinite:
    """Distinguished infinite covering number (never a sentinel integer)."""

    _instance: Optional["_Infinite"] = None

    def __new__(cls) -> "_Infinite":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "infinite"


INFINITE = _Infinite()
Value = Union[int, _Infinite]


class Kind(enum.Enum):
    SUBSEMIGROUP = "subsemigroup"
    INVERSE_SUB = "inverse_sub"
    SUBMONOID = "submonoid"
    MONOIDAL_SUB = "monoidal_sub"
    SUBGROUP = "subgroup"


@dataclass(frozen=True)
class Cover:
    kind: Kind
    parts: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class CoveringResult:
    value: Value
    case_tag: str
    certificate: Optional[Cover]
    witness: Optional[int]
    provenance: str  # "classifier" | "oracle" | "both"

    @property
    def is_finite(self) -> bool:
        return isinstance(self.value, int)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    code: Optional[str] = None
    message: Optional[str] = None
    part: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


OK = Verdict(True)


def _bad(code: str, message: str, part: Optional[int] = None) -> Verdict:
    return Verdict(False, code, message, part)


def _part_is_group(sg: FiniteSemigroup, part: frozenset[int]) -> Optional[str]:
    t = sg.table
    identity = None
    for e in part:
        if all(t[e][x] == x == t[x][e] for x in part):
            identity = e
            break
    if identity is None:
        return "no internal identity"
    for a in part:
        if {t[a][b] for b in part} != part or {t[b][a] for b in part} != part:
            return f"element {a} is not invertible within the part"
    return None


def verify_cover(sg: FiniteSemigroup, flags: StructureFlags, cover: Cover) -> Verdict:
    """Check every invariant of a proposed cover for its declared kind."""
    carrier = sg.carrier()
    t = sg.table
    if not cover.parts:
        return _bad("empty", "cover has no parts")
    for i, part in enumerate(cover.parts):
        if not part:
            return _bad("empty_part", "part is empty", i)
        if not part <= carrier:
            return _bad("foreign_element", "part references unknown elements", i)
        if part == carrier:
            return _bad("not_proper", "part equals the whole carrier", i)
        for a in part:
            for b in part:
                if t[a][b] not in part:
                    return _bad(
                        "not_closed",
                        f"{a}*{b}={t[a][b]} escapes the part", i,
                    )
        if cover.kind is Kind.INVERSE_SUB:
            if not flags.is_inverse or flags.inverse_map is None:
                return _bad("not_inverse_carrier", "carrier is not an inverse semigroup")
            for a in part:
                if flags.inverse_map[a] not in part:
                    return _bad("not_inverse_closed", f"{a}^-1 escapes the part", i)
        elif cover.kind is Kind.SUBMONOID:
            if flags.identity is None:
                return _bad("no_identity", "carrier is not a monoid")
            if flags.identity not in part:
                return _bad("missing_identity", "part omits the monoid identity", i)
        elif cover.kind is Kind.MONOIDAL_SUB:
            if not any(
                all(t[e][x] == x == t[x][e] for x in part) for e in part
            ):
                return _bad("no_local_identity", "part has no internal identity", i)
        elif cover.kind is Kind.SUBGROUP:
            why = _part_is_group(sg, part)
            if why is not None:
                return _bad("not_a_group", why, i)
    union = frozenset().union(*cover.parts)
    if union != carrier:
        missing = min(carrier - union)
        return _bad("not_covering", f"element {missing} is in no part")
    return OK


def witness_generates(sg: FiniteSemigroup, flags: StructureFlags, kind: Kind,
                      witness: int) -> bool:
    """Whether an element witnesses an infinite covering number for the kind:
    it generates the carrier under the kind's closure, or for subgroup kind
    lies in no proper subgroup."""
    if not 0 <= witness < sg.n:
        return False
    if kind is Kind.INVERSE_SUB:
        if flags.inverse_map is None:
            return False
        return closure_with_inverses(sg, flags.inverse_map, (witness,)) == sg.carrier()
    if kind in (Kind.SUBMONOID, Kind.MONOIDAL_SUB):
        if flags.identity is None:
            return False
        return closure(sg, (witness, flags.identity)) == sg.carrier()
    if kind is Kind.SUBGROUP:
        if flags.is_group:
            return closure(sg, (witness,)) == sg.carrier()
        gd = greens_mod.greens_classes(sg)
        return not any(
            witness in gd.r_classes[gd.r_class_of[e]] & gd.l_classes[gd.l_class_of[e]]
            for e in flags.idempotents
        )
    return closure(sg, (witness,)) == sg.carrier()


def _checked(sg: FiniteSemigroup, flags: StructureFlags, result: CoveringResult) -> CoveringResult:
    # engines must never emit an unverifiable certificate
    if result.is_finite:
        assert result.certificate is not None
        assert len(result.certificate.parts) == result.value
        verdict = verify_cover(sg, flags, result.certificate)
        assert verdict.ok, f"engine produced an invalid certificate: {verdict}"
    return result


def _finite(kind: Kind, value: int, case: str,
            parts: Sequence[frozenset[int]]) -> CoveringResult:
    return CoveringResult(value, case, Cover(kind, tuple(parts)), None, "classifier")


def _infinite(case: str, witness: int) -> CoveringResult:
    return CoveringResult(INFINITE, case, None, witness, "classifier")


def sigma_s(sg: FiniteSemigroup, flags: Optional[StructureFlags] = None,
            gd: Optional[greens_mod.GreensData] = None) -> CoveringResult:
    """Covering number with respect to subsemigroups, with certificate."""
    from .groups import sigma_g

    witness = is_monogenic(sg)
    if witness is not None:
        return _infinite("monogenic", witness)
    if flags is None:
        flags = structure_flags(sg)
    if flags.is_group:
        inner = sigma_g(sg)
        assert inner.is_finite, "non-monogenic group cannot be cyclic"
        assert inner.certificate is not None
        return _checked(sg, flags, _finite(
            Kind.SUBSEMIGROUP, inner.value, "group", inner.certificate.parts))
    if gd is None:
        gd = greens_mod.greens_classes(sg)

    for j in greens_mod.maximal_j_classes(sg, gd):
        generated = closure(sg, gd.j_classes[j])
        if generated != sg.carrier():
            rest = greens_mod.complement_subsemigroup(sg, gd, j)
            return _checked(sg, flags, _finite(
                Kind.SUBSEMIGROUP, 2, "max_class_not_generating",
                [rest, generated]))

    if len(gd.j_classes) == 1:
        rs = rees_mod.decompose_simple(sg)
        parts = rees_mod.cover_simple(rs)
        return _checked(sg, flags, _finite(
            Kind.SUBSEMIGROUP, 2, "simple_not_group", parts))

    maximal = greens_mod.maximal_j_classes(sg, gd)
    assert len(maximal) == 1, "a generating maximal J-class is unique"
    pf = greens_mod.principal_factor(sg, gd, maximal[0])
    assert pf.tag == "zero_simple", "null factor implies monogenic, handled above"
    rs = rees_mod.decompose_zero_simple(pf.factor)
    factor_parts = rees_mod.cover_zero_simple(rs)
    parts = greens_mod.lift_cover(pf, factor_parts)
    return _checked(sg, flags, _finite(
        Kind.SUBSEMIGROUP, 2, "principal_factor_zero_simple", parts))


def _minimal_index_subgroup(group: FiniteSemigroup) -> tuple[int, frozenset[int]]:
    from .groups import min_proper_index, subgroup_lattice

    index = min_proper_index(group)
    assert isinstance(index, int)
    lattice = subgroup_lattice(group)
    candidates = [
        h for h in lattice.subgroups
        if len(h) < group.n and group.n // len(h) == index
    ]
    return index, min(candidates, key=sorted)


def sigma_i(sg: FiniteSemigroup, flags: Optional[StructureFlags] = None,
            gd: Optional[greens_mod.GreensData] = None) -> CoveringResult:
    """Covering number with respect to inverse subsemigroups, with certificate."""
    from .groups import sigma_g

    if flags is None:
        flags = structure_flags(sg)
    if not flags.is_inverse or flags.inverse_map is None:
        raise NotInverseError("carrier is not an inverse semigroup")

    if flags.is_group:
        inner = sigma_g(sg)
        if inner.is_finite:
            assert inner.certificate is not None
            return _checked(sg, flags, _finite(
                Kind.INVERSE_SUB, inner.value, "group", inner.certificate.parts))
        assert inner.witness is not None
        return _infinite("group", inner.witness)

    if gd is None:
        gd = greens_mod.greens_classes(sg)

    for j in greens_mod.maximal_j_classes(sg, gd):
        generated = closure(sg, gd.j_classes[j])
        if generated != sg.carrier():
            rest = greens_mod.complement_subsemigroup(sg, gd, j)
            return _checked(sg, flags, _finite(
                Kind.INVERSE_SUB, 2, "max_class_not_generating",
                [rest, generated]))

    assert len(gd.j_classes) > 1, "a single-class inverse semigroup is a group"
    maximal = greens_mod.maximal_j_classes(sg, gd)
    assert len(maximal) == 1
    pf = greens_mod.principal_factor(sg, gd, maximal[0])
    assert pf.tag == "zero_simple"
    rs = rees_mod.normalize_inverse(rees_mod.decompose_zero_simple(pf.factor))
    assert rs.k_size >= 2, "a 1x1 inverse factor would make the class non-generating"

    if rs.k_size == 2 and rs.group.n == 1:
        off_diagonal_factor = rs.iso_to_parent[rs.dense(0, 0, 1)]
        witness = pf.phi.index(off_diagonal_factor)
        generated = closure_with_inverses(sg, flags.inverse_map, (witness,))
        assert generated == sg.carrier(), "Brandt witness must generate"
        return _infinite("brandt_trivial_group", witness)

    if rs.k_size == 2:
        index, subgroup = _minimal_index_subgroup(rs.group)
        factor_parts = rees_mod.inverse_cover_k2(rs, subgroup)
        parts = greens_mod.lift_cover(pf, factor_parts)
        return _checked(sg, flags, _finite(
            Kind.INVERSE_SUB, index + 1, "brandt_k2_min_index", parts))

    factor_parts = rees_mod.inverse_cover_k_ge3(rs)
    parts = greens_mod.lift_cover(pf, factor_parts)
    return _checked(sg, flags, _finite(
        Kind.INVERSE_SUB, 3, "brandt_k_ge3", parts))


def sigma_g_general(sg: FiniteSemigroup, flags: Optional[StructureFlags] = None,
                    gd: Optional[greens_mod.GreensData] = None) -> CoveringResult:
    """Covering number with respect to subgroups for any finite semigroup.

    Groups delegate to the subgroup-lattice engine; otherwise the maximal
    subgroups are exactly the group H-classes of idempotents, so the cover is
    an exact set cover over those, infinite when some element lies in none.
    """
    from . import setcover
    from .groups import sigma_g

    if flags is None:
        flags = structure_flags(sg)
    if flags.is_group:
        return sigma_g(sg)
    if gd is None:
        gd = greens_mod.greens_classes(sg)
    t = sg.table
    h_classes = []
    for e in sorted(flags.idempotents):
        h = gd.r_classes[gd.r_class_of[e]] & gd.l_classes[gd.l_class_of[e]]
        assert _part_is_group(sg, h) is None, "H-class of an idempotent is a group"
        h_classes.append(h)
    covered = frozenset().union(*h_classes) if h_classes else frozenset()
    if covered != sg.carrier():
        witness = min(sg.carrier() - covered)
        return _infinite("element_in_no_subgroup", witness)
    masks = [sum(1 << x for x in h) for h in h_classes]
    chosen = setcover.minimum_cover((1 << sg.n) - 1, masks)
    assert chosen is not None
    parts = [h_classes[i] for i in chosen]
    return _checked(sg, flags, _finite(
        Kind.SUBGROUP, len(chosen), "maximal_subgroup_cover", parts))


@dataclass(frozen=True)
class MonoidClassification:
    sigma_s: CoveringResult
    sigma_m: CoveringResult
    sigma_m_star: CoveringResult


def _rekind(result: CoveringResult, kind: Kind, sg: FiniteSemigroup,
            flags: StructureFlags) -> CoveringResult:
    if not result.is_finite:
        return result
    assert result.certificate is not None
    return _checked(sg, flags, CoveringResult(
        result.value, result.case_tag,
        Cover(kind, result.certificate.parts),
        result.witness, result.provenance))


def classify_monoid(sg: FiniteSemigroup,
                    flags: Optional[StructureFlags] = None) -> MonoidClassification:
    """sigma_s, sigma_m, and sigma_m* of a monoid, each with a certificate."""
    from .groups import sigma_g

    if flags is None:
        flags = structure_flags(sg)
    if flags.identity is None:
        raise NoIdentityError("carrier has no identity")
    one = flags.identity
    gd = greens_mod.greens_classes(sg)
    r_one = gd.r_classes[gd.r_class_of[one]]
    carrier = sg.carrier()

    if r_one == carrier:
        # M is a group; all three numbers coincide with sigma_g
        inner = sigma_g(sg)
        if inner.is_finite:
            assert inner.certificate is not None
            parts = inner.certificate.parts
            return MonoidClassification(
                _checked(sg, flags, _finite(Kind.SUBSEMIGROUP, inner.value, "group", parts)),
                _checked(sg, flags, _finite(Kind.SUBMONOID, inner.value, "group", parts)),
                _checked(sg, flags, _finite(Kind.MONOIDAL_SUB, inner.value, "group", parts)),
            )
        assert inner.witness is not None
        inf = _infinite("group", inner.witness)
        return MonoidClassification(inf, inf, inf)

    if r_one != frozenset((one,)):
        rest = carrier - r_one
        rest_with_one = rest | {one}
        s_res = _finite(Kind.SUBSEMIGROUP, 2, "identity_class_nontrivial",
                        [r_one, rest])
        m_res = _finite(Kind.SUBMONOID, 2, "identity_class_nontrivial",
                        [r_one, rest_with_one])
        star_res = _finite(Kind.MONOIDAL_SUB, 2, "identity_class_nontrivial",
                           [r_one, rest_with_one])
        return MonoidClassification(
            _checked(sg, flags, s_res),
            _checked(sg, flags, m_res),
            _checked(sg, flags, star_res),
        )

    # R_1 = {1}: M is a semigroup with an identity adjoined
    inner_elements = carrier - {one}
    inner_sg, new_to_old = restrict(sg, inner_elements)
    inner_flags = structure_flags(inner_sg)
    inner = sigma_s(inner_sg, inner_flags)

    s_res = _checked(sg, flags, _finite(
        Kind.SUBSEMIGROUP, 2, "adjoined_identity",
        [frozenset(inner_elements), frozenset((one,))]))

    if inner.is_finite:
        assert inner.certificate is not None
        lifted = [
            frozenset(new_to_old[x] for x in part) | {one}
            for part in inner.certificate.parts
        ]
        m_res = _checked(sg, flags, _finite(
            Kind.SUBMONOID, inner.value, "adjoined_identity", lifted))
    else:
        assert inner.witness is not None
        m_res = _infinite("adjoined_identity", new_to_old[inner.witness])

    shortcut = inner_flags.is_group and (
        not inner.is_finite or inner.value > 2
    )
    if shortcut:
        star_res = _checked(sg, flags, _finite(
            Kind.MONOIDAL_SUB, 2, "adjoined_identity_group_shortcut",
            [frozenset(inner_elements), frozenset((one,))]))
    elif m_res.is_finite:
        assert m_res.certificate is not None
        star_res = _checked(sg, flags, _finite(
            Kind.MONOIDAL_SUB, m_res.value, "adjoined_identity",
            m_res.certificate.parts))
    else:
        star_res = m_res
    return MonoidClassification(s_res, m_res, star_res)
