"""Independent ground truth: exhaustive proper-subalgebra enumeration and
exact minimum covers, used to validate the theorem engines on small carriers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import setcover
from .core import FiniteSemigroup, StructureFlags
from .covers import INFINITE, Cover, CoveringResult, Kind, verify_cover
from .errors import NoIdentityError, NotInverseError, OrderCapExceededError

DEFAULT_CAP = 16
HARD_CAP = 24
_CHUNK_BITS = 20


@dataclass(frozen=True)
class SubalgebraSet:
    kind: Kind
    members: tuple[frozenset[int], ...]  # canonically sorted: size, then elements


def _check_cap(sg: FiniteSemigroup, cap: int) -> None:
    if cap > HARD_CAP:
        raise ValueError(f"cap {cap} above the hard ceiling {HARD_CAP}")
    if sg.n > cap:
        raise OrderCapExceededError(sg.n, cap)


def _product_closed_masks(sg: FiniteSemigroup) -> list[int]:
    """All product-closed subsets, as bitmasks, by a vectorized pair sweep."""
    n = sg.n
    t = sg.table
    pairs = [
        (a, b, t[a][b])
        for a in range(n)
        for b in range(n)
        if t[a][b] != a and t[a][b] != b  # those pairs can never violate closure
    ]
    total = 1 << n
    chunk = 1 << min(_CHUNK_BITS, n)
    out: list[int] = []
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.uint64)
        ok = np.ones(len(masks), dtype=bool)
        for a, b, c in pairs:
            violating = (masks >> a) & (masks >> b) & ~(masks >> c) & 1
            ok &= violating == 0
        out.extend(int(m) for m in masks[ok])
    return out


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def _has_internal_identity(sg: FiniteSemigroup, elements: list[int]) -> bool:
    t = sg.table
    return any(all(t[e][x] == x == t[x][e] for x in elements) for e in elements)


def _is_group_subset(sg: FiniteSemigroup, elements: list[int]) -> bool:
    t = sg.table
    es = set(elements)
    identity = next(
        (e for e in elements if all(t[e][x] == x == t[x][e] for x in elements)), None
    )
    if identity is None:
        return False
    return all(
        {t[a][b] for b in elements} == es and {t[b][a] for b in elements} == es
        for a in elements
    )


def _member_masks(sg: FiniteSemigroup, flags: StructureFlags, kind: Kind,
                  cap: int) -> list[int]:
    _check_cap(sg, cap)
    full = (1 << sg.n) - 1
    closed = [m for m in _product_closed_masks(sg) if m != 0 and m != full]
    if kind is Kind.SUBSEMIGROUP:
        return closed
    if kind is Kind.INVERSE_SUB:
        if not flags.is_inverse or flags.inverse_map is None:
            raise NotInverseError("carrier is not an inverse semigroup")
        inv = flags.inverse_map
        return [m for m in closed if all(m >> inv[a] & 1 for a in _bits(m))]
    if kind is Kind.SUBMONOID:
        if flags.identity is None:
            raise NoIdentityError("carrier is not a monoid")
        return [m for m in closed if m >> flags.identity & 1]
    if kind is Kind.MONOIDAL_SUB:
        return [m for m in closed if _has_internal_identity(sg, _bits(m))]
    if kind is Kind.SUBGROUP:
        return [m for m in closed if _is_group_subset(sg, _bits(m))]
    raise ValueError(f"unknown kind {kind}")


def _canonical(kind: Kind, masks: list[int]) -> SubalgebraSet:
    members = sorted((frozenset(_bits(m)) for m in set(masks)),
                     key=lambda s: (len(s), sorted(s)))
    return SubalgebraSet(kind, tuple(members))


def all_proper_subalgebras(sg: FiniteSemigroup, flags: StructureFlags, kind: Kind,
                           cap: int = DEFAULT_CAP) -> SubalgebraSet:
    """Every proper nonempty subalgebra of the requested kind."""
    return _canonical(kind, _member_masks(sg, flags, kind, cap))


def _maximal_masks(masks: list[int]) -> list[int]:
    maximal: list[int] = []
    for m in sorted(set(masks), key=lambda x: -x.bit_count()):
        if not any(m & big == m for big in maximal):
            maximal.append(m)
    return maximal


def maximal_proper(sg: FiniteSemigroup, flags: StructureFlags, kind: Kind,
                   cap: int = DEFAULT_CAP) -> SubalgebraSet:
    """Members of all_proper_subalgebras not strictly inside another member."""
    return _canonical(kind, _maximal_masks(_member_masks(sg, flags, kind, cap)))


def minimal_cover_exact(sg: FiniteSemigroup, flags: StructureFlags, kind: Kind,
                        cap: int = DEFAULT_CAP) -> CoveringResult:
    """Exact minimum cover by proper subalgebras of the kind, or Infinite with
    a witness element no proper subalgebra contains."""
    masks = _maximal_masks(_member_masks(sg, flags, kind, cap))
    full = (1 << sg.n) - 1
    union = 0
    for m in masks:
        union |= m
    if union != full:
        witness = _bits(full & ~union)[0]
        return CoveringResult(INFINITE, "oracle_infinite", None, witness, "oracle")
    ordered = sorted(masks, key=lambda m: (m.bit_count(), _bits(m)))
    chosen = setcover.minimum_cover(full, ordered)
    assert chosen is not None
    cover = Cover(kind, tuple(frozenset(_bits(ordered[i])) for i in chosen))
    verdict = verify_cover(sg, flags, cover)
    assert verdict.ok, f"oracle certificate failed verification: {verdict}"
    return CoveringResult(len(chosen), "oracle_exact", cover, None, "oracle")
