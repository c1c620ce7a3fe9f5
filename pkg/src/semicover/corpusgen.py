"""Deterministic desk-scale corpus of small semigroup documents.

Families: cyclic (i,p) fixtures, null semigroups, the three-idempotent
semilattice example, every Rees and Rees 0-matrix build with |G| <= 4 that
fits in order 8, transformation closures on up to 3 points, partial-map
fixtures, catalog groups, and adjoined-identity monoids.  Everything is
emitted through the document grammar so the corpus doubles as parser input.
"""

from __future__ import annotations

import itertools
from pathlib import Path
from typing import Iterator, Optional

from . import formats, groups
from .core import (
    UNDEFINED,
    FiniteSemigroup,
    adjoin_fresh_identity,
    build_cyclic,
    build_null,
    transformation_closure,
)

MAX_ORDER = 8

_REES_GROUPS: list[tuple[str, Optional[int], FiniteSemigroup]] = [
    ("c1", 1, groups.cyclic_group(1)),
    ("c2", 2, groups.cyclic_group(2)),
    ("c3", 3, groups.cyclic_group(3)),
    ("c4", 4, groups.cyclic_group(4)),
    ("klein4", None, groups.klein_four()),  # inline table; not cyclic
]


def _cayley_doc(sg: FiniteSemigroup) -> formats.InputDocument:
    return formats.InputDocument("cayley", grid=sg.table)


def _entry_code(v: Optional[int]) -> str:
    return "z" if v is None else str(v)


def _rees_docs(tag: str) -> Iterator[tuple[str, formats.InputDocument]]:
    zero_slot = tag == "rees0"
    budget = MAX_ORDER - (1 if zero_slot else 0)
    for gname, cyclic_order, group in _REES_GROUPS:
        for k in range(1, budget + 1):
            for l in range(1, budget + 1):
                if k * l * group.n > budget:
                    continue
                alphabet: list[Optional[int]] = list(range(group.n))
                if zero_slot:
                    alphabet = [None] + alphabet
                for flat in itertools.product(alphabet, repeat=k * l):
                    matrix = tuple(
                        tuple(flat[row * k: (row + 1) * k]) for row in range(l)
                    )
                    if zero_slot:
                        if any(all(v is None for v in row) for row in matrix):
                            continue
                        if any(
                            all(matrix[row][col] is None for row in range(l))
                            for col in range(k)
                        ):
                            continue
                    doc = formats.InputDocument(
                        tag,
                        k_size=k,
                        lambda_size=l,
                        group_kind="cyclic" if cyclic_order else "cayley",
                        group_order=cyclic_order or group.n,
                        group_grid=None if cyclic_order else group.table,
                        matrix=matrix,
                    )
                    code = "".join(_entry_code(v) for v in flat)
                    yield f"{tag}_{gname}_k{k}_l{l}_m{code}.sg", doc


def _total_maps(m: int) -> list[tuple[int, ...]]:
    return [f for f in itertools.product(range(m), repeat=m)]


def _map_code(f: tuple[int, ...]) -> str:
    return "".join("x" if v == UNDEFINED else str(v) for v in f)


def _partial_maps(m: int) -> list[tuple[int, ...]]:
    return [f for f in itertools.product(range(UNDEFINED, m), repeat=m)]


def _is_injective(f: tuple[int, ...]) -> bool:
    defined = [v for v in f if v != UNDEFINED]
    return len(defined) == len(set(defined))


def _transformation_docs() -> Iterator[tuple[str, formats.InputDocument]]:
    seen_tables: set[tuple[tuple[int, ...], ...]] = set()

    def emit(m: int, gens: tuple[tuple[int, ...], ...]) -> Optional[tuple[str, formats.InputDocument]]:
        sg, _ = transformation_closure(m, gens)
        if sg.n > MAX_ORDER or sg.table in seen_tables:
            return None
        seen_tables.add(sg.table)
        code = "_".join(_map_code(g) for g in gens)
        return f"tr{m}_{code}.sg", formats.InputDocument(
            "transformations", points=m, generators=gens
        )

    for m in (1, 2, 3):
        for f in _total_maps(m):
            doc = emit(m, (f,))
            if doc:
                yield doc
    for m in (2, 3):
        maps = _total_maps(m)
        for f, g in itertools.combinations(maps, 2):
            doc = emit(m, (f, g))
            if doc:
                yield doc
    # partial maps, composed as partial functions
    for m in (1, 2, 3):
        for f in _partial_maps(m):
            doc = emit(m, (f,))
            if doc:
                yield doc
    for f, g in itertools.combinations(_partial_maps(2), 2):
        doc = emit(2, (f, g))
        if doc:
            yield doc
    injective = [f for f in _partial_maps(3) if _is_injective(f)]
    for f, g in itertools.combinations(injective, 2):
        doc = emit(3, (f, g))
        if doc:
            yield doc
    # a generating set of the symmetric inverse monoid I_2 and friends
    partial_fixtures: list[tuple[int, tuple[tuple[int, ...], ...]]] = [
        (2, ((1, 0), (0, UNDEFINED))),
        (2, ((0, 1), (1, 0), (0, UNDEFINED), (UNDEFINED, UNDEFINED))),
        (3, ((1, 0, UNDEFINED), (UNDEFINED, 1, 2))),
    ]
    for m, gens in partial_fixtures:
        doc = emit(m, gens)
        if doc:
            yield doc


def _direct_product(a: FiniteSemigroup, b: FiniteSemigroup) -> FiniteSemigroup:
    n = a.n * b.n
    rows = [
        [
            (a.table[x1][x2] * b.n + b.table[y1][y2])
            for x2 in range(a.n) for y2 in range(b.n)
        ]
        for x1 in range(a.n) for y1 in range(b.n)
    ]
    return FiniteSemigroup(n, tuple(tuple(r) for r in rows))


def _product_docs() -> Iterator[tuple[str, formats.InputDocument]]:
    bases = [
        ("c2", groups.cyclic_group(2)),
        ("sl2", adjoin_fresh_identity(groups.cyclic_group(1))),  # 2-chain semilattice
        ("lz2", formats.build_semigroup(formats.InputDocument("cayley", grid=((0, 0), (1, 1))))),
        ("rz2", formats.build_semigroup(formats.InputDocument("cayley", grid=((0, 1), (0, 1))))),
        ("n2", build_null(2)),
        ("cy21", build_cyclic(2, 1)),
        ("c3", groups.cyclic_group(3)),
        ("n3", build_null(3)),
        ("cy22", build_cyclic(2, 2)),
    ]
    for (name_a, a), (name_b, b) in itertools.combinations_with_replacement(bases, 2):
        if a.n * b.n <= MAX_ORDER:
            yield f"prod_{name_a}_{name_b}.sg", _cayley_doc(_direct_product(a, b))


def _monoid_docs() -> Iterator[tuple[str, formats.InputDocument]]:
    bases = [
        ("klein4", groups.klein_four()),
        ("c2", groups.cyclic_group(2)),
        ("c3", groups.cyclic_group(3)),
        ("c1", groups.cyclic_group(1)),
        ("cyc_i2_p1", build_cyclic(2, 1)),
        ("cyc_i2_p2", build_cyclic(2, 2)),
        ("cyc_i3_p1", build_cyclic(3, 1)),
        ("null2", build_null(2)),
        ("null3", build_null(3)),
    ]
    for name, base in bases:
        monoid = adjoin_fresh_identity(base)
        if monoid.n <= MAX_ORDER:
            yield f"monoid_{name}_plus1.sg", _cayley_doc(monoid)


def corpus_documents() -> list[tuple[str, str]]:
    """All (filename, document text) pairs, sorted by filename."""
    out: dict[str, formats.InputDocument] = {}

    for index in range(1, MAX_ORDER):
        for period in range(1, MAX_ORDER + 1 - index):
            sg = build_cyclic(index, period)
            out[f"cyclic_i{index}_p{period}.sg"] = _cayley_doc(sg)

    for n in range(1, MAX_ORDER + 1):
        out[f"null_{n}.sg"] = _cayley_doc(build_null(n))

    out["example1.sg"] = formats.InputDocument(
        "cayley", grid=((0, 2, 2), (2, 1, 2), (2, 2, 2))
    )

    for name, doc in _rees_docs("rees"):
        out[name] = doc
    for name, doc in _rees_docs("rees0"):
        out[name] = doc
    for name, doc in _transformation_docs():
        out[name] = doc

    for gname in ("c2", "c3", "c4", "c5", "c6", "c7", "c8", "klein4", "s3"):
        out[f"group_{gname}.sg"] = formats.InputDocument("group_ref", name=gname)

    for name, doc in _monoid_docs():
        out[name] = doc
    for name, doc in _product_docs():
        out[name] = doc

    return sorted((name, formats.emit(doc)) for name, doc in out.items())


def write_corpus(directory: Path) -> int:
    directory.mkdir(parents=True, exist_ok=True)
    documents = corpus_documents()
    for name, text in documents:
        (directory / name).write_text(text, encoding="utf-8")
    return len(documents)
