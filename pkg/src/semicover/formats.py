"""Input document grammar (cayley / transformations / rees / rees0 /
group_ref), the canonical emitter, carrier digests, and result JSON."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Optional

from . import groups
from .core import UNDEFINED, FiniteSemigroup, transformation_closure, validate_table
from .covers import Cover, CoveringResult, Kind
from .errors import ParseError
from .rees import build_rees, build_rees0

FORMATS = ("cayley", "transformations", "rees", "rees0", "group_ref")

KIND_CODES = {
    "s": Kind.SUBSEMIGROUP,
    "i": Kind.INVERSE_SUB,
    "m": Kind.SUBMONOID,
    "mstar": Kind.MONOIDAL_SUB,
    "g": Kind.SUBGROUP,
}


@dataclass(frozen=True)
class InputDocument:
    format_tag: str
    grid: Optional[tuple[tuple[int, ...], ...]] = None
    points: Optional[int] = None
    generators: Optional[tuple[tuple[int, ...], ...]] = None  # -1 marks undefined
    k_size: Optional[int] = None
    lambda_size: Optional[int] = None
    group_kind: Optional[str] = None       # "cyclic" | "cayley"
    group_order: Optional[int] = None
    group_grid: Optional[tuple[tuple[int, ...], ...]] = None
    matrix: Optional[tuple[tuple[Optional[int], ...], ...]] = None
    name: Optional[str] = None


class _Lines:
    """Significant lines of a document with positions for error reporting."""

    def __init__(self, text: str):
        self.rows: list[tuple[int, list[str]]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            body = raw.split("#", 1)[0].strip()
            if body:
                self.rows.append((lineno, body.split()))
        self.pos = 0
        self.last_line = self.rows[-1][0] if self.rows else 1

    def next(self, expected: str) -> tuple[int, list[str]]:
        if self.pos >= len(self.rows):
            raise ParseError(self.last_line, 1, expected)
        row = self.rows[self.pos]
        self.pos += 1
        return row

    def done(self) -> bool:
        return self.pos >= len(self.rows)


def _int_token(token: str, lineno: int, col: int, expected: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(lineno, col, expected) from None


def _parse_grid(lines: _Lines, n: int) -> tuple[tuple[int, ...], ...]:
    rows = []
    for _ in range(n):
        lineno, tokens = lines.next(f"a row of {n} integers")
        if len(tokens) != n:
            raise ParseError(lineno, 1, f"{n} integers on the row")
        rows.append(tuple(
            _int_token(tok, lineno, col + 1, "an integer") for col, tok in enumerate(tokens)
        ))
    return tuple(rows)


def parse(text: str) -> InputDocument:
    """Parse one document; see the README for the grammar."""
    lines = _Lines(text)
    lineno, header = lines.next("a format header: " + "|".join(FORMATS))
    if len(header) != 1 or header[0] not in FORMATS:
        raise ParseError(lineno, 1, "a format header: " + "|".join(FORMATS))
    tag = header[0]

    if tag == "cayley":
        lineno, tokens = lines.next("the order n")
        if len(tokens) != 1:
            raise ParseError(lineno, 1, "the order n alone on its line")
        n = _int_token(tokens[0], lineno, 1, "the order n")
        if n < 1:
            raise ParseError(lineno, 1, "an order >= 1")
        return InputDocument("cayley", grid=_parse_grid(lines, n))

    if tag == "transformations":
        lineno, tokens = lines.next("'points m'")
        if len(tokens) != 2 or tokens[0] != "points":
            raise ParseError(lineno, 1, "'points m'")
        m = _int_token(tokens[1], lineno, 2, "the point count m")
        gens = []
        while not lines.done():
            lineno, tokens = lines.next("a generator row")
            if len(tokens) != m:
                raise ParseError(lineno, 1, f"{m} images per generator row")
            row = []
            for col, tok in enumerate(tokens):
                if tok == "-":
                    row.append(UNDEFINED)
                else:
                    row.append(_int_token(tok, lineno, col + 1, "an image or '-'"))
            gens.append(tuple(row))
        if not gens:
            raise ParseError(lines.last_line, 1, "at least one generator row")
        return InputDocument("transformations", points=m, generators=tuple(gens))

    if tag in ("rees", "rees0"):
        lineno, tokens = lines.next("'K k'")
        if len(tokens) != 2 or tokens[0] != "K":
            raise ParseError(lineno, 1, "'K k'")
        k = _int_token(tokens[1], lineno, 2, "the K size")
        lineno, tokens = lines.next("'L l'")
        if len(tokens) != 2 or tokens[0] != "L":
            raise ParseError(lineno, 1, "'L l'")
        l = _int_token(tokens[1], lineno, 2, "the Lambda size")
        lineno, tokens = lines.next("'group cyclic p' or 'group cayley n'")
        if len(tokens) != 3 or tokens[0] != "group" or tokens[1] not in ("cyclic", "cayley"):
            raise ParseError(lineno, 1, "'group cyclic p' or 'group cayley n'")
        group_kind = tokens[1]
        group_order = _int_token(tokens[2], lineno, 3, "the group order")
        group_grid = _parse_grid(lines, group_order) if group_kind == "cayley" else None
        lineno, tokens = lines.next("'matrix'")
        if tokens != ["matrix"]:
            raise ParseError(lineno, 1, "'matrix'")
        rows = []
        for _ in range(l):
            lineno, tokens = lines.next(f"a matrix row of {k} entries")
            if len(tokens) != k:
                raise ParseError(lineno, 1, f"{k} matrix entries on the row")
            row: list[Optional[int]] = []
            for col, tok in enumerate(tokens):
                if tok == ".":
                    if tag == "rees":
                        raise ParseError(lineno, col + 1, "a group element ('.' needs rees0)")
                    row.append(None)
                elif tok == "e":
                    row.append(0)
                else:
                    row.append(_int_token(tok, lineno, col + 1, "a group element, 'e', or '.'"))
            rows.append(tuple(row))
        return InputDocument(tag, k_size=k, lambda_size=l, group_kind=group_kind,
                             group_order=group_order, group_grid=group_grid,
                             matrix=tuple(rows))

    lineno, tokens = lines.next("a catalog group name")
    if len(tokens) != 1:
        raise ParseError(lineno, 1, "a catalog group name")
    name = tokens[0]
    if name not in groups.catalog():
        raise ParseError(lineno, 1, "a known catalog group name")
    return InputDocument("group_ref", name=name)


def _rees_group(doc: InputDocument) -> FiniteSemigroup:
    if doc.group_kind == "cyclic":
        return groups.cyclic_group(doc.group_order)
    assert doc.group_grid is not None
    return validate_table(doc.group_grid)


def build_semigroup(doc: InputDocument) -> FiniteSemigroup:
    """Run the single constructor a document describes; associativity is
    always re-validated."""
    from .core import find_identity

    if doc.format_tag == "cayley":
        assert doc.grid is not None
        return validate_table(doc.grid)
    if doc.format_tag == "transformations":
        assert doc.points is not None and doc.generators is not None
        sg, _ = transformation_closure(doc.points, doc.generators)
        return validate_table(sg.table, sg.labels)
    if doc.format_tag in ("rees", "rees0"):
        assert doc.matrix is not None
        group = _rees_group(doc)
        # 'e' is an alias for index 0, so the group identity must sit there
        if find_identity(group) != 0:
            raise ParseError(1, 1, "a group table with its identity at index 0")
        builder = build_rees if doc.format_tag == "rees" else build_rees0
        sg, _ = builder(doc.k_size, group, doc.lambda_size, doc.matrix)
        return validate_table(sg.table, sg.labels)
    assert doc.name is not None
    sg = groups.catalog()[doc.name]
    return validate_table(sg.table, sg.labels)


def load(text: str) -> tuple[InputDocument, FiniteSemigroup]:
    doc = parse(text)
    return doc, build_semigroup(doc)


def emit(doc: InputDocument) -> str:
    """Canonical text for a document; parse(emit(parse(x))) == parse(x)."""
    out: list[str] = [doc.format_tag]
    if doc.format_tag == "cayley":
        assert doc.grid is not None
        out.append(str(len(doc.grid)))
        out.extend(" ".join(str(v) for v in row) for row in doc.grid)
    elif doc.format_tag == "transformations":
        out.append(f"points {doc.points}")
        assert doc.generators is not None
        out.extend(
            " ".join("-" if v == UNDEFINED else str(v) for v in gen)
            for gen in doc.generators
        )
    elif doc.format_tag in ("rees", "rees0"):
        out.append(f"K {doc.k_size}")
        out.append(f"L {doc.lambda_size}")
        if doc.group_kind == "cyclic":
            out.append(f"group cyclic {doc.group_order}")
        else:
            out.append(f"group cayley {doc.group_order}")
            assert doc.group_grid is not None
            out.extend(" ".join(str(v) for v in row) for row in doc.group_grid)
        out.append("matrix")
        assert doc.matrix is not None
        for row in doc.matrix:
            out.append(" ".join(
                "." if v is None else ("e" if v == 0 else str(v)) for v in row
            ))
    else:
        out.append(str(doc.name))
    return "\n".join(out) + "\n"


def carrier_digest(sg: FiniteSemigroup) -> str:
    payload = f"{sg.n};" + ";".join(" ".join(map(str, row)) for row in sg.table)
    return f"{sg.n}-{hashlib.sha256(payload.encode()).hexdigest()[:16]}"


def result_to_json(result: CoveringResult, digest: str) -> dict:
    """Schema-stable keys: value, case, parts?, witness?, provenance, carrier_digest."""
    doc: dict = {
        "value": result.value if isinstance(result.value, int) else "infinite",
        "case": result.case_tag,
    }
    if result.certificate is not None:
        doc["parts"] = [sorted(part) for part in result.certificate.parts]
    if result.witness is not None:
        doc["witness"] = result.witness
    doc["provenance"] = result.provenance
    doc["carrier_digest"] = digest
    return doc


def cover_from_json(doc: dict, kind: Kind) -> Optional[Cover]:
    parts = doc.get("parts")
    if parts is None:
        return None
    return Cover(kind, tuple(frozenset(int(x) for x in part) for part in parts))
