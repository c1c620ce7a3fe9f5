from __future__ import annotations

from pathlib import Path

import pytest

from semicover import FiniteSemigroup, structure_flags, validate_table
from semicover import groups as groups_mod
from semicover import rees as rees_mod
from semicover.corpusgen import write_corpus
from semicover.formats import load


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory) -> Path:
    shipped = Path(__file__).resolve().parent.parent / "corpus"
    if shipped.is_dir() and any(shipped.iterdir()):
        return shipped
    target = tmp_path_factory.mktemp("corpus")
    write_corpus(target)
    return target


@pytest.fixture(scope="session")
def corpus(corpus_dir):
    """name -> (document text, carrier) for every shipped document."""
    out = {}
    for path in sorted(corpus_dir.iterdir()):
        text = path.read_text(encoding="utf-8")
        _, sg = load(text)
        out[path.name] = (text, sg)
    return out


@pytest.fixture(scope="session")
def example1() -> FiniteSemigroup:
    # {a, b, 0} with a*a=a, b*b=b, every other product 0 (a=0, b=1, zero=2)
    return validate_table([[0, 2, 2], [2, 1, 2], [2, 2, 2]])


@pytest.fixture(scope="session")
def brandt_b2() -> FiniteSemigroup:
    sg, _ = rees_mod.build_rees0(
        2, groups_mod.cyclic_group(1), 2, [[0, None], [None, 0]]
    )
    return sg


@pytest.fixture(scope="session")
def left_zero_2() -> FiniteSemigroup:
    return validate_table([[0, 0], [1, 1]])


@pytest.fixture(scope="session")
def catalog():
    return groups_mod.catalog()


def flags_of(sg: FiniteSemigroup):
    return structure_flags(sg)
