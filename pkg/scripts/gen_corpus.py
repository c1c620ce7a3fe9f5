#!/usr/bin/env python3
"""Regenerate the shipped corpus/ directory (deterministic)."""

import sys
from pathlib import Path

from semicover.corpusgen import write_corpus


def main() -> int:
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent.parent / "corpus"
    count = write_corpus(target)
    print(f"wrote {count} documents to {target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
