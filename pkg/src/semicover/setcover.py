"""Exact minimum set cover over bitmask parts, shared by the group engine and
the oracle.  Deterministic: among minimum covers, returns the lexicographically
least tuple of part indices."""

from __future__ import annotations

from typing import Optional, Sequence


def minimum_cover(universe: int, parts: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Smallest selection of parts whose union contains the universe.

    Returns None when even the union of all parts misses an element.
    Branch-and-bound on the scarcest uncovered element, pruned with a
    remaining/largest-part bound (non-strict, so ties survive for the
    lexicographic tie-break).
    """
    if universe == 0:
        return ()
    union_all = 0
    for p in parts:
        union_all |= p
    if universe & ~union_all:
        return None

    elems = [i for i in range(universe.bit_length()) if universe >> i & 1]
    coverers = {x: [i for i, p in enumerate(parts) if p >> x & 1] for x in elems}
    largest = max(p.bit_count() for p in parts)
    best: Optional[tuple[int, ...]] = None

    def search(covered: int, chosen: list[int]) -> None:
        nonlocal best
        missing = universe & ~covered
        if missing == 0:
            cand = tuple(sorted(chosen))
            if best is None or len(cand) < len(best) or (
                len(cand) == len(best) and cand < best
            ):
                best = cand
            return
        if best is not None:
            bound = len(chosen) + -(-missing.bit_count() // largest)
            if bound > len(best):
                return
            if len(chosen) >= len(best):
                return
        pivot = min(
            (x for x in elems if missing >> x & 1),
            key=lambda x: len([i for i in coverers[x] if i not in chosen]),
        )
        for i in coverers[pivot]:
            if i in chosen:
                continue
            chosen.append(i)
            search(covered | parts[i], chosen)
            chosen.pop()

    search(0, [])
    return best
