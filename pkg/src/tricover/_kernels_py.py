"""Pure-Python branch-and-bound kernels over vertex bitmasks.

Reference implementation for tricover._speedups; the two must explore the
search tree in the same order so that certificates match exactly. Works
for any n via Python integers.
"""

from __future__ import annotations

from typing import Sequence


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _packing_bound(remaining: Sequence[int]) -> int:
    # greedy disjoint-edge count: any cover needs one vertex per packed edge
    used = 0
    count = 0
    for mask in remaining:
        if not (mask & used):
            count += 1
            used |= mask
    return count


def min_cover(edge_masks: Sequence[int], n: int, incumbent: Sequence[int]) -> list[int]:
    """Smallest vertex set hitting every mask.

    `incumbent` must be a valid cover; the search only replaces it with
    strictly smaller ones, branching on the lowest-index uncovered edge,
    vertices ascending.
    """
    best = list(incumbent)
    chosen: list[int] = []

    def rec(remaining: list[int]) -> None:
        nonlocal best
        if not remaining:
            if len(chosen) < len(best):
                best = chosen.copy()
            return
        if len(chosen) + _packing_bound(remaining) >= len(best):
            return
        for v in _bits(remaining[0]):
            vbit = 1 << v
            chosen.append(v)
            rec([mask for mask in remaining if not (mask & vbit)])
            chosen.pop()

    rec(list(edge_masks))
    return best


def max_matching(edge_masks: Sequence[int], n: int, incumbent: Sequence[int]) -> list[int]:
    """Largest set of pairwise disjoint masks, by include/exclude branching.

    Branches on the first edge compatible with the current selection; the
    bound is the count of remaining compatible edges.
    """
    masks = list(edge_masks)
    m = len(masks)
    best = list(incumbent)
    chosen: list[int] = []

    def rec(i: int, used: int) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        avail = 0
        first = -1
        for j in range(i, m):
            if not (masks[j] & used):
                avail += 1
                if first < 0:
                    first = j
        if len(chosen) + avail <= len(best):
            return
        chosen.append(first)
        rec(first + 1, used | masks[first])
        chosen.pop()
        rec(first + 1, used)

    rec(0, 0)
    return best
