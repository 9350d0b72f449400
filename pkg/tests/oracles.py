"""Brute-force oracles, independent of the library's solver and cycle code.

Kept deliberately naive: subset enumeration for covers/matchings and
exhaustive alternating-walk search for cycles. Only usable on tiny
instances, which is the point.
"""

from __future__ import annotations

from itertools import combinations

from tricover import Hypergraph


def brute_tau(h: Hypergraph) -> int:
    """Minimum cover size by subset enumeration (fine for n <= 9 or so)."""
    for k in range(h.n + 1):
        for sub in combinations(range(h.n), k):
            s = set(sub)
            if all(s & set(e) for e in h.edges):
                return k
    raise AssertionError("unreachable: the full vertex set is a cover")


def brute_nu(h: Hypergraph) -> int:
    """Maximum matching size by subset enumeration over edges."""
    best = 0
    for k in range(h.m, 0, -1):
        if k <= best:
            break
        for sub in combinations(range(h.m), k):
            used: set[int] = set()
            ok = True
            for e in sub:
                if used & set(h.edges[e]):
                    ok = False
                    break
                used.update(h.edges[e])
            if ok:
                best = k
                break
    return best


def _normalize_cycle(joins: tuple[int, ...], edges: tuple[int, ...]):
    """Rotation/reflection-invariant form of an alternating cycle."""
    k = len(edges)
    forms = []
    seqs = [
        (list(joins), list(edges)),
        ([joins[0]] + list(joins[1:])[::-1], list(edges)[::-1]),
    ]
    for js, es in seqs:
        for r in range(k):
            forms.append((tuple(js[r:] + js[:r]), tuple(es[r:] + es[:r])))
    return min(forms)


def all_berge_cycles(h: Hypergraph) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every Berge cycle of h, as normalized (joins, edges) pairs.

    Exhaustive DFS over alternating walks with distinct joins and edges;
    exponential, only for tiny instances.
    """
    found: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()

    def extend(joins: list[int], edges: list[int]) -> None:
        v = joins[-1]
        for e in h.incidence[v]:
            if e in edges:
                continue
            # close the cycle?
            if len(joins) >= 2 and joins[0] in h.edges[e]:
                found.add(_normalize_cycle(tuple(joins), tuple(edges + [e])))
            for w in h.edges[e]:
                if w != v and w not in joins:
                    extend(joins + [w], edges + [e])

    for v in range(h.n):
        extend([v], [])
    return found


def brute_acyclic(h: Hypergraph) -> bool:
    return not all_berge_cycles(h)


def brute_has_intersecting_pair(h: Hypergraph) -> bool:
    """Whether two distinct cycles share any vertex (non-joins included)."""
    cycles = list(all_berge_cycles(h))
    vsets = [
        {v for e in edges for v in h.edges[e]} for _, edges in cycles
    ]
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if vsets[i] & vsets[j]:
                return True
    return False


def brute_canonical_form(h: Hypergraph) -> tuple:
    """Minimum sorted edge list over every relabeling (n <= 8 only)."""
    from itertools import permutations

    best: tuple | None = None
    for p in permutations(range(h.n)):
        form = tuple(sorted(tuple(sorted(p[v] for v in e)) for e in h.edges))
        if best is None or form < best:
            best = form
    return best if best is not None else ()
