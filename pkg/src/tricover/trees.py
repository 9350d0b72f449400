"""Hypertrees: recognition and the matched cover construction.

A hypertree is a connected acyclic 3-uniform hypergraph; equivalently a
connected H with n = 2m + 1. On hypertrees a greedy leaf-plucking pass
produces a matching and a cover of equal size, so both are optimal and
tau = nu holds constructively.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import Hypergraph
from .cycles import is_acyclic


@dataclass(frozen=True)
class Matching:
    """A set of pairwise disjoint edges, by edge index."""

    edge_indices: frozenset[int]

    def is_valid(self, h: Hypergraph) -> bool:
        used: set[int] = set()
        for e in self.edge_indices:
            if not 0 <= e < h.m:
                return False
            if used & set(h.edges[e]):
                return False
            used.update(h.edges[e])
        return True


@dataclass(frozen=True)
class Cover:
    """A set of vertices meeting every edge, by vertex index."""

    vertex_ids: frozenset[int]

    def is_valid(self, h: Hypergraph) -> bool:
        if any(not 0 <= v < h.n for v in self.vertex_ids):
            return False
        return all(set(e) & self.vertex_ids for e in h.edges)


def check_hypertree(h: Hypergraph) -> bool:
    """True when a connected h is acyclic. Raises ValueError if disconnected."""
    if not h.is_connected():
        raise ValueError("hypergraph is not connected")
    return is_acyclic(h)


def _pluck(h: Hypergraph) -> tuple[list[int], list[int]]:
    """Greedy pendant-edge removal on an acyclic h (connected or not).

    Repeatedly takes a deepest edge e (BFS distance in the edge-intersection
    graph from the lowest-index live edge, ties to the lowest edge index),
    matches e, covers the vertex e shares with its BFS parent (the only
    vertex through which live edges can meet e), and deletes every live
    edge containing that vertex. One matched edge per covered vertex, so
    the two certificates have equal size.
    """
    alive = set(range(h.m))
    matching: list[int] = []
    cover: list[int] = []
    while alive:
        root = min(alive)
        depth = {root: 0}
        parent: dict[int, int | None] = {root: None}
        queue = deque([root])
        while queue:
            e = queue.popleft()
            for v in h.edges[e]:
                for f in h.incidence[v]:
                    if f in alive and f not in depth:
                        depth[f] = depth[e] + 1
                        parent[f] = e
                        queue.append(f)
        e = max(depth, key=lambda f: (depth[f], -f))
        p = parent[e]
        if p is None:
            u = h.edges[e][0]
        else:
            u = min(set(h.edges[e]) & set(h.edges[p]))
        matching.append(e)
        cover.append(u)
        for f in h.incidence[u]:
            alive.discard(f)
    return matching, cover


def hypertree_matching(h: Hypergraph) -> Matching:
    """Maximum matching of a hypertree; greedy and exact there."""
    if not check_hypertree(h):
        raise ValueError("hypergraph has a cycle")
    matched, _ = _pluck(h)
    out = Matching(frozenset(matched))
    assert out.is_valid(h)
    return out


def hypertree_cover(h: Hypergraph) -> Cover:
    """Minimum vertex cover of a hypertree.

    Same size as hypertree_matching(h): the plucked matching certifies
    optimality of the cover and vice versa.
    """
    if not check_hypertree(h):
        raise ValueError("hypergraph has a cycle")
    matched, covered = _pluck(h)
    out = Cover(frozenset(covered))
    assert len(covered) == len(matched) and out.is_valid(h)
    return out


def has_perfect_matching(h: Hypergraph, budget: int | None = None) -> bool:
    """True when some matching covers every vertex (3 * nu = n).

    Acyclic inputs use the greedy matching; cyclic ones fall back to the
    exact solver, whose edge budget can be overridden.
    """
    if h.n % 3 != 0:
        return False
    if h.m == 0:
        return h.n == 0
    if is_acyclic(h):
        matched, _ = _pluck(h)
        return 3 * len(matched) == h.n
    from .solver import DEFAULT_BUDGET, exact_nu

    res = exact_nu(h, DEFAULT_BUDGET if budget is None else budget)
    return 3 * res.size == h.n
