"""Berge cycles: detection, minimality, splitting, and the cycle tree.

A Berge cycle of length k >= 2 is an alternating sequence
v1 e1 v2 e2 ... vk ek (v1) with distinct join vertices v1..vk, distinct
edges e1..ek, and {vi, v(i+1 mod k)} a subset of ei. Cycles of H correspond
to cycles of the bipartite vertex-edge incidence graph, which is where all
the searching below happens: nodes 0..n-1 are vertices, nodes n..n+m-1 are
edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Hypergraph, components, delete_vertices


@dataclass(frozen=True)
class BergeCycle:
    """A cycle as parallel tuples: joins[i] and joins[i+1] both lie in edges[i]."""

    joins: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def vertex_set(self, h: Hypergraph) -> frozenset[int]:
        """All vertices of the cycle's edges, non-joins included."""
        return frozenset(v for e in self.edges for v in h.edges[e])

    def validate(self, h: Hypergraph) -> None:
        """Raise ValueError unless this is a cycle of h."""
        k = len(self.edges)
        if k < 2 or len(self.joins) != k:
            raise ValueError("cycle needs k >= 2 joins and as many edges")
        if len(set(self.joins)) != k or len(set(self.edges)) != k:
            raise ValueError("joins and edges must be distinct")
        for v in self.joins:
            if not 0 <= v < h.n:
                raise ValueError(f"unknown vertex index {v}")
        for e in self.edges:
            if not 0 <= e < h.m:
                raise ValueError(f"unknown edge index {e}")
        for i in range(k):
            a, b = self.joins[i], self.joins[(i + 1) % k]
            if a not in h.edges[self.edges[i]] or b not in h.edges[self.edges[i]]:
                raise ValueError(
                    f"edge {self.edges[i]} does not link joins {a} and {b}"
                )

    def to_json_dict(self, h: Hypergraph) -> dict:
        return {
            "joins": [h.labels[v] for v in self.joins],
            "edges": list(self.edges),
            "minimal": is_minimal_cycle(self, h),
        }


@dataclass(frozen=True)
class CycleTree:
    """Decomposition of a connected H whose cycles are pairwise vertex-disjoint.

    `cycles` are the cycle nodes, `trees` the edge-index sets of the acyclic
    pieces, `links` the (cycle index, tree index) pairs that share a vertex.
    Every edge of H lies in exactly one node and the link graph is a tree.
    """

    cycles: tuple[BergeCycle, ...]
    trees: tuple[frozenset[int], ...]
    links: tuple[tuple[int, int], ...]


# -- incidence-graph plumbing ------------------------------------------------


def _adjacency(h: Hypergraph) -> list[list[int]]:
    n = h.n
    adj: list[list[int]] = [[] for _ in range(n + h.m)]
    for i, e in enumerate(h.edges):
        for v in e:
            adj[v].append(n + i)
            adj[n + i].append(v)
    return adj


def _blocks(adj: Sequence[Sequence[int]]) -> list[list[tuple[int, int]]]:
    """Biconnected components as edge lists (iterative Hopcroft-Tarjan)."""
    size = len(adj)
    disc = [0] * size
    low = [0] * size
    timer = 1
    blocks: list[list[tuple[int, int]]] = []
    estack: list[tuple[int, int]] = []
    for root in range(size):
        if disc[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int, Iterable[int]]] = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            pushed = False
            for w in it:  # type: ignore[union-attr]
                if w == parent:
                    continue
                if not disc[w]:
                    estack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(adj[w])))
                    pushed = True
                    break
                if disc[w] < disc[u]:
                    estack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            if pushed:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            if low[u] < low[p]:
                low[p] = low[u]
            if low[u] >= disc[p]:
                block = []
                while True:
                    be = estack.pop()
                    block.append(be)
                    if be == (p, u):
                        break
                blocks.append(block)
    return blocks


def _block_adj(block: Sequence[tuple[int, int]]) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {}
    for u, w in block:
        adj.setdefault(u, []).append(w)
        adj.setdefault(w, []).append(u)
    for u in adj:
        adj[u].sort()
    return adj


def _cyclic_blocks(h: Hypergraph) -> list[dict[int, list[int]]]:
    """Adjacency of each block that contains a cycle, ordered by smallest node."""
    out = [_block_adj(b) for b in _blocks(_adjacency(h)) if len(b) >= 2]
    out.sort(key=lambda adj: min(adj))
    return out


def _walk_simple_cycle(adj: dict[int, list[int]]) -> list[int]:
    # every node has degree 2: follow smallest-neighbor-first from the smallest node
    start = min(adj)
    order = [start]
    prev, cur = -1, start
    while True:
        nxt = next(x for x in adj[cur] if x != prev)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def _dfs_cycle(adj: dict[int, list[int]]) -> list[int]:
    """Some simple cycle of a cyclic block, as a node list."""
    start = min(adj)
    visited = {start}
    onpath = {start}
    path = [start]
    stack: list[tuple[int, int, Iterable[int]]] = [(start, -1, iter(adj[start]))]
    while stack:
        u, parent, it = stack[-1]
        moved = False
        for w in it:  # type: ignore[union-attr]
            if w == parent:
                continue
            if w in onpath:
                return path[path.index(w):]
            if w in visited:
                continue
            visited.add(w)
            onpath.add(w)
            path.append(w)
            stack.append((w, u, iter(adj[w])))
            moved = True
            break
        if not moved:
            stack.pop()
            onpath.discard(u)
            path.pop()
    raise AssertionError("cyclic block without a cycle")


def _find_ear(adj: dict[int, list[int]], cyc: list[int]) -> list[int]:
    """A path between two distinct cycle nodes, internally disjoint from the cycle.

    Exists in every block that is more than a bare cycle: label each node by
    the cycle node its BFS tree hangs from; some non-tree, non-cycle edge
    joins two labels.
    """
    k = len(cyc)
    cyc_edges = {frozenset((cyc[i], cyc[(i + 1) % k])) for i in range(k)}
    label = {c: c for c in cyc}
    parent: dict[int, int] = {}
    queue = deque(sorted(cyc))
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if frozenset((u, w)) in cyc_edges or w in label:
                continue
            label[w] = label[u]
            parent[w] = u
            queue.append(w)
    for u in sorted(adj):
        for w in adj[u]:
            if u >= w or frozenset((u, w)) in cyc_edges:
                continue
            if parent.get(w) == u or parent.get(u) == w:
                continue
            if label[u] != label[w]:
                left = [u]
                while left[-1] in parent:
                    left.append(parent[left[-1]])
                right = [w]
                while right[-1] in parent:
                    right.append(parent[right[-1]])
                return list(reversed(left)) + right
    raise AssertionError("block exceeds a cycle but has no ear")


def _nodes_to_cycle(nodes: Sequence[int], n: int) -> BergeCycle:
    """Convert an incidence-graph cycle (alternating node list) to a BergeCycle."""
    k2 = len(nodes)
    start = next(i for i, x in enumerate(nodes) if x < n)
    rot = [nodes[(start + i) % k2] for i in range(k2)]
    joins = tuple(rot[0::2])
    edges = tuple(x - n for x in rot[1::2])
    return _normalize(joins, edges)


def _normalize(joins: Sequence[int], edges: Sequence[int]) -> BergeCycle:
    """Canonical rotation/orientation: lexicographically smallest (joins, edges)."""
    k = len(edges)
    j2 = [joins[0]] + list(joins[1:])[::-1]
    e2 = list(edges)[::-1]
    best: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    for js, es in ((list(joins), list(edges)), (j2, e2)):
        for r in range(k):
            cand = (tuple(js[r:] + js[:r]), tuple(es[r:] + es[:r]))
            if best is None or cand < best:
                best = cand
    assert best is not None
    return BergeCycle(*best)


# -- public operations ---------------------------------------------------------


def find_cycle(h: Hypergraph) -> BergeCycle | None:
    """Some Berge cycle of h, or None. Deterministic for a given h."""
    for adj in _cyclic_blocks(h):
        deg2 = all(len(v) == 2 for v in adj.values())
        nodes = _walk_simple_cycle(adj) if deg2 else _dfs_cycle(adj)
        cyc = _nodes_to_cycle(nodes, h.n)
        cyc.validate(h)
        return cyc
    return None


def is_acyclic(h: Hypergraph) -> bool:
    """True when h has no Berge cycle.

    Equivalent formulations: the incidence graph is a forest; every
    connected component satisfies n_c = 2 * m_c + 1.
    """
    return 3 * h.m == h.n + h.m - h.component_count()


def is_minimal_cycle(c: BergeCycle, h: Hypergraph) -> bool:
    """True when all non-adjacent edge pairs of the cycle are disjoint.

    Positions i < j are non-adjacent when 2 <= j - i <= k - 2, i.e. the
    edges are not consecutive around the cycle.
    """
    c.validate(h)
    k = len(c.edges)
    sets = [set(h.edges[e]) for e in c.edges]
    for i in range(k - 2):
        for j in range(i + 2, k):
            if j - i > k - 2:
                continue
            if sets[i] & sets[j]:
                return False
    return True


def _arc(seq: Sequence[int], i: int, j: int) -> list[int]:
    """Cyclic slice seq[i..j] inclusive."""
    k = len(seq)
    out = [seq[i % k]]
    while i % k != j % k:
        i += 1
        out.append(seq[i % k])
    return out


def split_cycle(c: BergeCycle, h: Hypergraph) -> tuple[BergeCycle, BergeCycle]:
    """Split a non-minimal cycle at a vertex shared by two non-adjacent edges.

    Returns two strictly shorter cycles that share that vertex; their
    lengths sum to len(c) + 1 when the witness is a join of c and to
    len(c) + 2 otherwise.
    """
    c.validate(h)
    k = len(c.edges)
    sets = [set(h.edges[e]) for e in c.edges]
    found = None
    for i in range(k - 2):
        for j in range(i + 2, k):
            if j - i > k - 2:
                continue
            common = sets[i] & sets[j]
            if common:
                found = (i, j, min(common))
                break
        if found:
            break
    if found is None:
        raise ValueError("cycle is minimal, nothing to split")
    a, b, v = found
    joins, edges = list(c.joins), list(c.edges)
    if v in joins:
        t = joins.index(v)
        # pick the witness edge that is not adjacent to position t
        chord = next(cc for cc in (b, a) if t != cc and t != (cc + 1) % k)
        first = BergeCycle(
            tuple(_arc(joins, t, chord)), tuple(_arc(edges, t, chord))
        )
        second = BergeCycle(
            tuple([v] + _arc(joins, chord + 1, t - 1)),
            tuple(_arc(edges, chord, t - 1)),
        )
    else:
        first = BergeCycle(
            tuple([v] + _arc(joins, a + 1, b)), tuple(_arc(edges, a, b))
        )
        second = BergeCycle(
            tuple([v] + _arc(joins, b + 1, a)), tuple(_arc(edges, b, a))
        )
    out = (_normalize(first.joins, first.edges), _normalize(second.joins, second.edges))
    for part in out:
        part.validate(h)
        if len(part) >= k:
            raise AssertionError("split produced a cycle that is not shorter")
    if len(out[0]) + len(out[1]) > k + 2:
        raise AssertionError("split length contract violated")
    if not (out[0].vertex_set(h) & out[1].vertex_set(h)):
        raise AssertionError("split parts share no vertex")
    return out


def minimal_cycle_pair(
    h: Hypergraph, c1: BergeCycle, c2: BergeCycle
) -> tuple[BergeCycle, BergeCycle]:
    """Shrink two distinct intersecting cycles until both are minimal.

    Splitting replaces a non-minimal cycle by both split halves and keeps
    some intersecting pair among the at most three cycles in play.
    """
    c1.validate(h)
    c2.validate(h)
    if c1 == c2:
        raise ValueError("cycles must be distinct")
    if not (c1.vertex_set(h) & c2.vertex_set(h)):
        raise ValueError("cycles must share a vertex")
    pool = [c1, c2]
    for _ in range(4 * (len(c1) + len(c2)) + 8):
        bad = next((c for c in pool if not is_minimal_cycle(c, h)), None)
        if bad is None:
            return pool[0], pool[1]
        other = pool[0] if bad is pool[1] else pool[1]
        h1, h2 = split_cycle(bad, h)
        candidates = [
            (x, y)
            for x, y in ((h1, other), (h2, other), (h1, h2))
            if x != y and (x.vertex_set(h) & y.vertex_set(h))
        ]
        # prefer the smallest total length to guarantee progress
        pool = list(min(candidates, key=lambda p: (len(p[0]) + len(p[1]))))
    raise AssertionError("cycle splitting failed to terminate")


def _intersecting_cycle_pair(
    h: Hypergraph,
) -> tuple[BergeCycle, BergeCycle] | None:
    """Two distinct cycles sharing a vertex (joins or not), or None."""
    simple: list[BergeCycle] = []
    for adj in _cyclic_blocks(h):
        if all(len(v) == 2 for v in adj.values()):
            simple.append(_nodes_to_cycle(_walk_simple_cycle(adj), h.n))
            continue
        # block is more than one cycle: a cycle plus an ear through it
        nodes = _dfs_cycle(adj)
        ear = _find_ear(adj, nodes)
        pos = {x: i for i, x in enumerate(nodes)}
        x, y = ear[0], ear[-1]
        arc = []
        i = (pos[y] + 1) % len(nodes)
        while i != pos[x]:
            arc.append(nodes[i])
            i = (i + 1) % len(nodes)
        c1 = _nodes_to_cycle(nodes, h.n)
        c2 = _nodes_to_cycle(ear + arc, h.n)
        c1.validate(h)
        c2.validate(h)
        if c1 == c2 or not (c1.vertex_set(h) & c2.vertex_set(h)):
            raise AssertionError("ear construction produced a bad pair")
        return c1, c2
    seen: dict[int, int] = {}
    for idx, cyc in enumerate(simple):
        for v in sorted(cyc.vertex_set(h)):
            if v in seen:
                return simple[seen[v]], cyc
        for v in cyc.vertex_set(h):
            seen[v] = idx
    return None


def all_cycles_vertex_disjoint(h: Hypergraph) -> bool:
    """True when no two distinct Berge cycles share a vertex (non-joins count)."""
    return _intersecting_cycle_pair(h) is None


def find_low_cut_vertex(h: Hypergraph) -> tuple[int, int] | None:
    """A vertex v whose removal leaves at most 2*deg(v) - 2 components.

    Exists whenever two cycles of h intersect; returns (v, component count
    of h minus v, isolated vertices included) or None when all cycles are
    disjoint. Candidates are the vertices of a minimal intersecting pair,
    degree ascending.
    """
    pair = _intersecting_cycle_pair(h)
    if pair is None:
        return None
    c1, c2 = minimal_cycle_pair(h, pair[0], pair[1])
    cand = sorted(c1.vertex_set(h) | c2.vertex_set(h), key=lambda v: (h.degree(v), v))
    rest = sorted(
        set(range(h.n)) - set(cand), key=lambda v: (h.degree(v), v)
    )
    for v in cand + rest:
        if h.degree(v) < 2:
            continue
        count = delete_vertices(h, (v,)).component_count()
        if count <= 2 * h.degree(v) - 2:
            return v, count
    return None


def build_cycle_tree(h: Hypergraph) -> CycleTree:
    """Decompose a connected h with pairwise disjoint cycles into a cycle tree.

    Cycle nodes are the cycles, tree nodes the connected acyclic pieces of
    what remains, links join nodes sharing a vertex. Raises ValueError when
    h is disconnected or has intersecting cycles.
    """
    if not h.is_connected():
        raise ValueError("hypergraph is not connected")
    cycles: list[BergeCycle] = []
    for adj in _cyclic_blocks(h):
        if not all(len(v) == 2 for v in adj.values()):
            raise ValueError("two cycles intersect; no cycle tree exists")
        cyc = _nodes_to_cycle(_walk_simple_cycle(adj), h.n)
        cyc.validate(h)
        cycles.append(cyc)
    cycles.sort(key=lambda c: min(c.edges))
    cycle_vsets = [c.vertex_set(h) for c in cycles]
    for i in range(len(cycles)):
        for j in range(i + 1, len(cycles)):
            if cycle_vsets[i] & cycle_vsets[j]:
                raise ValueError("two cycles intersect; no cycle tree exists")
    # every edge on any cycle sits in a cyclic block, so the leftovers are acyclic
    in_cycle = {e for c in cycles for e in c.edges}
    remaining = [e for e in range(h.m) if e not in in_cycle]
    trees: list[frozenset[int]] = []
    unseen = set(remaining)
    for start in remaining:
        if start not in unseen:
            continue
        piece = {start}
        unseen.discard(start)
        queue = deque([start])
        while queue:
            e = queue.popleft()
            for v in h.edges[e]:
                for f in h.incidence[v]:
                    if f in unseen:
                        unseen.discard(f)
                        piece.add(f)
                        queue.append(f)
        trees.append(frozenset(piece))
    trees.sort(key=min)
    tree_vsets = [{v for e in piece for v in h.edges[e]} for piece in trees]
    links = []
    for ci in range(len(cycles)):
        for ti in range(len(trees)):
            if cycle_vsets[ci] & tree_vsets[ti]:
                links.append((ci, ti))
    total = len(cycles) + len(trees)
    if total:
        if len(links) != total - 1:
            raise ValueError("cycle/tree pieces do not form a tree")
        adj_nodes: dict[tuple[str, int], list[tuple[str, int]]] = {}
        for ci, ti in links:
            adj_nodes.setdefault(("c", ci), []).append(("t", ti))
            adj_nodes.setdefault(("t", ti), []).append(("c", ci))
        start_node = ("c", 0) if cycles else ("t", 0)
        seen_nodes = {start_node}
        frontier = deque([start_node])
        while frontier:
            node = frontier.popleft()
            for nb in adj_nodes.get(node, ()):
                if nb not in seen_nodes:
                    seen_nodes.add(nb)
                    frontier.append(nb)
        if len(seen_nodes) != total:
            raise ValueError("cycle/tree pieces do not form a tree")
    return CycleTree(tuple(cycles), tuple(trees), tuple(links))
