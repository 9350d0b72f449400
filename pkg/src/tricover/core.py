"""Core data model: immutable 3-uniform hypergraphs and the h3 text format.

Vertices carry external string tokens; every algorithm in the package runs
on the dense integer indices assigned at construction time, and reports
translate back to tokens at the boundary.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import IO, Iterable, Iterator, Sequence

_TOKEN_RE = re.compile(r"[A-Za-z0-9_]+\Z")


class H3ParseError(ValueError):
    """Malformed h3 input. `line` is the 1-based offending line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class Hypergraph:
    """An immutable 3-uniform hypergraph.

    `labels` maps dense vertex indices 0..n-1 to external tokens (order of
    first appearance is preserved). `edges` holds each edge as a sorted
    triple of vertex indices, in input order. Every edge must consist of
    three distinct vertices and no two edges may be equal as sets; isolated
    vertices are allowed. `incidence[v]` lists the indices of edges
    containing v, ascending.

    Instances never mutate after construction, so they can be shared freely
    (across threads included). All derived objects are new instances.
    """

    __slots__ = ("labels", "edges", "incidence", "_index")

    def __init__(self, labels: Sequence[str], edges: Iterable[Sequence[int]]) -> None:
        self.labels: tuple[str, ...] = tuple(labels)
        for tok in self.labels:
            if not isinstance(tok, str) or not _TOKEN_RE.match(tok):
                raise ValueError(f"invalid vertex token {tok!r}")
        self._index = {tok: i for i, tok in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise ValueError("duplicate vertex token")
        n = len(self.labels)
        seen: set[frozenset[int]] = set()
        norm: list[tuple[int, int, int]] = []
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != 3 or t[0] == t[1] or t[1] == t[2]:
                raise ValueError(f"edge {tuple(e)!r} is not a set of 3 distinct vertices")
            if t[0] < 0 or t[2] >= n:
                raise ValueError(f"edge {t} references an unknown vertex index")
            key = frozenset(t)
            if key in seen:
                raise ValueError(f"duplicate edge {t}")
            seen.add(key)
            norm.append(t)  # type: ignore[arg-type]
        self.edges: tuple[tuple[int, int, int], ...] = tuple(norm)
        inc: list[list[int]] = [[] for _ in range(n)]
        for i, t in enumerate(self.edges):
            for v in t:
                inc[v].append(i)
        self.incidence: tuple[tuple[int, ...], ...] = tuple(tuple(x) for x in inc)

    @classmethod
    def from_token_edges(
        cls,
        token_edges: Iterable[Sequence[str]],
        isolated: Iterable[str] = (),
    ) -> "Hypergraph":
        """Build from edges given as token triples; indices follow first appearance."""
        labels: list[str] = []
        index: dict[str, int] = {}

        def intern(tok: str) -> int:
            if tok not in index:
                index[tok] = len(labels)
                labels.append(tok)
            return index[tok]

        edges = [tuple(intern(t) for t in e) for e in token_edges]
        for tok in isolated:
            intern(tok)
        return cls(labels, edges)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def token(self, v: int) -> str:
        return self.labels[v]

    def index(self, token: str) -> int:
        try:
            return self._index[token]
        except KeyError:
            raise KeyError(f"unknown vertex token {token!r}") from None

    def edge_tokens(self, i: int) -> tuple[str, str, str]:
        a, b, c = self.edges[i]
        return (self.labels[a], self.labels[b], self.labels[c])

    def __eq__(self, other: object) -> bool:
        # Content equality: same token set, same edges as sets of tokens, in order.
        if not isinstance(other, Hypergraph):
            return NotImplemented
        if set(self.labels) != set(other.labels):
            return False
        mine = [frozenset(self.edge_tokens(i)) for i in range(self.m)]
        theirs = [frozenset(other.edge_tokens(i)) for i in range(other.m)]
        return mine == theirs

    def __hash__(self) -> int:
        return hash(
            (
                frozenset(self.labels),
                tuple(frozenset(self.edge_tokens(i)) for i in range(self.m)),
            )
        )

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.m})"

    # -- connectivity ------------------------------------------------------

    def _component_labels(self) -> list[int]:
        """Component id per vertex, ids numbered by smallest member vertex."""
        comp = [-1] * self.n
        cid = 0
        for start in range(self.n):
            if comp[start] >= 0:
                continue
            comp[start] = cid
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for e in self.incidence[v]:
                    for w in self.edges[e]:
                        if comp[w] < 0:
                            comp[w] = cid
                            queue.append(w)
            cid += 1
        return comp

    def component_count(self) -> int:
        """Number of connected components; isolated vertices count."""
        return 0 if self.n == 0 else max(self._component_labels()) + 1

    def is_connected(self) -> bool:
        """True when there is at most one component (the empty hypergraph passes)."""
        return self.component_count() <= 1


@dataclass
class ComponentDecomposition:
    """Connected components of a hypergraph.

    `components` are sub-hypergraphs whose vertex sets partition the parent's
    vertices; `vertex_map` sends each parent index to (component index,
    local index). Components are ordered by their smallest parent vertex.
    """

    components: tuple[Hypergraph, ...]
    vertex_map: dict[int, tuple[int, int]]


def components(h: Hypergraph) -> ComponentDecomposition:
    comp = h._component_labels()
    k = 0 if h.n == 0 else max(comp) + 1
    members: list[list[int]] = [[] for _ in range(k)]
    for v in range(h.n):
        members[comp[v]].append(v)
    vertex_map: dict[int, tuple[int, int]] = {}
    for ci, verts in enumerate(members):
        for li, v in enumerate(verts):
            vertex_map[v] = (ci, li)
    edge_lists: list[list[tuple[int, int, int]]] = [[] for _ in range(k)]
    for e in h.edges:
        ci = comp[e[0]]
        edge_lists[ci].append(tuple(vertex_map[v][1] for v in e))  # type: ignore[arg-type]
    subs = tuple(
        Hypergraph([h.labels[v] for v in members[ci]], edge_lists[ci]) for ci in range(k)
    )
    return ComponentDecomposition(subs, vertex_map)


def delete_vertices(h: Hypergraph, s: Iterable[int]) -> Hypergraph:
    """H minus a vertex set: drops the vertices and every incident edge."""
    drop = set(s)
    for v in drop:
        if not isinstance(v, int) or v < 0 or v >= h.n:
            raise ValueError(f"unknown vertex index {v!r}")
    keep = [v for v in range(h.n) if v not in drop]
    remap = {v: i for i, v in enumerate(keep)}
    edges = [
        tuple(remap[v] for v in e) for e in h.edges if not (set(e) & drop)
    ]
    return Hypergraph([h.labels[v] for v in keep], edges)


def delete_edges(h: Hypergraph, a: Iterable[int]) -> Hypergraph:
    """H minus an edge set: all vertices stay, listed edges go."""
    drop = set(a)
    for e in drop:
        if not isinstance(e, int) or e < 0 or e >= h.m:
            raise ValueError(f"unknown edge index {e!r}")
    return Hypergraph(h.labels, [e for i, e in enumerate(h.edges) if i not in drop])


def induced_by_edges(h: Hypergraph, a: Iterable[int]) -> Hypergraph:
    """Sub-hypergraph on an edge subset; keeps exactly the vertices those edges touch."""
    take = sorted(set(a))
    for e in take:
        if not isinstance(e, int) or e < 0 or e >= h.m:
            raise ValueError(f"unknown edge index {e!r}")
    used = sorted({v for i in take for v in h.edges[i]})
    remap = {v: i for i, v in enumerate(used)}
    return Hypergraph(
        [h.labels[v] for v in used],
        [tuple(remap[v] for v in h.edges[i]) for i in take],
    )


def parse_h3(source: str | IO[str]) -> Hypergraph:
    """Parse the h3 format: one edge per line, three whitespace-separated tokens.

    Blank lines and lines starting with `#` are ignored. Tokens match
    [A-Za-z0-9_]+. Raises H3ParseError with a line number on malformed input.
    """
    if isinstance(source, str):
        lines: Iterator[str] = iter(source.splitlines())
    else:
        lines = iter(source.read().splitlines())
    token_edges: list[tuple[str, str, str]] = []
    seen: set[frozenset[str]] = set()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise H3ParseError(lineno, f"expected 3 tokens, got {len(parts)}")
        for tok in parts:
            if not _TOKEN_RE.match(tok):
                raise H3ParseError(lineno, f"invalid token {tok!r}")
        if len(set(parts)) != 3:
            raise H3ParseError(lineno, "edge repeats a vertex")
        key = frozenset(parts)
        if key in seen:
            raise H3ParseError(lineno, "duplicate edge")
        seen.add(key)
        token_edges.append((parts[0], parts[1], parts[2]))
    return Hypergraph.from_token_edges(token_edges)


def serialize_h3(h: Hypergraph) -> str:
    """Inverse of parse_h3 up to content equality.

    Edges are written in stored order, tokens single-space separated, one
    trailing newline per line. Isolated vertices have no line to live on and
    are dropped; that is a format limitation, not an operation on H.
    """
    return "".join(" ".join(h.edge_tokens(i)) + "\n" for i in range(h.m))
