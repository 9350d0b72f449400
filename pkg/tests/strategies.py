"""Hypothesis strategies shared across the test modules."""

from __future__ import annotations

from itertools import combinations
from math import comb

from hypothesis import strategies as st

from tricover import Hypergraph, gen_random_connected


@st.composite
def hypergraphs(draw, min_m: int = 0, max_m: int = 8):
    """Arbitrary (possibly disconnected) instances, isolated vertices allowed."""
    m = draw(st.integers(min_value=min_m, max_value=max_m))
    if m == 0:
        n = draw(st.integers(min_value=0, max_value=4))
        return Hypergraph([f"v{i}" for i in range(n)], [])
    n_min = 3
    while comb(n_min, 3) < m:
        n_min += 1
    n = draw(st.integers(min_value=n_min, max_value=12))
    triples = list(combinations(range(n), 3))
    edges = draw(
        st.lists(st.sampled_from(triples), min_size=m, max_size=m, unique=True)
    )
    return Hypergraph([f"v{i}" for i in range(n)], edges)


@st.composite
def hypergraphs_with_vertex(draw):
    h = draw(hypergraphs(min_m=1))
    v = draw(st.integers(min_value=0, max_value=h.n - 1))
    return h, v


@st.composite
def connected_instances(draw, min_m: int = 1, max_m: int = 10):
    """Connected seeded instances spanning the whole feasible (n, m) range."""
    m = draw(st.integers(min_value=min_m, max_value=max_m))
    n_min = 3
    while comb(n_min, 3) < m:
        n_min += 1
    n = draw(st.integers(min_value=n_min, max_value=2 * m + 1))
    seed = draw(st.integers(min_value=0, max_value=2**20))
    return gen_random_connected(n, m, seed)
