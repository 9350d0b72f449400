"""Instance lab: canonical labeling, enumeration, generators, verification.

Everything here is deterministic: generators take explicit seeds, canonical
keys come from structural refinement (no process-dependent hashing), and
suite output is ordered by canonical key, so repeated runs are
bit-identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterator

from .core import Hypergraph, delete_vertices, serialize_h3
from .cycles import (
    BergeCycle,
    all_cycles_vertex_disjoint,
    find_cycle,
    find_low_cut_vertex,
    is_acyclic,
    is_minimal_cycle,
    split_cycle,
)
from .solver import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    constructive_cover,
    exact_nu,
    exact_tau,
)
from .trees import has_perfect_matching, hypertree_cover, hypertree_matching

ENUMERATION_BUDGET = 5


# -- canonical labeling --------------------------------------------------------


def _refine(h: Hypergraph, colors: list[int]) -> list[int]:
    """Iterated color refinement by neighborhood signature.

    A vertex signature is its color plus the multiset of color pairs it
    sees across its edges. New color ids are ranks of sorted signatures,
    so the result depends only on the isomorphism type of (h, colors).
    """
    while True:
        sigs = []
        for v in range(h.n):
            nb = sorted(
                tuple(sorted(colors[w] for w in h.edges[e] if w != v))
                for e in h.incidence[v]
            )
            sigs.append((colors[v], tuple(nb)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _canonical_search(h: Hypergraph) -> tuple[tuple, list[int]]:
    """Lexicographically smallest sorted edge list over all labelings
    compatible with refinement, plus one relabeling that achieves it."""
    best: tuple | None = None
    best_lab: list[int] = []

    def rec(colors: list[int]) -> None:
        nonlocal best, best_lab
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            # colors is a bijection onto 0..n-1
            form = tuple(
                sorted(tuple(sorted(colors[v] for v in e)) for e in h.edges)
            )
            if best is None or form < best:
                best = form
                best_lab = list(colors)
            return
        for v in target:
            split = [2 * c + 1 for c in colors]
            split[v] = 2 * colors[v]
            rec(_refine(h, split))

    rec(_refine(h, [0] * h.n))
    return (best if best is not None else ()), best_lab


def canonical_key(h: Hypergraph) -> str:
    """Isomorphism-invariant key: stable across runs, platforms and labelings."""
    form, _ = _canonical_search(h)
    body = ";".join(",".join(str(v + 1) for v in e) for e in form)
    return f"{h.n}:{body}"


def canonical_instance(h: Hypergraph) -> Hypergraph:
    """The canonical representative: vertices named "1".."n", edges sorted."""
    form, _ = _canonical_search(h)
    return Hypergraph([str(i + 1) for i in range(h.n)], form)


# -- enumeration ---------------------------------------------------------------


def enumerate_connected(max_m: int) -> Iterator[Hypergraph]:
    """All connected instances with 1 <= m <= max_m, one per isomorphism class.

    Grows by one edge at a time; any connected instance can be built this
    way because its edge-intersection graph is connected, so some edge
    ordering keeps every prefix connected. Each level is emitted sorted by
    canonical key. max_m is capped at 5.
    """
    if max_m > ENUMERATION_BUDGET:
        raise ValueError(f"max_m={max_m} exceeds the enumeration budget {ENUMERATION_BUDGET}")
    level: dict[str, Hypergraph] = {}
    single = Hypergraph(["1", "2", "3"], [(0, 1, 2)])
    level[canonical_key(single)] = canonical_instance(single)
    for m in range(1, max_m + 1):
        for key in sorted(level):
            yield level[key]
        if m == max_m:
            break
        nxt: dict[str, Hypergraph] = {}
        for g in level.values():
            existing = {frozenset(e) for e in g.edges}
            candidates: list[tuple[int, int, int]] = []
            for trip in combinations(range(g.n), 3):
                if frozenset(trip) not in existing:
                    candidates.append(trip)
            for i, j in combinations(range(g.n), 2):
                candidates.append((i, j, g.n))
            for i in range(g.n):
                candidates.append((i, g.n, g.n + 1))
            for cand in candidates:
                extra = len([x for x in cand if x >= g.n])
                labels = [str(i + 1) for i in range(g.n + extra)]
                child = Hypergraph(labels, list(g.edges) + [cand])
                key = canonical_key(child)
                if key not in nxt:
                    nxt[key] = canonical_instance(child)
        level = nxt


def enumerate_hypertrees(max_m: int) -> Iterator[Hypergraph]:
    """All hypertrees with 1 <= m <= max_m, one per isomorphism class.

    Pendant growth (new edge = one old vertex plus two fresh) reaches every
    hypertree: the edge-intersection graph of a hypertree is a tree, and
    removing one of its leaf edges leaves a smaller hypertree.
    """
    level: dict[str, Hypergraph] = {}
    single = Hypergraph(["1", "2", "3"], [(0, 1, 2)])
    level[canonical_key(single)] = canonical_instance(single)
    for m in range(1, max_m + 1):
        for key in sorted(level):
            yield level[key]
        if m == max_m:
            break
        nxt: dict[str, Hypergraph] = {}
        for g in level.values():
            for v in range(g.n):
                labels = [str(i + 1) for i in range(g.n + 2)]
                child = Hypergraph(labels, list(g.edges) + [(v, g.n, g.n + 1)])
                key = canonical_key(child)
                if key not in nxt:
                    nxt[key] = canonical_instance(child)
        level = nxt


# -- generators ----------------------------------------------------------------


def gen_hypertree_pm(m: int, seed: int) -> Hypergraph:
    """A random hypertree with a perfect matching: m edges, n = 2m + 1 vertices.

    Needs m = 1 mod 3: starts from (2m+1)/3 disjoint matched edges and adds
    (m-1)/3 connector edges, each picking one random vertex from each of
    three distinct components. Connectors never create a cycle and never
    touch the matching property.
    """
    if m < 1 or m % 3 != 1:
        raise ValueError(f"m={m} is not 1 mod 3")
    rng = random.Random(seed)
    q = (2 * m + 1) // 3
    labels = [str(i + 1) for i in range(3 * q)]
    edges: list[tuple[int, int, int]] = [(3 * i, 3 * i + 1, 3 * i + 2) for i in range(q)]
    comps: list[set[int]] = [{3 * i, 3 * i + 1, 3 * i + 2} for i in range(q)]
    for _ in range((m - 1) // 3):
        picked = rng.sample(range(len(comps)), 3)
        verts = tuple(sorted(rng.choice(sorted(comps[c])) for c in picked))
        edges.append(verts)  # type: ignore[arg-type]
        merged = set().union(*(comps[c] for c in picked))
        comps = [c for i, c in enumerate(comps) if i not in picked]
        comps.append(merged)
    return Hypergraph(labels, edges)


def gen_random_connected(n: int, m: int, seed: int) -> Hypergraph:
    """A random connected instance on n vertices with m edges.

    Needs 3 <= n <= 2m + 1 and m <= C(n, 3). Builds a connected spine first
    (each new edge merges components: three when possible, two at the end),
    then fills with rejection-sampled fresh edges.
    """
    if n < 3 or n > 2 * m + 1:
        raise ValueError(f"need 3 <= n <= 2m+1, got n={n}, m={m}")
    if m > comb(n, 3):
        raise ValueError(f"m={m} exceeds the {comb(n, 3)} distinct triples on n={n}")
    rng = random.Random(seed)
    comps: list[set[int]] = [{v} for v in range(n)]
    edges: list[tuple[int, int, int]] = []
    edge_set: set[frozenset[int]] = set()
    while len(comps) > 1:
        if len(comps) >= 3:
            picked = rng.sample(range(len(comps)), 3)
            verts = [rng.choice(sorted(comps[c])) for c in picked]
        else:
            big = 0 if len(comps[0]) >= 2 else 1
            v1 = rng.choice(sorted(comps[1 - big]))
            v2, v3 = rng.sample(sorted(comps[big]), 2)
            picked = [0, 1]
            verts = [v1, v2, v3]
        e = tuple(sorted(verts))
        edges.append(e)  # type: ignore[arg-type]
        edge_set.add(frozenset(e))
        merged = set().union(*(comps[c] for c in picked))
        comps = [c for i, c in enumerate(comps) if i not in picked]
        comps.append(merged)
    while len(edges) < m:
        e = frozenset(rng.sample(range(n), 3))
        if e in edge_set:
            continue
        edge_set.add(e)
        edges.append(tuple(sorted(e)))  # type: ignore[arg-type]
    return Hypergraph([str(i + 1) for i in range(n)], edges)


def gen_cycle(k: int, linear: bool = True) -> Hypergraph:
    """A k-cycle. `linear` gives the loose cycle (every edge owns a private
    third vertex, minimal for any k). With linear=False and k >= 4 one
    private vertex is reused by an opposite edge, making the cycle
    non-minimal; smaller k falls back to the loose form."""
    if k < 2:
        raise ValueError("a cycle needs k >= 2 edges")
    joins = [f"j{i}" for i in range(k)]
    privs = [f"p{i}" for i in range(k)]
    if k == 2:
        token_edges = [
            (joins[0], joins[1], privs[0]),
            (joins[0], joins[1], privs[1]),
        ]
    else:
        token_edges = [
            (joins[i], privs[i], joins[(i + 1) % k]) for i in range(k)
        ]
    if not linear and k >= 4:
        e = list(token_edges[2])
        e[1] = privs[0]
        token_edges[2] = tuple(e)
    return Hypergraph.from_token_edges(token_edges)


def gen_nonminimal_cycle(seed: int) -> tuple[Hypergraph, BergeCycle]:
    """A random non-minimal cycle: a loose k-cycle (4 <= k <= 8) with one
    forced intersection between two non-adjacent edges.

    The shared vertex is, with equal chance, a join on one of the two edges,
    a join strictly between them, or a private vertex of one of them; these
    are the three shapes the splitting construction distinguishes.
    """
    rng = random.Random(seed)
    k = rng.randint(4, 8)
    joins = [f"j{i}" for i in range(k)]
    privs = [f"p{i}" for i in range(k)]
    edges = [[joins[i], privs[i], joins[(i + 1) % k]] for i in range(k)]
    a = rng.randint(0, k - 3)
    b = rng.randint(a + 2, min(a + k - 2, k - 1))
    mode = rng.choice(("boundary_join", "interior_join", "private"))
    if mode == "interior_join":
        options = [
            t
            for t in range(k)
            if t not in (a, (a + 1) % k, b, (b + 1) % k)
        ]
        if not options:
            mode = "boundary_join"
        else:
            t = rng.choice(options)
            edges[a][1] = joins[t]
            edges[b][1] = joins[t]
    if mode == "boundary_join":
        edges[b][1] = joins[a]
    elif mode == "private":
        edges[b][1] = privs[a]
    h = Hypergraph.from_token_edges(edges)
    cyc = BergeCycle(tuple(h.index(j) for j in joins), tuple(range(k)))
    cyc.validate(h)
    return h, cyc


def gen_intersecting_cycles(seed: int) -> Hypergraph:
    """Two cycles sharing exactly one vertex (a join or a private vertex on
    either side, at random). Always connected with an intersecting pair."""
    rng = random.Random(seed)

    def loose(prefix: str, k: int) -> list[tuple[str, str, str]]:
        joins = [f"{prefix}j{i}" for i in range(k)]
        privs = [f"{prefix}p{i}" for i in range(k)]
        if k == 2:
            return [
                (joins[0], joins[1], privs[0]),
                (joins[0], joins[1], privs[1]),
            ]
        return [(joins[i], privs[i], joins[(i + 1) % k]) for i in range(k)]

    first = loose("a", rng.randint(2, 5))
    second = loose("b", rng.randint(2, 5))
    v1 = rng.choice(sorted({v for e in first for v in e}))
    v2 = rng.choice(sorted({v for e in second for v in e}))
    merged = [tuple(v1 if x == v2 else x for x in e) for e in second]
    return Hypergraph.from_token_edges(first + merged)


# -- verification --------------------------------------------------------------


@dataclass
class Report:
    """Verification record for one connected instance."""

    instance_id: str
    n: int
    m: int
    is_connected: bool
    is_hypertree: bool
    has_pm: bool | None
    tau: int | None
    nu: int | None
    bound_num: int
    bound_den: int
    tight: bool | None
    cover: list[str] | None
    matching: list[int] | None
    constructive_method: str
    constructive_size: int | None
    lemma_checks: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v != "fail" for v in self.lemma_checks.values())

    def to_json_dict(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "n": self.n,
            "m": self.m,
            "is_connected": self.is_connected,
            "is_hypertree": self.is_hypertree,
            "has_pm": self.has_pm,
            "tau": self.tau,
            "nu": self.nu,
            "bound_num": self.bound_num,
            "bound_den": self.bound_den,
            "tight": self.tight,
            "cover": self.cover,
            "matching": self.matching,
            "constructive_method": self.constructive_method,
            "constructive_size": self.constructive_size,
            "lemma_checks": dict(self.lemma_checks),
        }


def verify_instance(h: Hypergraph, budget: int = DEFAULT_BUDGET) -> Report:
    """Run every structural check on one connected instance.

    Checks that cannot apply (no intersecting cycles, not a hypertree, or
    the exact solver is over budget) are reported as "skipped" rather than
    silently passed. Raises ValueError on disconnected input; callers
    decompose first.
    """
    if not h.is_connected():
        raise ValueError("verify_instance needs a connected instance")
    acyclic = is_acyclic(h)
    checks: dict[str, str] = {}

    tau = nu = None
    cover_tokens = matching_edges = None
    try:
        t_res = exact_tau(h, budget)
        n_res = exact_nu(h, budget)
        tau, nu = t_res.size, n_res.size
        cover_tokens = sorted(h.labels[v] for v in t_res.certificate.vertex_ids)
        matching_edges = sorted(n_res.certificate.edge_indices)
    except BudgetExceeded:
        pass

    try:
        pm: bool | None = has_perfect_matching(h, budget)
    except BudgetExceeded:
        pm = None

    try:
        cons = constructive_cover(h, budget)
        cons_method: str = cons.method
        cons_size: int | None = cons.size
    except BudgetExceeded:
        cons, cons_method, cons_size = None, "budget_exceeded", None

    checks["n_le_2m1"] = "pass" if h.n <= 2 * h.m + 1 else "fail"
    checks["tree_iff_n_eq"] = (
        "pass" if acyclic == (h.n == 2 * h.m + 1) else "fail"
    )

    if not acyclic:
        checks["konig_on_trees"] = "skipped"
    elif tau is None:
        checks["konig_on_trees"] = "skipped"
    else:
        sizes = {
            len(hypertree_cover(h).vertex_ids),
            len(hypertree_matching(h).edge_indices),
            tau,
            nu,
        }
        checks["konig_on_trees"] = "pass" if len(sizes) == 1 else "fail"

    if all_cycles_vertex_disjoint(h):
        checks["low_cut_when_intersecting"] = "skipped"
    else:
        hit = find_low_cut_vertex(h)
        if hit is None:
            checks["low_cut_when_intersecting"] = "fail"
        else:
            v, claimed = hit
            recount = delete_vertices(h, (v,)).component_count()
            ok = recount == claimed and recount <= 2 * h.degree(v) - 2
            checks["low_cut_when_intersecting"] = "pass" if ok else "fail"

    cyc = find_cycle(h)
    if cyc is None or is_minimal_cycle(cyc, h):
        checks["split_contract"] = "skipped"
    else:
        try:
            p1, p2 = split_cycle(cyc, h)
            ok = (
                len(p1) < len(cyc)
                and len(p2) < len(cyc)
                and len(p1) + len(p2) <= len(cyc) + 2
                and bool(p1.vertex_set(h) & p2.vertex_set(h))
            )
            checks["split_contract"] = "pass" if ok else "fail"
        except (ValueError, AssertionError):
            checks["split_contract"] = "fail"

    floor_bound = (2 * h.m + 1) // 3
    if cons is None:
        checks["main_bound"] = "skipped"
    else:
        ok = cons.certificate.is_valid(h) and cons.size <= floor_bound
        if tau is not None:
            ok = ok and tau <= floor_bound
        checks["main_bound"] = "pass" if ok else "fail"

    if tau is None or pm is None:
        checks["tight_iff_extremal"] = "skipped"
    else:
        checks["tight_iff_extremal"] = (
            "pass" if (3 * tau == 2 * h.m + 1) == (acyclic and pm) else "fail"
        )

    return Report(
        instance_id=canonical_key(h),
        n=h.n,
        m=h.m,
        is_connected=True,
        is_hypertree=acyclic,
        has_pm=pm,
        tau=tau,
        nu=nu,
        bound_num=2 * h.m + 1,
        bound_den=3,
        tight=None if tau is None else 3 * tau == 2 * h.m + 1,
        cover=cover_tokens,
        matching=matching_edges,
        constructive_method=cons_method,
        constructive_size=cons_size,
        lemma_checks=checks,
    )


@dataclass
class SuiteConfig:
    census_max_m: int = 3
    random_count: int = 100
    random_max_m: int = 10
    seed: int = 0
    budget: int = DEFAULT_BUDGET

    def to_json_dict(self) -> dict:
        return {
            "census_max_m": self.census_max_m,
            "random_count": self.random_count,
            "random_max_m": self.random_max_m,
            "seed": self.seed,
            "budget": self.budget,
        }


@dataclass
class SuiteReport:
    config: SuiteConfig
    counts: dict[str, int]
    failures: list[dict]
    fallback_rate: float
    reports: list[Report]

    @property
    def ok(self) -> bool:
        return self.counts["failures"] == 0

    def to_json_dict(self) -> dict:
        return {
            "config": self.config.to_json_dict(),
            "counts": dict(self.counts),
            "failures": list(self.failures),
            "fallback_rate": self.fallback_rate,
        }


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Verify a census plus seeded random instances; deterministic output.

    Instances are verified in canonical-key order; the report aggregates
    pass/fail counts and lists each failing (instance, check) pair with its
    h3 text so failures can be replayed.
    """
    instances: list[Hypergraph] = []
    if config.census_max_m > 0:
        instances.extend(enumerate_connected(config.census_max_m))
    rng = random.Random(config.seed)
    for _ in range(config.random_count):
        m = rng.randint(1, config.random_max_m)
        n_min = 3
        while comb(n_min, 3) < m:
            n_min += 1
        n = rng.randint(n_min, 2 * m + 1)
        instances.append(gen_random_connected(n, m, rng.randrange(2**32)))
    pairs = [(verify_instance(h, config.budget), h) for h in instances]
    pairs.sort(key=lambda p: p[0].instance_id)
    failures = []
    fallbacks = 0
    passes = 0
    for rep, h in pairs:
        if rep.constructive_method == "fallback":
            fallbacks += 1
        if rep.ok:
            passes += 1
        else:
            for check, status in sorted(rep.lemma_checks.items()):
                if status == "fail":
                    failures.append(
                        {
                            "key": rep.instance_id,
                            "h3": serialize_h3(h),
                            "check": check,
                        }
                    )
    counts = {
        "instances": len(pairs),
        "passes": passes,
        "failures": len(pairs) - passes,
        "fallbacks": fallbacks,
    }
    rate = fallbacks / len(pairs) if pairs else 0.0
    return SuiteReport(
        config=config,
        counts=counts,
        failures=failures,
        fallback_rate=rate,
        reports=[rep for rep, _ in pairs],
    )
