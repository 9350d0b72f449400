"""Canonical keys, enumeration, generators, verification suite."""

import json
import random
from pathlib import Path

import pytest
from hypothesis import given, settings

import strategies as st_h
from oracles import brute_canonical_form
from tricover import (
    Hypergraph,
    SuiteConfig,
    canonical_instance,
    canonical_key,
    enumerate_connected,
    gen_cycle,
    gen_random_connected,
    is_acyclic,
    is_minimal_cycle,
    find_cycle,
    parse_h3,
    run_suite,
    verify_instance,
)

DATA = Path(__file__).parent / "data"


# -- canonical keys ------------------------------------------------------------


def test_canonical_key_examples():
    assert canonical_key(parse_h3("1 2 3\n")) == "3:1,2,3"
    assert canonical_key(parse_h3("x y z\n")) == "3:1,2,3"
    # an isolated vertex changes the key: refinement orders it first
    assert canonical_key(Hypergraph(["a", "b", "c", "d"], [(0, 1, 2)])) == "4:2,3,4"


def test_canonical_key_invariant_under_relabeling():
    h = parse_h3("1 2 3\n3 4 5\n5 6 1\n2 7 8\n")
    base = canonical_key(h)
    rng = random.Random(5)
    for _ in range(20):
        perm = list(range(h.n))
        rng.shuffle(perm)
        g = Hypergraph(
            [f"t{i}" for i in range(h.n)],
            [tuple(perm[v] for v in e) for e in h.edges],
        )
        assert canonical_key(g) == base


@settings(max_examples=40)
@given(st_h.connected_instances(max_m=4), st_h.connected_instances(max_m=4))
def test_canonical_key_is_a_complete_invariant(h1, h2):
    # the refinement-restricted minimum differs from the global-permutation
    # minimum, so compare equivalence classes, not the forms themselves
    if h1.n > 7 or h2.n > 7:
        return
    iso = h1.n == h2.n and brute_canonical_form(h1) == brute_canonical_form(h2)
    assert (canonical_key(h1) == canonical_key(h2)) == iso


def test_canonical_instance_is_isomorphic_and_stable():
    h = parse_h3("b a c\nc d e\n")
    g = canonical_instance(h)
    assert canonical_key(g) == canonical_key(h)
    assert g.labels == tuple(str(i + 1) for i in range(h.n))
    assert canonical_instance(g) == g


# -- enumeration ---------------------------------------------------------------


def test_enumeration_counts():
    assert len(list(enumerate_connected(1))) == 1
    assert len(list(enumerate_connected(2))) == 3
    assert len(list(enumerate_connected(3))) == 12


def test_enumeration_budget():
    with pytest.raises(ValueError):
        list(enumerate_connected(6))


def test_enumeration_is_deduplicated_and_connected():
    seen = set()
    for h in enumerate_connected(3):
        key = canonical_key(h)
        assert key not in seen
        seen.add(key)
        assert h.is_connected()
        assert h.n <= 2 * h.m + 1


def test_census_golden_files():
    for max_m in (1, 2, 3):
        expected = (DATA / f"census_m{max_m}.txt").read_text().splitlines()
        got = sorted(canonical_key(h) for h in enumerate_connected(max_m))
        assert got == expected


# -- generators ----------------------------------------------------------------


def test_gen_random_connected_contract():
    for seed in range(25):
        rng = random.Random(seed)
        m = rng.randint(1, 12)
        n = rng.randint(3, 2 * m + 1)
        from math import comb

        if m > comb(n, 3):
            continue
        h = gen_random_connected(n, m, seed)
        assert (h.n, h.m) == (n, m)
        assert h.is_connected()


def test_gen_random_connected_rejects_bad_shapes():
    with pytest.raises(ValueError):
        gen_random_connected(10, 4, 0)  # n > 2m+1
    with pytest.raises(ValueError):
        gen_random_connected(4, 5, 0)  # more edges than triples
    with pytest.raises(ValueError):
        gen_random_connected(2, 1, 0)


def test_gen_random_connected_deterministic():
    assert gen_random_connected(9, 6, 7).edges == gen_random_connected(9, 6, 7).edges


def test_gen_cycle_shapes():
    tight = gen_cycle(2)
    assert tight.m == 2 and find_cycle(tight) is not None
    loose = gen_cycle(3, linear=True)
    assert loose.m == 3 and loose.n == 6
    c = find_cycle(loose)
    assert c is not None and is_minimal_cycle(c, loose)
    pinched = gen_cycle(5, linear=False)
    assert pinched.n == 9  # one private vertex reused
    cyc = find_cycle(pinched)
    assert cyc is not None


def test_gen_cycle_rejects_k1():
    with pytest.raises(ValueError):
        gen_cycle(1)


# -- verification --------------------------------------------------------------


def test_verify_instance_hypertree():
    rep = verify_instance(parse_h3("1 2 3\n3 4 5\n"))
    assert rep.is_hypertree and not rep.has_pm
    assert rep.tau == rep.nu == 1
    assert rep.tight is False
    assert rep.lemma_checks["konig_on_trees"] == "pass"
    assert rep.lemma_checks["low_cut_when_intersecting"] == "skipped"
    assert rep.lemma_checks["n_le_2m1"] == "pass"
    assert rep.ok


def test_verify_instance_intersecting_cycles():
    rep = verify_instance(parse_h3("1 2 3\n2 3 4\n1 5 6\n5 6 7\n"))
    assert rep.lemma_checks["low_cut_when_intersecting"] == "pass"
    assert rep.lemma_checks["konig_on_trees"] == "skipped"
    assert rep.ok


def test_verify_instance_extremal():
    rep = verify_instance(parse_h3("1 2 3\n4 5 6\n7 8 9\n1 4 7\n"))
    assert rep.tight and rep.is_hypertree and rep.has_pm
    assert rep.lemma_checks["tight_iff_extremal"] == "pass"
    assert rep.cover == ["1", "4", "7"]
    assert rep.matching == [0, 1, 2]


def test_verify_instance_rejects_disconnected():
    with pytest.raises(ValueError):
        verify_instance(parse_h3("1 2 3\n4 5 6\n"))


def test_verify_instance_over_budget_skips_exact_checks():
    from tricover import gen_hypertree_pm

    h = gen_hypertree_pm(25, 0)
    rep = verify_instance(h, budget=10)
    assert rep.tau is None and rep.nu is None
    assert rep.lemma_checks["konig_on_trees"] == "skipped"
    assert rep.lemma_checks["tight_iff_extremal"] == "skipped"
    assert rep.lemma_checks["n_le_2m1"] == "pass"
    # constructive path needs no exact solver on hypertrees
    assert rep.constructive_method == "hypertree"
    assert rep.ok


def test_report_json_is_serializable():
    rep = verify_instance(parse_h3("1 2 3\n2 3 4\n"))
    doc = rep.to_json_dict()
    json.dumps(doc)
    assert doc["instance_id"] == canonical_key(parse_h3("1 2 3\n2 3 4\n"))
    assert set(doc["lemma_checks"]) == {
        "n_le_2m1",
        "tree_iff_n_eq",
        "konig_on_trees",
        "low_cut_when_intersecting",
        "split_contract",
        "main_bound",
        "tight_iff_extremal",
    }


def test_run_suite_census_only():
    rep = run_suite(SuiteConfig(census_max_m=2, random_count=0))
    assert rep.counts == {
        "instances": 3,
        "passes": 3,
        "failures": 0,
        "fallbacks": 0,
    }
    assert rep.ok and rep.failures == []


def test_run_suite_deterministic_json():
    cfg = SuiteConfig(census_max_m=2, random_count=25, seed=11)
    a = json.dumps(run_suite(cfg).to_json_dict(), sort_keys=True)
    b = json.dumps(run_suite(cfg).to_json_dict(), sort_keys=True)
    assert a == b


def test_run_suite_reports_are_key_ordered():
    rep = run_suite(SuiteConfig(census_max_m=3, random_count=10, seed=3))
    keys = [r.instance_id for r in rep.reports]
    assert keys == sorted(keys)
    assert rep.counts["instances"] == 12 + 10
