"""Cycle detection, minimality, splitting, low-cut vertices, cycle trees."""

import pytest
from hypothesis import given, settings

import strategies as st_h
from oracles import all_berge_cycles, brute_acyclic, brute_has_intersecting_pair
from tricover import (
    BergeCycle,
    all_cycles_vertex_disjoint,
    build_cycle_tree,
    delete_vertices,
    find_cycle,
    find_low_cut_vertex,
    gen_intersecting_cycles,
    gen_nonminimal_cycle,
    is_acyclic,
    is_minimal_cycle,
    minimal_cycle_pair,
    parse_h3,
    split_cycle,
)


def test_two_disjointish_edges_have_no_cycle():
    h = parse_h3("1 2 3\n3 4 5\n")
    assert find_cycle(h) is None
    assert is_acyclic(h)


def test_two_edge_cycle():
    h = parse_h3("1 2 3\n2 3 4\n")
    c = find_cycle(h)
    assert c is not None and len(c) == 2
    assert sorted(h.labels[v] for v in c.joins) == ["2", "3"]
    assert not is_acyclic(h)


def test_loose_triangle_cycle():
    h = parse_h3("1 2 3\n3 4 5\n5 6 1\n")
    c = find_cycle(h)
    assert c is not None and len(c) == 3
    assert sorted(h.labels[v] for v in c.joins) == ["1", "3", "5"]
    assert is_minimal_cycle(c, h)


def test_validate_rejects_garbage():
    h = parse_h3("1 2 3\n3 4 5\n5 6 1\n")
    with pytest.raises(ValueError):
        BergeCycle((0,), (0,)).validate(h)
    with pytest.raises(ValueError):
        BergeCycle((0, 1), (0, 1)).validate(h)  # 1 is not in edge 1
    with pytest.raises(ValueError):
        is_minimal_cycle(BergeCycle((0, 0), (0, 1)), h)


def test_nonminimal_four_cycle_splits_with_contract():
    # joins 1,2,3,4; edges 0 and 2 share the extra vertex 9
    h = parse_h3("1 2 9\n2 3 7\n3 4 9\n4 1 8\n")
    c = BergeCycle(
        tuple(h.index(t) for t in "1234"), (0, 1, 2, 3)
    )
    c.validate(h)
    assert not is_minimal_cycle(c, h)
    p1, p2 = split_cycle(c, h)
    assert len(p1) < 4 and len(p2) < 4
    assert len(p1) + len(p2) <= len(c) + 2
    shared = p1.vertex_set(h) & p2.vertex_set(h)
    assert h.index("9") in shared
    p1.validate(h)
    p2.validate(h)


def test_linear_four_cycle_is_minimal():
    h = parse_h3("1 2 3\n3 4 5\n5 6 7\n7 8 1\n")
    c = BergeCycle(tuple(h.index(t) for t in "1357"), (0, 1, 2, 3))
    assert is_minimal_cycle(c, h)
    with pytest.raises(ValueError):
        split_cycle(c, h)


def test_split_join_witness_sums_to_k_plus_1():
    # edge 2 = {3,4,1} contains join 1, a non-adjacent intersection with edge 0
    h = parse_h3("1 2 p\n2 3 q\n3 4 1\n4 5 r\n5 6 s\n6 1 t\n")
    c = BergeCycle(tuple(h.index(t) for t in "123456"), (0, 1, 2, 3, 4, 5))
    c.validate(h)
    assert not is_minimal_cycle(c, h)  # edge 2 contains join 1
    p1, p2 = split_cycle(c, h)
    assert len(p1) + len(p2) == len(c) + 1
    assert h.index("1") in (p1.vertex_set(h) & p2.vertex_set(h))


def test_split_nonjoin_witness_sums_to_k_plus_2():
    # vertex x is a non-join shared by the opposite edges 0 and 2
    h = parse_h3("1 2 x\n2 3 b\n3 4 x\n4 1 d\n")
    c = BergeCycle(tuple(h.index(t) for t in "1234"), (0, 1, 2, 3))
    c.validate(h)
    p1, p2 = split_cycle(c, h)
    assert len(p1) + len(p2) == len(c) + 2
    assert h.index("x") in (p1.vertex_set(h) & p2.vertex_set(h))


@settings(max_examples=60)
@given(st_h.connected_instances(max_m=6))
def test_acyclicity_matches_bruteforce(h):
    assert is_acyclic(h) == brute_acyclic(h)


@settings(max_examples=60)
@given(st_h.connected_instances(max_m=6))
def test_find_cycle_finds_one_iff_cyclic(h):
    c = find_cycle(h)
    if c is None:
        assert brute_acyclic(h)
    else:
        c.validate(h)


@settings(max_examples=40)
@given(st_h.connected_instances(max_m=6))
def test_intersecting_pair_detection_matches_bruteforce(h):
    assert all_cycles_vertex_disjoint(h) == (not brute_has_intersecting_pair(h))


def test_minimal_cycle_pair_requires_distinct_sharing():
    h = parse_h3("1 2 3\n2 3 4\n")
    c = find_cycle(h)
    with pytest.raises(ValueError):
        minimal_cycle_pair(h, c, c)


@pytest.mark.parametrize("seed", range(40))
def test_minimal_cycle_pair_on_generated_instances(seed):
    h = gen_intersecting_cycles(seed)
    from tricover.cycles import _intersecting_cycle_pair

    pair = _intersecting_cycle_pair(h)
    assert pair is not None
    m1, m2 = minimal_cycle_pair(h, *pair)
    assert is_minimal_cycle(m1, h) and is_minimal_cycle(m2, h)
    assert m1.vertex_set(h) & m2.vertex_set(h)
    assert m1 != m2


def test_low_cut_example():
    h = parse_h3("1 2 3\n2 3 4\n1 5 6\n5 6 7\n")
    assert not all_cycles_vertex_disjoint(h)
    hit = find_low_cut_vertex(h)
    assert hit is not None
    v, count = hit
    assert h.labels[v] == "1"
    assert count == 2 == 2 * h.degree(v) - 2


def test_low_cut_none_when_cycles_disjoint():
    h = parse_h3("1 2 3\n2 3 4\n5 6 7\n6 7 8\n4 5 9\n")
    assert all_cycles_vertex_disjoint(h)
    assert find_low_cut_vertex(h) is None


@pytest.mark.parametrize("seed", range(60))
def test_low_cut_on_generated_instances(seed):
    h = gen_intersecting_cycles(seed)
    hit = find_low_cut_vertex(h)
    assert hit is not None
    v, count = hit
    recount = delete_vertices(h, (v,)).component_count()
    assert recount == count
    assert count <= 2 * h.degree(v) - 2


def test_cycle_tree_example():
    h = parse_h3("1 2 3\n2 3 4\n5 6 7\n6 7 8\n4 5 9\n")
    ct = build_cycle_tree(h)
    assert len(ct.cycles) == 2
    assert len(ct.trees) == 1 and sorted(ct.trees[0]) == [4]
    assert len(ct.links) == 2
    # every edge in exactly one node
    covered = sorted(
        [e for c in ct.cycles for e in c.edges] + [e for t in ct.trees for e in t]
    )
    assert covered == list(range(h.m))


def test_cycle_tree_single_cycle_and_rejections():
    h = parse_h3("1 2 3\n2 3 4\n")
    ct = build_cycle_tree(h)
    assert len(ct.cycles) == 1 and not ct.trees and not ct.links
    with pytest.raises(ValueError):
        build_cycle_tree(parse_h3("1 2 3\n4 5 6\n"))  # disconnected
    with pytest.raises(ValueError):
        build_cycle_tree(parse_h3("1 2 3\n2 3 4\n1 5 6\n5 6 7\n"))  # intersecting


def test_cycle_tree_acyclic_input_is_one_tree_node():
    h = parse_h3("1 2 3\n3 4 5\n")
    ct = build_cycle_tree(h)
    assert not ct.cycles and len(ct.trees) == 1 and not ct.links


@pytest.mark.parametrize("seed", range(40))
def test_split_contract_on_generated_cycles(seed):
    h, c = gen_nonminimal_cycle(seed)
    assert not is_minimal_cycle(c, h)
    p1, p2 = split_cycle(c, h)
    assert len(p1) < len(c) and len(p2) < len(c)
    assert len(p1) + len(p2) <= len(c) + 2
    assert p1.vertex_set(h) & p2.vertex_set(h)
    assert p1 != p2


@settings(max_examples=40)
@given(st_h.connected_instances(max_m=6))
def test_found_cycles_exist_in_brute_enumeration(h):
    c = find_cycle(h)
    if c is None:
        return
    from oracles import _normalize_cycle

    assert _normalize_cycle(c.joins, c.edges) in all_berge_cycles(h)
