from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from b1enpg.graph import (
    Graph, GraphFormatError, check_regular_diamond_free, connected_components, find_cobipartition,
    find_split_partition, is_clique, is_stable, line_graph, remove_twins,
)


def cycle(k, prefix="v"):
    vs = [f"{prefix}{i}" for i in range(k)]
    return Graph(vs, [(vs[i], vs[(i + 1) % k]) for i in range(k)])


def complete(vs):
    return Graph(vs, combinations(vs, 2))


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(range(n), chosen)


def test_components_examples():
    two = Graph("abcd", [("a", "b"), ("c", "d")])
    assert sorted(len(c) for c in connected_components(two)) == [2, 2]
    assert len(connected_components(cycle(5))) == 1
    assert [len(c) for c in connected_components(Graph("xyz"))] == [1, 1, 1]


def test_remove_twins_examples():
    g, removed = remove_twins(complete("abc"))
    assert len(g) == 1 and set(removed) | set(g.vertices) == set("abc")
    c5 = cycle(5)
    assert remove_twins(c5)[0] == c5
    # non-adjacent vertices with equal (empty) neighbourhoods are false twins: kept
    assert len(remove_twins(Graph("ab"))[0]) == 2


@given(graphs())
def test_remove_twins_leaves_no_twins(g):
    h, removed = remove_twins(g)
    for u, v in combinations(h.vertices, 2):
        if h.has_edge(u, v):
            assert h.neighbors(u) - {v} != h.neighbors(v) - {u}
    for v, rep in removed.items():
        assert g.has_edge(v, rep) and g.neighbors(v) - {rep} == g.neighbors(rep) - {v}


def test_cobipartition_examples():
    c4 = Graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    k, kp = find_cobipartition(c4)
    assert {k, kp} == {frozenset("ab"), frozenset("cd")}
    assert find_cobipartition(cycle(5)) is None
    k, kp = find_cobipartition(complete("abcd"))
    assert k and kp and k | kp == set("abcd")


@given(graphs())
def test_cobipartition_matches_brute_force(g):
    vs = g.vertices
    exists = any(
        is_clique(g, part) and is_clique(g, set(vs) - set(part))
        for r in range(len(vs) + 1) for part in combinations(vs, r)
    )
    res = find_cobipartition(g)
    assert (res is not None) == exists
    if res:
        assert is_clique(g, res[0]) and is_clique(g, res[1])


def test_split_partition_examples():
    star = Graph(["c", "l1", "l2", "l3"], [("c", "l1"), ("c", "l2"), ("c", "l3")])
    k, s = find_split_partition(star)
    assert len(k) == 2 and "c" in k and len(s) == 2
    assert is_clique(star, k) and is_stable(star, s)
    c4 = Graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    assert find_split_partition(c4) is None
    assert find_split_partition(complete("abc")) == (frozenset("abc"), frozenset())


@given(graphs())
def test_split_partition_matches_brute_force(g):
    vs = g.vertices
    exists = any(
        is_clique(g, part) and is_stable(g, set(vs) - set(part))
        for r in range(len(vs) + 1) for part in combinations(vs, r)
    )
    res = find_split_partition(g)
    assert (res is not None) == exists
    if res:
        k, s = res
        assert is_clique(g, k) and is_stable(g, s)
        # maximal: no stable vertex sees all of K
        assert not any(k <= g.neighbors(v) for v in s)


def test_line_graph_examples():
    assert line_graph(complete("abc")).m == 3
    p = line_graph(Graph("abc", [("a", "b"), ("b", "c")]))
    assert (p.n, p.m) == (2, 1)


def k33():
    return Graph([], [(f"a{i}", f"b{j}") for i in range(3) for j in range(3)])


def test_line_k33_is_4_regular_and_diamond_free():
    lk = line_graph(k33())
    assert (lk.n, lk.m) == (9, 18)
    assert check_regular_diamond_free(lk, 4).ok
    # brute force over all 4-subsets: none induces K4 - e
    for quad in combinations(lk.vertices, 4):
        assert sum(lk.has_edge(u, v) for u, v in combinations(quad, 2)) != 5


def test_regular_diamond_free_examples():
    assert check_regular_diamond_free(complete("abcd"), 3).ok
    diamond = Graph("abcd", [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d")])
    rep = check_regular_diamond_free(diamond, 3)
    assert not rep.ok


def test_strict_graph_rejects_duplicates_and_loops():
    with pytest.raises(GraphFormatError):
        Graph("ab", [("a", "b"), ("b", "a")], strict=True)
    with pytest.raises(GraphFormatError):
        Graph("a", [("a", "a")])
