import pytest
from hypothesis import given, strategies as st

from b1enpg import build_cycle_rep, build_tree_rep, verify_rep
from b1enpg.constructions import (
    C4_LAYOUT, build_tree_layout, check_tree_invariants, cycle_graph, gen_ham_decomposable_4regular,
    gen_random_cobip, gen_random_tree, prufer_decode, prufer_encode,
)
from b1enpg.graph import Graph, check_regular_diamond_free
from b1enpg.grid import edges_form_path, enpg_from_rep, non_splitting
from b1enpg.search import PathSpace, search_representation


@pytest.mark.parametrize("k", range(3, 21))
def test_cycles(k):
    rep = build_cycle_rep(k)
    assert verify_rep(rep, cycle_graph(k), 1)


def test_c3_is_three_identical_edges():
    rep = build_cycle_rep(3)
    assert len({rep[v] for v in rep.labels}) == 1 and len(rep["c0"]) == 1
    assert enpg_from_rep(rep)[0].m == 3


def test_c4_golden_layout_is_reproducible():
    assert all(len(corners) == 3 for corners in C4_LAYOUT)
    res = search_representation(cycle_graph(4), PathSpace.build(4, 3))
    assert res.rep is not None and verify_rep(res.rep, cycle_graph(4), 1)


def test_cycle_rejects_small_k():
    with pytest.raises(ValueError):
        build_cycle_rep(2)


def test_tree_examples():
    rep = build_tree_rep(Graph(["x"]))
    assert rep["x"].bends == 1
    star = Graph([], [("c", "l1"), ("c", "l2"), ("c", "l3")])
    rep = build_tree_rep(star, "c")
    assert verify_rep(rep, star, 1)
    assert all(non_splitting(rep["c"], rep[leaf]) for leaf in ("l1", "l2", "l3"))
    p5 = Graph([], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")])
    assert verify_rep(build_tree_rep(p5), p5, 1)


def _acyclic(edges):
    pts = {p for e in edges for p in e}
    parent = {p: p for p in pts}

    def find(p):
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


@given(st.integers(1, 40), st.integers(0, 10**6))
def test_random_trees(n, seed):
    t = gen_random_tree(n, seed)
    layout = build_tree_layout(t)
    assert verify_rep(layout.rep, t, 1)
    assert all(layout.rep[v].bends == 1 for v in layout.rep.labels)
    assert _acyclic(layout.rep.union_edges())
    assert check_tree_invariants(layout, t) == []


def test_tree_generator_examples():
    assert gen_random_tree(1, 0).n == 1
    assert gen_random_tree(5, 7).m == 4


@given(st.integers(2, 30), st.integers(0, 10**6))
def test_prufer_round_trip(n, seed):
    t = gen_random_tree(n, seed)
    assert prufer_decode(prufer_encode(t), n) == t


def test_generators_are_deterministic():
    assert gen_random_tree(20, 3) == gen_random_tree(20, 3)
    assert gen_random_cobip(6, 7, "noise", 5) == gen_random_cobip(6, 7, "noise", 5)
    assert gen_ham_decomposable_4regular(10, 2) == gen_ham_decomposable_4regular(10, 2)


@given(st.integers(8, 14), st.integers(0, 1000))
def test_4regular_generator(n, seed):
    g, d = gen_ham_decomposable_4regular(n, seed)
    assert g.m == 2 * n and all(g.degree(v) == 4 for v in g.vertices)
    assert check_regular_diamond_free(g, 4).ok


def test_edges_form_path_rejects_branching():
    assert edges_form_path({((0, 0), (1, 0)), ((1, 0), (2, 0)), ((1, 0), (1, 1))}) is None
