import pytest
from hypothesis import given, strategies as st

from b1enpg.graph import Graph
from b1enpg.grid import (
    LatticePath, RelationKind, Representation, clique_union_check, enpg_from_rep, path_bends,
    path_relation, verify_rep,
)

P = LatticePath.through


def c3_rep():
    e = P((0, 0), (1, 0))
    return Representation({"a": e, "b": e, "c": e})


def test_bends():
    assert path_bends(LatticePath(((0, 0), (1, 0), (2, 0)))) == (0, [])
    assert path_bends(LatticePath(((0, 0), (1, 0), (1, 1)))) == (1, [(1, 0)])
    assert path_bends(LatticePath(((0, 0), (1, 0), (1, 1), (2, 1))))[0] == 2


def test_lattice_path_rejects_gaps():
    with pytest.raises(ValueError):
        LatticePath(((0, 0), (2, 0)))


def test_path_relation_examples():
    straight = LatticePath(((0, 0), (1, 0), (2, 0)))
    assert path_relation(straight, LatticePath(((1, 0), (2, 0), (2, 1)))).kind is RelationKind.NON_SPLITTING
    rel = path_relation(straight, LatticePath(((0, 0), (1, 0), (1, 1))))
    assert rel.kind is RelationKind.SPLITTING and rel.split_points == {(1, 0)}
    touch = path_relation(LatticePath(((0, 0), (1, 0))), LatticePath(((1, 0), (1, 1))))
    assert touch.kind is RelationKind.DISJOINT


@st.composite
def one_bend_paths(draw):
    c = (draw(st.integers(-3, 3)), draw(st.integers(-3, 3)))
    a = draw(st.integers(-3, 3).filter(bool))
    b = draw(st.integers(-3, 3))
    pts = [(c[0] + a, c[1]), c] + ([(c[0], c[1] + b)] if b else [])
    return P(*pts)


@given(one_bend_paths(), one_bend_paths())
def test_relation_is_symmetric(p, q):
    r1, r2 = path_relation(p, q), path_relation(q, p)
    assert r1.kind == r2.kind and r1.split_points == r2.split_points


def test_enpg_examples():
    enpg, epg = enpg_from_rep(c3_rep())
    assert enpg.m == 3 and epg.m == 3
    split = Representation({"p": P((0, 0), (2, 0)), "q": P((0, 0), (1, 0), (1, 1))})
    enpg, epg = enpg_from_rep(split)
    assert epg.m == 1 and enpg.m == 0
    apart = Representation({"p": P((0, 0), (1, 0)), "q": P((0, 1), (1, 1))})
    assert all(g.m == 0 for g in enpg_from_rep(apart))


def test_verify_examples():
    k3 = Graph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert verify_rep(c3_rep(), k3, 1)
    c4 = Graph("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])
    e = P((0, 0), (1, 0))
    rep4 = Representation({v: e for v in "abcd"})
    res = verify_rep(rep4, c4, 1)
    assert not res and "edge" in res.diagnostics[0]
    bendy = Representation({"a": P((0, 0), (1, 0), (1, 1), (2, 1))})
    res = verify_rep(bendy, Graph("a"), 1)
    assert not res and "path a" in res.diagnostics[0]


def test_clique_union_examples():
    res = clique_union_check(c3_rep(), "abc")
    assert res.ok and res.common_edge == ((0, 0), (1, 0))
    single = clique_union_check(Representation({"a": P((0, 0), (1, 0), (1, 1))}), ["a"])
    assert single.ok and single.common_edge in P((0, 0), (1, 0), (1, 1)).edge_set()
