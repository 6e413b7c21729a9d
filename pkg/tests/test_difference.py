from itertools import combinations

from hypothesis import given, strategies as st

from b1enpg.difference import DegreeLevels, MeetingSpec, TwoK2, build_meeting_rep, is_difference
from b1enpg.graph import Graph
from b1enpg.grid import enpg_from_rep


def has_induced_2k2(gb, left):
    for (x1, x2) in combinations(sorted(left), 2):
        for y1 in gb.neighbors(x1) - gb.neighbors(x2):
            for y2 in gb.neighbors(x2) - gb.neighbors(x1):
                return True
    return False


@st.composite
def bipartite(draw):
    a = draw(st.integers(1, 5))
    b = draw(st.integers(1, 5))
    left = [f"x{i}" for i in range(a)]
    right = [f"y{j}" for j in range(b)]
    pairs = [(x, y) for x in left for y in right]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True))
    return Graph(left + right, edges), left, right


def test_2k2_is_refused_with_its_vertices():
    g = Graph(["x1", "y1", "x2", "y2"], [("x1", "y1"), ("x2", "y2")])
    res = is_difference(g, ["x1", "x2"], ["y1", "y2"])
    assert isinstance(res, TwoK2) and set(res.vertices) == {"x1", "y1", "x2", "y2"}


def test_single_edge_levels():
    res = is_difference(Graph(["x", "y"], [("x", "y")]), ["x"], ["y"])
    assert res == DegreeLevels(1, {"x": 1}, {"y": 1})


def test_p4_is_difference():
    p4 = Graph("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
    assert isinstance(is_difference(p4, "ac", "bd"), DegreeLevels)
    assert not has_induced_2k2(p4, "ac")


@given(bipartite())
def test_certificates_are_sound(case):
    g, left, right = case
    res = is_difference(g, left, right)
    if isinstance(res, TwoK2):
        x1, y1, x2, y2 = res.vertices
        assert g.has_edge(x1, y1) and g.has_edge(x2, y2)
        assert not g.has_edge(x1, y2) and not g.has_edge(x2, y1)
    else:
        assert not has_induced_2k2(g, left)
        for x in left:
            for y in right:
                assert res.adjacent(x, y) == g.has_edge(x, y)


@given(bipartite())
def test_meeting_rep_realises_cross_edges(case):
    g, left, right = case
    res = is_difference(g, left, right)
    if isinstance(res, TwoK2):
        return
    rep = build_meeting_rep(g, left, right, MeetingSpec((0, 0), (res.t + 2, 0)))
    enpg, _ = enpg_from_rep(rep)
    for x in left:
        for y in right:
            assert enpg.has_edge(x, y) == g.has_edge(x, y)


def test_meeting_examples():
    g = Graph(["x", "y"], [("x", "y")])
    rep = build_meeting_rep(g, ["x"], ["y"], MeetingSpec((0, 0), (3, 0)))
    assert rep["x"].edge_set() & rep["y"].edge_set()
    empty = Graph(["x", "y"])
    rep = build_meeting_rep(empty, ["x"], ["y"], MeetingSpec((0, 0), (3, 0)))
    assert not rep["x"].edge_set() & rep["y"].edge_set()
