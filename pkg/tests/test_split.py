import random

import pytest
from hypothesis import given, strategies as st

from b1enpg import build_split_rep
from b1enpg.cobip import GuardError
from b1enpg.graph import Graph
from b1enpg.grid import clique_union_check, non_splitting, verify_rep
from b1enpg.split import (
    SClass, SplitWitness, WitnessError, caterpillar_check, check_split_witness, false_twin_free,
    fixture_non_b1_split, set_size_inequalities, split_size_filter,
)
from b1enpg.split_search import brute_force_split_recognize, gen_random_split_witness


def star():
    return Graph(["c", "l1", "l2", "l3"], [("c", "l1"), ("c", "l2"), ("c", "l3")])


def star_witness():
    order = ("c", "l1")
    return SplitWitness.from_sigmas(
        {("L", "H"): order, ("R", "H"): order},
        {"l2": SClass("L", "H", 1, 1), "l3": SClass("R", "H", 1, 1)},
    )


@st.composite
def witnessed(draw):
    rng = random.Random(draw(st.integers(0, 2**32)))
    return gen_random_split_witness(rng, draw(st.integers(1, 7)), draw(st.integers(1, 10)))


def test_star_witness_passes_and_builds():
    g, w = star(), star_witness()
    assert check_split_witness(g, w)
    rep = build_split_rep(g, w)
    assert verify_rep(rep, g, 1)
    assert clique_union_check(rep, w.clique).ok


def test_non_contiguous_neighbourhood_fails_condition_i():
    g = Graph("abcs", [("a", "b"), ("b", "c"), ("a", "c"), ("s", "a"), ("s", "c")])
    w = SplitWitness.from_sigmas({("L", "H"): "abc", ("R", "H"): "abc"}, {"s": SClass("L", "H", 1, 3)})
    res = check_split_witness(g, w)
    assert not res and res.condition == "i" and res.vertices == ("s",)


def test_single_edge_split_graph():
    g = Graph("as", [("a", "s")], {"K": ["a"], "S": ["s"]})
    w = SplitWitness.from_sigmas({("L", "H"): "a", ("R", "H"): "a"}, {"s": SClass("L", "H", 1, 1)})
    rep = build_split_rep(g, w)
    assert non_splitting(rep["a"], rep["s"])


def test_malformed_witness_raises():
    with pytest.raises(WitnessError):
        SClass("L", "Q", 1, 1)
    bad = SplitWitness.from_sigmas({("L", "H"): "ab", ("R", "H"): "a"}, {})
    with pytest.raises(WitnessError):
        bad.validate()


@given(witnessed())
def test_generated_witnesses_build_valid_reps(case):
    g, w = case
    assert check_split_witness(g, w)
    rep = build_split_rep(g, w)
    assert verify_rep(rep, g, 1)
    assert clique_union_check(rep, w.clique).ok
    assert caterpillar_check(rep, w.clique).ok


@given(witnessed())
def test_size_inequalities_hold_on_witnesses(case):
    g, w = case
    assert set_size_inequalities(g, w) == []
    assert split_size_filter(g)


def test_fixture_sizes_and_filter():
    g = fixture_non_b1_split()
    k, s = g.annotations["K"], g.annotations["S"]
    assert (len(k), len(s)) == (11, 23)
    assert false_twin_free(g)
    res = split_size_filter(g)
    assert (res.passed, res.d, res.count, res.bound) == (False, 2, 23, 22)


def test_filter_passes_star():
    assert split_size_filter(star())


def test_brute_force_examples():
    w = brute_force_split_recognize(star())
    assert w is not None and check_split_witness(star(), w)
    # K2 with a pendant: an interval graph
    g = Graph("abc", [("a", "b"), ("b", "c")])
    assert brute_force_split_recognize(g) is not None
    with pytest.raises(GuardError):
        brute_force_split_recognize(fixture_non_b1_split())


@given(witnessed())
def test_brute_force_finds_generated_witness_graphs(case):
    g, _ = case
    if len(g.annotations["K"]) <= 5:
        w = brute_force_split_recognize(g)
        assert w is not None and check_split_witness(g, w)
