"""Bounded exhaustive search for ENPG representations with few bends.

Candidate paths are enumerated once per window; the ~ relation between all
pairs is stored as Python-int bitsets so the search itself only intersects
masks.  The first vertex is restricted to one path per orbit of the window's
eight symmetries.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph
from .grid import LatticePath, Representation


def window_paths(size: int, max_edges: int, allow_straight: bool = False) -> list[LatticePath]:
    """All paths with exactly one bend (plus straight ones if allowed) whose
    points lie in [0, size-1]^2 and that have at most max_edges edges.
    Each path appears once (one orientation)."""
    out: dict[tuple, LatticePath] = {}
    rng = range(size)
    for cx in rng:
        for cy in rng:
            for hx in (-1, 1):
                for vy in (-1, 1):
                    for a in range(1, max_edges):
                        for b in range(1, max_edges - a + 1):
                            x1, y1 = cx + hx * a, cy + vy * b
                            if x1 in rng and y1 in rng:
                                p = LatticePath.through((x1, cy), (cx, cy), (cx, y1))
                                out.setdefault(_key(p), p)
    if allow_straight:
        for y in rng:
            for x0 in rng:
                for length in range(1, max_edges + 1):
                    if x0 + length < size:
                        for p in (LatticePath.through((x0, y), (x0 + length, y)),
                                  LatticePath.through((y, x0), (y, x0 + length))):
                            out.setdefault(_key(p), p)
    return [out[k] for k in sorted(out)]


def _key(p: LatticePath) -> tuple:
    return min(p.points, p.points[::-1])


def _symmetries(size: int):
    m = size - 1
    return [
        lambda x, y: (x, y), lambda x, y: (m - x, y), lambda x, y: (x, m - y), lambda x, y: (m - x, m - y),
        lambda x, y: (y, x), lambda x, y: (m - y, x), lambda x, y: (y, m - x), lambda x, y: (m - y, m - x),
    ]


@dataclass
class PathSpace:
    size: int
    paths: list[LatticePath]
    nonsplit: list[int]
    orbit_reps: int
    index: dict[tuple, int] = field(default_factory=dict)

    @classmethod
    def build(cls, size: int, max_edges: int, allow_straight: bool = False) -> PathSpace:
        paths = window_paths(size, max_edges, allow_straight)
        index = {_key(p): i for i, p in enumerate(paths)}
        edge_sets = [p.edge_set() for p in paths]
        incid = []
        by_edge: dict[tuple, list[int]] = defaultdict(list)
        for i, es in enumerate(edge_sets):
            inc: dict = defaultdict(set)
            for e in es:
                by_edge[e].append(i)
                inc[e[0]].add(e)
                inc[e[1]].add(e)
            incid.append(inc)
        # a path is ~ itself: two vertices may share an identical path
        bits = [1 << i for i in range(len(paths))]
        for owners in by_edge.values():
            for i, j in combinations(owners, 2):
                if (bits[i] >> j) & 1:
                    continue
                ii, ij = incid[i], incid[j]
                if all(len(ii[x] | ij[x]) < 3 for x in ii.keys() & ij.keys()):
                    bits[i] |= 1 << j
                    bits[j] |= 1 << i
        # one representative per symmetry orbit for the first vertex
        reps = 0
        syms = _symmetries(size)
        for i, p in enumerate(paths):
            images = [_key(LatticePath(tuple(f(x, y) for x, y in p.points))) for f in syms]
            if min(index[k] for k in images) == i:
                reps |= 1 << i
        return cls(size, paths, bits, reps, index)


@dataclass
class SearchResult:
    rep: Representation | None
    nodes: int
    candidates: int


def search_representation(g: Graph, space: PathSpace, order: list[str] | None = None,
                          node_limit: int | None = None) -> SearchResult:
    """Depth-first search for a labelled representation of g in the space."""
    order = list(order or sorted(g.vertices))
    full = (1 << len(space.paths)) - 1
    chosen: list[int] = []
    nodes = 0

    def rec(depth: int) -> bool:
        nonlocal nodes
        if depth == len(order):
            return True
        v = order[depth]
        mask = space.orbit_reps if depth == 0 else full
        for u, pi in zip(order, chosen):
            rel = space.nonsplit[pi]
            mask &= rel if g.has_edge(u, v) else ~rel
            if not mask:
                return False
        while mask:
            low = mask & -mask
            i = low.bit_length() - 1
            mask ^= low
            nodes += 1
            if node_limit is not None and nodes > node_limit:
                raise RuntimeError("node limit reached")
            chosen.append(i)
            if rec(depth + 1):
                return True
            chosen.pop()
        return False

    found = rec(0)
    rep = Representation({v: space.paths[i] for v, i in zip(order, chosen)}) if found else None
    return SearchResult(rep, nodes, len(space.paths))
