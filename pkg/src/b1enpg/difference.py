"""Difference (bipartite chain) graphs: recognition with certificates and the
collinear "meeting" layout used by every co-bipartite builder."""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Mapping

from .graph import Graph
from .grid import LatticePath, Point, Representation


@dataclass(frozen=True)
class DegreeLevels:
    """Level of every vertex of a difference graph.

    A vertex's level is the rank of its degree among the distinct non-zero
    degrees on its side (0 for isolated vertices).  x in level i and y in
    level j are adjacent iff i + j > t.
    """

    t: int
    x_levels: Mapping[str, int]
    y_levels: Mapping[str, int]

    def adjacent(self, x: str, y: str) -> bool:
        return self.x_levels[x] + self.y_levels[y] > self.t

    def to_json(self) -> dict:
        return {"t": self.t, "x_levels": dict(sorted(self.x_levels.items())),
                "y_levels": dict(sorted(self.y_levels.items()))}


@dataclass(frozen=True)
class TwoK2:
    """Four vertices inducing two disjoint edges x1-y1 and x2-y2."""

    x1: str
    y1: str
    x2: str
    y2: str

    @property
    def vertices(self) -> tuple[str, str, str, str]:
        return (self.x1, self.y1, self.x2, self.y2)

    def to_json(self) -> dict:
        return {"kind": "2K2", "vertices": list(self.vertices)}


def difference_levels(
    adj: Mapping[str, AbstractSet[str]],
    left: Iterable[str],
    right: Iterable[str],
    skip: AbstractSet[str] = frozenset(),
) -> DegreeLevels | TwoK2:
    """Core O(n + m) test on a bipartite adjacency restricted to left/right - skip.

    Left vertices sorted by degree must have nested neighbourhoods; the first
    non-nested consecutive pair yields a 2K2.
    """
    left = [x for x in left if x not in skip]
    right = [y for y in right if y not in skip]
    rset = set(right)

    def nbrs(v):
        nb = adj[v]
        if skip:
            return [w for w in nb if w not in skip]
        return nb

    ldeg = {x: len(nbrs(x)) for x in left}
    buckets: list[list[str]] = [[] for _ in range(len(right) + 1)]
    for x in left:
        buckets[ldeg[x]].append(x)
    by_deg = [x for b in reversed(buckets) for x in b]
    for a, b in zip(by_deg, by_deg[1:]):
        if ldeg[b] == 0:
            break
        na = adj[a]
        for y in nbrs(b):
            if y not in na:
                nb_b = adj[b]
                y2 = next(w for w in nbrs(a) if w not in nb_b)
                return TwoK2(a, y2, b, y)
    rdeg = {y: 0 for y in right}
    for x in left:
        for y in nbrs(x):
            if y in rset:
                rdeg[y] += 1
    xs = sorted({d for d in ldeg.values() if d})
    ys = sorted({d for d in rdeg.values() if d})
    xrank = {d: i + 1 for i, d in enumerate(xs)}
    yrank = {d: i + 1 for i, d in enumerate(ys)}
    xl = {x: xrank.get(ldeg[x], 0) for x in left}
    yl = {y: yrank.get(rdeg[y], 0) for y in right}
    t = len(xs)
    if len(ys) != t:
        raise AssertionError("nested neighbourhoods must give equal level counts")
    # level law check: count of right vertices at level >= t - i + 1 equals deg
    at_least = [0] * (t + 2)
    for y in right:
        at_least[yl[y]] += 1
    for j in range(t - 1, -1, -1):
        at_least[j] += at_least[j + 1]
    for x in left:
        i = xl[x]
        want = at_least[t - i + 1] if i else 0
        if want != ldeg[x] or any(yl[y] <= t - i for y in nbrs(x)):
            raise AssertionError(f"level law violated at {x}")
    return DegreeLevels(t, xl, yl)


def is_difference(gb: Graph, left: Iterable[str], right: Iterable[str]) -> DegreeLevels | TwoK2:
    """Recognize a difference graph with the given sides.

    Returns the degree levels on success, or an induced 2K2 otherwise.
    Raises ValueError if an edge lies inside one side.
    """
    left = list(left)
    right = list(right)
    lset, rset = set(left), set(right)
    if lset & rset or (lset | rset) != set(gb.vertices):
        raise ValueError("sides must partition the vertex set")
    for u, v in gb.edges():
        if (u in lset) == (v in lset):
            raise ValueError(f"edge {u}-{v} lies inside one side")
    adj = {v: gb.neighbors(v) for v in gb.vertices}
    return difference_levels(adj, sorted(left), sorted(right))


@dataclass(frozen=True)
class MeetingSpec:
    segment_start: Point
    segment_end: Point

    @property
    def orientation(self) -> str:
        return "horizontal" if self.segment_start[1] == self.segment_end[1] else "vertical"

    @property
    def length(self) -> int:
        (x0, y0), (x1, y1) = self.segment_start, self.segment_end
        return abs(x1 - x0) + abs(y1 - y0)

    def anchor(self, k: int) -> Point:
        """Point at anchor index k; index -1 is the segment start."""
        (x0, y0), (x1, y1) = self.segment_start, self.segment_end
        dx = (x1 > x0) - (x1 < x0)
        dy = (y1 > y0) - (y1 < y0)
        return (x0 + (k + 1) * dx, y0 + (k + 1) * dy)


def meeting_paths(levels: DegreeLevels, spec: MeetingSpec) -> dict[str, LatticePath]:
    """Collinear paths along the segment: left side from anchor -1 to its
    level, right side from anchor t - level to anchor t + 1."""
    (x0, y0), (x1, y1) = spec.segment_start, spec.segment_end
    if x0 != x1 and y0 != y1:
        raise ValueError("meeting segment must be axis parallel")
    t = levels.t
    if spec.length < t + 2:
        raise ValueError(f"segment length {spec.length} < t + 2 = {t + 2}")
    out = {}
    for x, i in levels.x_levels.items():
        out[x] = LatticePath.through(spec.anchor(-1), spec.anchor(i))
    for y, j in levels.y_levels.items():
        out[y] = LatticePath.through(spec.anchor(t - j), spec.anchor(t + 1))
    return out


def build_meeting_rep(gb: Graph, left: Iterable[str], right: Iterable[str], spec: MeetingSpec) -> Representation:
    """Paths for both sides that meet at the segment and realise E(gb) across."""
    res = is_difference(gb, left, right)
    if isinstance(res, TwoK2):
        raise ValueError(f"not a difference graph: 2K2 on {res.vertices}")
    return Representation(meeting_paths(res, spec))
