"""Lattice paths on the integer grid and the ENPG / EPG intersection oracle."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable, Mapping

from .graph import Graph

Point = tuple[int, int]
Edge = tuple[Point, Point]


def grid_edge(p: Point, q: Point) -> Edge:
    return (p, q) if p <= q else (q, p)


@dataclass(frozen=True)
class LatticePath:
    """A simple rectilinear path given by its full sequence of grid points."""

    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple((int(x), int(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2:
            raise ValueError("a lattice path needs at least one edge")
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if abs(x0 - x1) + abs(y0 - y1) != 1:
                raise ValueError(f"non-unit step {(x0, y0)} -> {(x1, y1)}")
        if len(set(pts)) != len(pts):
            raise ValueError("lattice path revisits a point")

    @classmethod
    def through(cls, *corners: Point) -> LatticePath:
        """Build a path from axis-parallel corner points, filling unit steps."""
        pts = [tuple(corners[0])]
        for (x1, y1) in corners[1:]:
            x0, y0 = pts[-1]
            if x0 != x1 and y0 != y1:
                raise ValueError("corners must be axis aligned")
            dx = (x1 > x0) - (x1 < x0)
            dy = (y1 > y0) - (y1 < y0)
            while (x0, y0) != (x1, y1):
                x0, y0 = x0 + dx, y0 + dy
                pts.append((x0, y0))
        return cls(tuple(pts))

    def __len__(self) -> int:
        return len(self.points) - 1

    @property
    def endpoints(self) -> tuple[Point, Point]:
        return self.points[0], self.points[-1]

    def edges(self) -> list[Edge]:
        return [grid_edge(p, q) for p, q in zip(self.points, self.points[1:])]

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    def bend_points(self) -> list[Point]:
        out = []
        pts = self.points
        for a, b, c in zip(pts, pts[1:], pts[2:]):
            if (a[0] == b[0]) != (b[0] == c[0]):
                out.append(b)
        return out

    @property
    def bends(self) -> int:
        return len(self.bend_points())

    def translated(self, dx: int, dy: int) -> LatticePath:
        return LatticePath(tuple((x + dx, y + dy) for x, y in self.points))


def path_bends(p: LatticePath) -> tuple[int, list[Point]]:
    pts = p.bend_points()
    return len(pts), pts


class RelationKind(str, Enum):
    DISJOINT = "disjoint"
    SPLITTING = "splitting"
    NON_SPLITTING = "non-splitting"


@dataclass(frozen=True)
class PathRelation:
    kind: RelationKind
    segments: tuple[LatticePath, ...] = ()
    split_points: frozenset[Point] = field(default_factory=frozenset)


def _incident(edges: Iterable[Edge]) -> dict[Point, set[Edge]]:
    inc: dict[Point, set[Edge]] = defaultdict(set)
    for e in edges:
        inc[e[0]].add(e)
        inc[e[1]].add(e)
    return inc


def split_points(p: LatticePath, q: LatticePath) -> frozenset[Point]:
    """Points of degree >= 3 in the (simple) union of the two paths."""
    inc_p = _incident(p.edges())
    inc_q = _incident(q.edges())
    return frozenset(x for x in inc_p.keys() & inc_q.keys() if len(inc_p[x] | inc_q[x]) >= 3)


def path_relation(p: LatticePath, q: LatticePath) -> PathRelation:
    shared = p.edge_set() & q.edge_set()
    if not shared:
        return PathRelation(RelationKind.DISJOINT)
    segments = []
    run: list[Point] = []
    for a, b in zip(p.points, p.points[1:]):
        if grid_edge(a, b) in shared:
            if not run:
                run = [a]
            run.append(b)
        elif run:
            segments.append(LatticePath(tuple(run)))
            run = []
    if run:
        segments.append(LatticePath(tuple(run)))
    splits = split_points(p, q)
    kind = RelationKind.SPLITTING if splits else RelationKind.NON_SPLITTING
    return PathRelation(kind, tuple(segments), splits)


def non_splitting(p: LatticePath, q: LatticePath) -> bool:
    return bool(p.edge_set() & q.edge_set()) and not split_points(p, q)


@dataclass(frozen=True)
class Representation:
    """One lattice path per vertex label."""

    paths: Mapping[str, LatticePath]

    def __post_init__(self):
        object.__setattr__(self, "paths", {str(k): v for k, v in self.paths.items()})

    @property
    def labels(self) -> list[str]:
        return sorted(self.paths)

    def __getitem__(self, label: str) -> LatticePath:
        return self.paths[label]

    def __len__(self) -> int:
        return len(self.paths)

    def max_bends(self) -> int:
        return max((p.bends for p in self.paths.values()), default=0)

    def bounds(self) -> tuple[int, int, int, int]:
        xs = [x for p in self.paths.values() for x, _ in p.points]
        ys = [y for p in self.paths.values() for _, y in p.points]
        return min(xs), min(ys), max(xs), max(ys)

    def union_edges(self, labels: Iterable[str] | None = None) -> set[Edge]:
        labels = self.paths.keys() if labels is None else labels
        out: set[Edge] = set()
        for v in labels:
            out |= self.paths[v].edge_set()
        return out

    def restricted(self, labels: Iterable[str]) -> Representation:
        return Representation({v: self.paths[v] for v in labels})

    def merged(self, other: Mapping[str, LatticePath]) -> Representation:
        return Representation({**self.paths, **other})


def enpg_from_rep(rep: Representation) -> tuple[Graph, Graph]:
    """Return (ENPG graph, EPG graph) of the representation.

    Only pairs sharing a grid edge are examined, found through an edge index.
    """
    by_edge: dict[Edge, list[str]] = defaultdict(list)
    for v, p in rep.paths.items():
        for e in p.edge_set():
            by_edge[e].append(v)
    epg_pairs: set[tuple[str, str]] = set()
    for owners in by_edge.values():
        for a, b in combinations(sorted(owners), 2):
            epg_pairs.add((a, b))
    enpg_pairs = [(a, b) for a, b in sorted(epg_pairs) if not split_points(rep[a], rep[b])]
    labels = rep.labels
    return Graph(labels, enpg_pairs), Graph(labels, sorted(epg_pairs))


@dataclass
class VerifyReport:
    ok: bool
    diagnostics: list[str]

    def __bool__(self) -> bool:
        return self.ok


def verify_rep(rep: Representation, g: Graph, max_bends: int) -> VerifyReport:
    """Check bend budget and labeled equality of the ENPG graph with ``g``."""
    if set(rep.paths) != set(g.vertices):
        missing = sorted(set(g.vertices) - set(rep.paths))
        extra = sorted(set(rep.paths) - set(g.vertices))
        raise ValueError(f"vertex sets differ: missing={missing} extra={extra}")
    diags = []
    for v in rep.labels:
        b = rep[v].bends
        if b > max_bends:
            diags.append(f"path {v} has {b} bends (max {max_bends})")
            break
    enpg, _ = enpg_from_rep(rep)
    want = set(g.edges())
    got = set(enpg.edges())
    for u, v in sorted(want - got):
        diags.append(f"missing edge {u}-{v}")
        break
    for u, v in sorted(got - want):
        diags.append(f"extra edge {u}-{v}")
        break
    return VerifyReport(not diags, diags)


def edges_form_path(edges: set[Edge]) -> list[Point] | None:
    """Order an edge set as a simple path, or None if it is not one."""
    if not edges:
        return None
    inc = _incident(edges)
    if any(len(s) > 2 for s in inc.values()):
        return None
    ends = [x for x, s in inc.items() if len(s) == 1]
    if len(ends) != 2 or len(inc) != len(edges) + 1:
        return None
    walk = [min(ends)]
    prev = None
    while True:
        nxt = [e for e in inc[walk[-1]] if e != prev]
        if not nxt:
            break
        prev = nxt[0]
        walk.append(prev[1] if prev[0] == walk[-1] else prev[0])
    return walk if len(walk) == len(inc) else None


@dataclass(frozen=True)
class CliqueUnion:
    ok: bool
    union: LatticePath | None
    common_edge: Edge | None


def clique_union_check(rep: Representation, clique: Iterable[str]) -> CliqueUnion:
    """Union of a clique's paths must be a path with <= 2 bends sharing an edge."""
    clique = sorted(set(clique))
    for a, b in combinations(clique, 2):
        if not non_splitting(rep[a], rep[b]):
            raise ValueError(f"{a} and {b} are not adjacent in the represented graph")
    walk = edges_form_path(rep.union_edges(clique))
    union = LatticePath(tuple(walk)) if walk else None
    common = set.intersection(*(set(rep[v].edges()) for v in clique)) if clique else set()
    edge = min(common) if common else None
    ok = union is not None and union.bends <= 2 and edge is not None
    return CliqueUnion(ok, union, edge)
