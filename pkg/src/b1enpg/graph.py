"""Immutable labeled graphs and the structural helpers the recognizers rely on."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping


class GraphFormatError(ValueError):
    """Raised when a graph file or edge list violates the simple-graph contract."""


class Graph:
    """A simple undirected graph over string labels.

    Instances are treated as values: every operation in this package returns
    a new graph.  ``annotations`` maps a name to a vertex set (e.g. the two
    cliques of a co-bipartite graph) and, when present, the sets partition V.
    """

    __slots__ = ("_vertices", "_adj", "_annotations", "_hash")

    def __init__(
        self,
        vertices: Iterable = (),
        edges: Iterable[tuple] = (),
        annotations: Mapping[str, Iterable] | None = None,
        *,
        strict: bool = False,
    ):
        order: dict[str, None] = {}
        for v in vertices:
            order[str(v)] = None
        adj: dict[str, set[str]] = {v: set() for v in order}
        for u, v in edges:
            u, v = str(u), str(v)
            if u == v:
                raise GraphFormatError(f"loop at {u!r}")
            for w in (u, v):
                if w not in adj:
                    order[w] = None
                    adj[w] = set()
            if strict and v in adj[u]:
                raise GraphFormatError(f"duplicate edge {u!r}-{v!r}")
            adj[u].add(v)
            adj[v].add(u)
        self._vertices = tuple(order)
        self._adj = {v: frozenset(adj[v]) for v in self._vertices}
        ann = {}
        if annotations:
            seen: set[str] = set()
            for name, part in annotations.items():
                part = frozenset(str(v) for v in part)
                if not part <= adj.keys():
                    raise GraphFormatError(f"annotation {name!r} names unknown vertices")
                if part & seen:
                    raise GraphFormatError(f"annotation {name!r} overlaps another part")
                seen |= part
                ann[str(name)] = part
            if seen != set(adj):
                raise GraphFormatError("annotation sets do not cover the vertex set")
        self._annotations = ann
        self._hash = None

    @classmethod
    def from_adjacency(cls, adj: Mapping[str, Iterable[str]], annotations=None) -> Graph:
        edges = [(u, v) for u, nbrs in adj.items() for v in nbrs if str(u) < str(v)]
        return cls(adj.keys(), edges, annotations)

    # -- basic queries -------------------------------------------------
    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def annotations(self) -> dict[str, frozenset[str]]:
        return dict(self._annotations)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __iter__(self):
        return iter(self._vertices)

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return sum(len(s) for s in self._adj.values()) // 2

    def edges(self) -> list[tuple[str, str]]:
        """Edges as sorted label pairs, in sorted order."""
        return sorted((u, v) for u in self._adj for v in self._adj[u] if u < v)

    def edge_set(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset((u, v)) for u, v in self.edges())

    # -- derived graphs ------------------------------------------------
    def induced(self, keep: Iterable[str]) -> Graph:
        keep = set(keep)
        verts = [v for v in self._vertices if v in keep]
        edges = [(u, v) for u in verts for v in self._adj[u] if v in keep and u < v]
        ann = None
        if self._annotations:
            ann = {k: p & keep for k, p in self._annotations.items()}
        return Graph(verts, edges, ann)

    def without(self, drop: Iterable[str]) -> Graph:
        drop = set(drop)
        return self.induced(v for v in self._vertices if v not in drop)

    def complement(self) -> Graph:
        verts = self._vertices
        edges = [(u, v) for u, v in combinations(verts, 2) if v not in self._adj[u]]
        return Graph(verts, edges)

    def with_annotations(self, annotations: Mapping[str, Iterable] | None) -> Graph:
        return Graph(self._vertices, self.edges(), annotations)

    def relabel(self, mapping: Mapping[str, str]) -> Graph:
        verts = [mapping.get(v, v) for v in self._vertices]
        edges = [(mapping.get(u, u), mapping.get(v, v)) for u, v in self.edges()]
        ann = {k: [mapping.get(v, v) for v in p] for k, p in self._annotations.items()}
        return Graph(verts, edges, ann or None)

    # -- value semantics -----------------------------------------------
    def __eq__(self, other) -> bool:
        # labeled equality; vertex order and annotations are presentation only
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset((v, nb) for v, nb in self._adj.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def is_clique(g: Graph, vs: Iterable[str]) -> bool:
    vs = list(vs)
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def is_stable(g: Graph, vs: Iterable[str]) -> bool:
    vs = list(vs)
    return not any(g.has_edge(u, v) for u, v in combinations(vs, 2))


def connected_components(g: Graph) -> list[Graph]:
    """Induced subgraphs of the connected components, ordered by first vertex."""
    seen: set[str] = set()
    comps = []
    for start in g.vertices:
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(g.induced(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(g) <= 1 or len(connected_components(g)) == 1


class PartitionRefinement:
    """Classic partition refinement over a fixed universe.

    ``refine(pivot)`` splits every class C into C & pivot and C - pivot in
    O(|pivot|) time, so refining by all closed neighbourhoods costs O(n + m).
    """

    def __init__(self, universe: Iterable):
        first = list(universe)
        self._classes: list[set] = [set(first)]
        self._owner = {x: 0 for x in first}

    def refine(self, pivot: Iterable) -> None:
        split: dict[int, int] = {}
        for x in pivot:
            c = self._owner.get(x)
            if c is None:
                continue
            if c not in split:
                split[c] = len(self._classes)
                self._classes.append(set())
            new = split[c]
            self._classes[c].discard(x)
            self._classes[new].add(x)
            self._owner[x] = new

    def classes(self) -> list[set]:
        return [c for c in self._classes if c]


def twin_classes(g: Graph) -> list[set[str]]:
    """Classes of vertices with equal closed neighbourhoods (true twins)."""
    pr = PartitionRefinement(g.vertices)
    for v in g.vertices:
        pr.refine(g.neighbors(v) | {v})
    return pr.classes()


def remove_twins(g: Graph) -> tuple[Graph, dict[str, str]]:
    """Delete true twins, keeping the lexicographically smallest of each class.

    Returns the reduced graph and a map from every removed vertex to the kept
    representative.  One refinement pass suffices: deleting a twin never makes
    two surviving vertices twins.
    """
    removed: dict[str, str] = {}
    for cls in twin_classes(g):
        if len(cls) > 1:
            keep = min(cls)
            for v in cls:
                if v != keep:
                    removed[v] = keep
    return g.without(removed), removed


def find_cobipartition(g: Graph) -> tuple[frozenset[str], frozenset[str]] | None:
    """Split V into two cliques, or return None.

    Two-colours the complement without building it (BFS over the unvisited
    set), then checks that both colour classes are cliques of ``g``.  The
    smallest vertex of every non-trivial complement component goes to K;
    universal vertices go to K' unless K would otherwise be empty.
    """
    verts = sorted(g.vertices)
    if not verts:
        return frozenset(), frozenset()
    unvisited = set(verts)
    colour: dict[str, int] = {}
    universal = []
    for start in verts:
        if start not in unvisited:
            continue
        unvisited.discard(start)
        colour[start] = 0
        members = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            nbrs = g.neighbors(u)
            nxt = [w for w in unvisited if w not in nbrs]
            for w in nxt:
                unvisited.discard(w)
                colour[w] = 1 - colour[u]
                members.append(w)
                queue.append(w)
        if len(members) == 1:
            universal.append(start)
            del colour[start]
    k = {v for v, c in colour.items() if c == 0}
    kp = {v for v, c in colour.items() if c == 1}
    for v in universal:
        if not k:
            k.add(v)
        else:
            kp.add(v)
    for part in (k, kp):
        size = len(part)
        for v in part:
            if sum(1 for w in g.neighbors(v) if w in part) != size - 1:
                return None
    return frozenset(k), frozenset(kp)


def find_split_partition(g: Graph) -> tuple[frozenset[str], frozenset[str]] | None:
    """Hammer-Simeone degree-sequence test; returns (K, S) with K maximal."""
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    degs = [g.degree(v) for v in order]
    if not order:
        return frozenset(), frozenset()
    m = max(i + 1 for i, d in enumerate(degs) if d >= i)
    lhs = sum(degs[:m])
    rhs = m * (m - 1) + sum(degs[m:])
    if lhs != rhs:
        return None
    k = set(order[:m])
    s = set(order[m:])
    # degree-sequence equality already forces clique/stable; kept as a guard
    if not is_clique(g, k) or not is_stable(g, s):
        return None
    for v in sorted(s):
        if k <= g.neighbors(v):
            k.add(v)
            s.discard(v)
            break
    return frozenset(k), frozenset(s)


def edge_label(u: str, v: str) -> str:
    a, b = sorted((u, v))
    return f"e:{a}-{b}"


def line_graph(g: Graph) -> Graph:
    edges = g.edges()
    by_vertex: dict[str, list[str]] = {v: [] for v in g.vertices}
    for u, v in edges:
        lab = edge_label(u, v)
        by_vertex[u].append(lab)
        by_vertex[v].append(lab)
    ledges = set()
    for labs in by_vertex.values():
        for a, b in combinations(labs, 2):
            ledges.add((min(a, b), max(a, b)))
    return Graph([edge_label(u, v) for u, v in edges], sorted(ledges))


@dataclass(frozen=True)
class RegularityReport:
    ok: bool
    bad_vertex: str | None = None
    diamond: tuple[str, str, str, str] | None = None


def check_regular_diamond_free(g: Graph, d: int) -> RegularityReport:
    """True iff every degree is ``d`` and no 4 vertices induce K4 - e.

    A diamond is an edge uv plus two non-adjacent common neighbours, which
    is what the scan looks for.
    """
    for v in g.vertices:
        if g.degree(v) != d:
            return RegularityReport(False, bad_vertex=v)
    for u, v in g.edges():
        common = sorted(g.neighbors(u) & g.neighbors(v))
        for x, y in combinations(common, 2):
            if not g.has_edge(x, y):
                return RegularityReport(False, diamond=(u, v, x, y))
    return RegularityReport(True)


def is_tree(g: Graph) -> bool:
    return len(g) >= 1 and g.m == len(g) - 1 and is_connected(g)
