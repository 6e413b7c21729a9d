"""One-bend representations of cycles and trees, and seeded instance generators."""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass

from .cobip import CoBipartite
from .graph import Graph, check_regular_diamond_free, is_tree
from .grid import LatticePath, Point, Representation, _incident
from .reduction import HamDecomposition

# Golden C4 layout: found by exhaustive search over one-bend paths of at most three edges
# in a 4x4 window (scripts/search_layouts.py) and frozen here; tests re-verify it.
C4_LAYOUT: tuple[tuple[Point, ...], ...] = (
    ((1, 2), (0, 2), (0, 0)),
    ((1, 0), (0, 0), (0, 1)),
    ((0, 0), (1, 0), (1, 1)),
    ((0, 2), (1, 2), (1, 0)),
)


def cycle_graph(k: int) -> Graph:
    labels = [f"c{i}" for i in range(k)]
    return Graph(labels, [(labels[i], labels[(i + 1) % k]) for i in range(k)])


def build_cycle_rep(k: int) -> Representation:
    """C_k with at most one bend per path.

    k = 3 uses three copies of one edge.  For k >= 4 the paths go round a
    rectangle: two one-bend corner paths at each end of the bottom side with
    k - 4 straight paths chained between them, each overlapping only its
    neighbours.  k = 4 uses the frozen search result.
    """
    if k < 3:
        raise ValueError("cycles need k >= 3")
    labels = [f"c{i}" for i in range(k)]
    if k == 3:
        p = LatticePath.through((0, 0), (1, 0))
        return Representation({v: p for v in labels})
    if k == 4:
        return Representation({v: LatticePath.through(*c) for v, c in zip(labels, C4_LAYOUT)})
    m = k - 4
    w = 2 * m + 5
    seq = [LatticePath.through((0, 2), (0, 0), (3, 0))]
    seq += [LatticePath.through((2 * j, 0), (2 * j + 3, 0)) for j in range(1, m + 1)]
    seq += [
        LatticePath.through((2 * m + 2, 0), (w, 0), (w, 2)),
        LatticePath.through((w, 1), (w, 3), (w - 2, 3)),
        LatticePath.through((w - 1, 3), (0, 3), (0, 1)),
    ]
    return Representation(dict(zip(labels, seq)))


# -------------------------------------------------------------------- trees

@dataclass(frozen=True)
class BoundingBox:
    """Axis-parallel rectangle with corners a, b, c, d counterclockwise."""

    a: Point
    b: Point
    c: Point
    d: Point

    def mapped(self, f) -> BoundingBox:
        return BoundingBox(f(self.a), f(self.b), f(self.c), f(self.d))

    def extent(self) -> tuple[int, int, int, int]:
        xs = [p[0] for p in (self.a, self.b, self.c, self.d)]
        ys = [p[1] for p in (self.a, self.b, self.c, self.d)]
        return min(xs), min(ys), max(xs), max(ys)


@dataclass
class TreeLayout:
    rep: Representation
    boxes: dict[str, BoundingBox]
    root: str


def _place(p: Point, y0: int, x0: int) -> Point:
    # rotate a quarter turn counterclockwise, then translate
    x, y = p
    return (x0 - y, y0 + x)


def _tree_frame(adj: dict[str, list[str]], v: str, parent: str | None):
    """Representation of the subtree at v in its own frame: box [0,W] x [0,H],
    a = (0,0) endpoint of P_v, b = (W,0) bend of P_v."""
    kids = [c for c in adj[v] if c != parent]
    if not kids:
        path = [(0, 0), (1, 0), (1, 1)]
        return {v: path}, 1, 1, {v: BoundingBox((0, 0), (1, 0), (1, 1), (0, 1))}
    frames = [_tree_frame(adj, c, v) for c in kids]
    w = 1 + max(h for _, _, h, _ in frames)
    corners: dict[str, list[Point]] = {}
    boxes: dict[str, BoundingBox] = {}
    y = 0
    for i, (c, (cpaths, cw, ch, cboxes)) in enumerate(zip(kids, frames)):
        def f(p, y=y):
            return _place(p, y, w)
        for u, pts in cpaths.items():
            corners[u] = [f(p) for p in pts]
        for u, box in cboxes.items():
            boxes[u] = box.mapped(f)
        if i > 0:
            # child root path starts at a_{T_i}; move that endpoint down to a_{T_1}
            corners[c] = [(w, 0)] + corners[c]
        y += cw + 1
    corners[v] = [(0, 0), (w, 0), (w, frames[0][1])]
    boxes[v] = BoundingBox((0, 0), (w, 0), (w, y - 1), (0, y - 1))
    return corners, w, y - 1, boxes


def build_tree_layout(t: Graph, root: str | None = None) -> TreeLayout:
    if not is_tree(t):
        raise ValueError("input is not a tree")
    root = min(t.vertices) if root is None else root
    adj = {v: sorted(t.neighbors(v)) for v in t.vertices}
    corners, _, _, boxes = _tree_frame(adj, root, None)
    rep = Representation({v: LatticePath.through(*pts) for v, pts in corners.items()})
    return TreeLayout(rep, boxes, root)


def build_tree_rep(t: Graph, root: str | None = None) -> Representation:
    """Inductive one-bend representation; children in sorted-label order."""
    return build_tree_layout(t, root).rep


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _boxes_disjoint(b1: BoundingBox, b2: BoundingBox) -> bool:
    x0, y0, x1, y1 = b1.extent()
    u0, v0, u1, v1 = b2.extent()
    return x1 < u0 or u1 < x0 or y1 < v0 or v1 < y0


def check_tree_invariants(layout: TreeLayout, t: Graph) -> list[str]:
    """Re-check the inductive invariants on the finished layout.

    For every subtree T_v: P_v has exactly one bend, at b, and an endpoint
    at a (or, for a non-first child, passes a and ends at the first child's a); no other path of T_v touches the side a-d; the children's boxes
    are disjoint with their a, b corners on one line in order.  Globally the
    union of all paths is a tree.
    """
    rep, boxes = layout.rep, layout.boxes
    problems = []
    children: dict[str, list[str]] = {v: [] for v in t.vertices}
    members: dict[str, list[str]] = {}
    order = [layout.root]
    parent = {layout.root: None}
    for v in order:
        for c in sorted(t.neighbors(v)):
            if c != parent[v]:
                parent[c] = v
                children[v].append(c)
                order.append(c)
    for v in reversed(order):
        members[v] = [v] + [u for c in children[v] for u in members[c]]
    for v in order:
        p, box = rep[v], boxes[v]
        if p.bends != 1:
            problems.append(f"P_{v} has {p.bends} bends")
        if p.bend_points() != [box.b]:
            problems.append(f"P_{v} does not bend at b")
        # a non-first child's root path was extended from its a to the first child's a
        up = parent[v]
        first = children[up][0] if up is not None else v
        end = box.a if first == v else boxes[first].a
        if end not in p.endpoints or box.a not in p.points:
            problems.append(f"a is not an endpoint of P_{v}")
        for u in members[v]:
            if u != v and any(_on_segment(q, box.a, box.d) for q in rep[u].points):
                problems.append(f"P_{u} touches the a-d side of T_{v}")
        kids = children[v]
        for i, c in enumerate(kids):
            for c2 in kids[i + 1:]:
                if not _boxes_disjoint(boxes[c], boxes[c2]):
                    problems.append(f"boxes of {c} and {c2} intersect")
        line = [q for c in kids for q in (boxes[c].a, boxes[c].b)]
        if line and not (len({q[0] for q in line}) == 1 or len({q[1] for q in line}) == 1):
            problems.append(f"children of {v} are not aligned")
        elif line and line != sorted(line) and line != sorted(line, reverse=True):
            problems.append(f"children of {v} are out of order")
    edges = rep.union_edges()
    if len(_incident(edges)) != len(edges) + 1:
        problems.append("union of paths is not a tree")
    return problems


def prufer_encode(t: Graph) -> list[int]:
    """Prufer sequence of a tree labelled 0..n-1 (n >= 2)."""
    n = len(t)
    adj = {int(v): {int(u) for u in t.neighbors(v)} for v in t.vertices}
    leaves = [v for v in adj if len(adj[v]) == 1]
    heapq.heapify(leaves)
    seq = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (nb,) = adj[leaf]
        seq.append(nb)
        adj[nb].discard(leaf)
        del adj[leaf]
        if len(adj[nb]) == 1:
            heapq.heappush(leaves, nb)
    return seq


def prufer_decode(seq: list[int], n: int | None = None) -> Graph:
    n = len(seq) + 2 if n is None else n
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph([str(v) for v in range(n)], [(str(a), str(b)) for a, b in edges])


def gen_random_tree(n: int, seed: int) -> Graph:
    if n < 1:
        raise ValueError("n >= 1")
    if n == 1:
        return Graph(["0"])
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


# ------------------------------------------------------------- co-bipartite

COBIP_MODELS = ("difference", "two-components", "noise")


def _level_edges(rng: random.Random, xs: list[str], ys: list[str]) -> list[tuple[str, str]]:
    t = rng.randint(1, max(1, min(len(xs), len(ys))))
    lx = {x: rng.randint(0, t) for x in xs}
    ly = {y: rng.randint(0, t) for y in ys}
    return [(x, y) for x in xs for y in ys if lx[x] + ly[y] > t]


def gen_random_cobip(kn: int, kn2: int, model: str = "difference", seed: int = 0, p: float = 0.5) -> Graph:
    """Annotated co-bipartite graph with cliques a0.. and b0..

    difference: cross edges follow a random level law i + j > t.
    two-components: each half of the vertices gets its own level law.
    noise: each cross edge independently with probability p.
    """
    if kn < 1 or kn2 < 1:
        raise ValueError("sizes must be >= 1")
    rng = random.Random(seed)
    k = [f"a{i}" for i in range(kn)]
    kp = [f"b{i}" for i in range(kn2)]
    if model == "difference":
        cross = _level_edges(rng, k, kp)
    elif model == "two-components":
        hk, hkp = (kn + 1) // 2, (kn2 + 1) // 2
        cross = _level_edges(rng, k[:hk], kp[:hkp])
        if k[hk:] and kp[hkp:]:
            cross += _level_edges(rng, k[hk:], kp[hkp:])
    elif model == "noise":
        cross = [(x, y) for x in k for y in kp if rng.random() < p]
    else:
        raise ValueError(f"unknown model {model!r}")
    return CoBipartite.from_cross_edges(k, kp, cross).to_graph()


def gen_sparse_difference(n: int, seed: int = 0) -> CoBipartite:
    """Difference-model instance with about n vertices and n / 2 cross edges,
    kept in implicit-clique form so that building it stays linear.

    t ~ sqrt(n) levels each hold one vertex per side; everything else sits at
    level 0 and is isolated in G_B.
    """
    rng = random.Random(seed)
    half = max(1, n // 2)
    t = max(1, min(half, math.isqrt(n)))
    k = [f"a{i}" for i in range(half)]
    kp = [f"b{i}" for i in range(n - half)]
    lx = {x: 0 for x in k}
    ly = {y: 0 for y in kp}
    for i, x in enumerate(rng.sample(k, t), start=1):
        lx[x] = i
    for j, y in enumerate(rng.sample(kp, min(t, len(kp))), start=1):
        ly[y] = j
    by_level: dict[int, list[str]] = {}
    for y, j in ly.items():
        by_level.setdefault(j, []).append(y)
    cross = [(x, y) for x, i in lx.items() if i for j in range(t - i + 1, t + 1) for y in by_level.get(j, ())]
    return CoBipartite.from_cross_edges(k, kp, cross)


# --------------------------------------------------------- 4-regular graphs

def gen_ham_decomposable_4regular(n: int, seed: int = 0, max_tries: int = 10_000) -> tuple[Graph, HamDecomposition]:
    """Union of two random edge-disjoint Hamiltonian cycles that is simple,
    4-regular and diamond-free; labels v00, v01, ..."""
    if n < 5:
        raise ValueError("need n >= 5 for two edge-disjoint Hamiltonian cycles")
    rng = random.Random(seed)
    width = len(str(n - 1))
    labels = [f"v{i:0{width}d}" for i in range(n)]
    for _ in range(max_tries):
        a = labels[:]
        b = labels[:]
        rng.shuffle(a)
        rng.shuffle(b)
        ea = {frozenset((a[i], a[(i + 1) % n])) for i in range(n)}
        eb = {frozenset((b[i], b[(i + 1) % n])) for i in range(n)}
        if ea & eb:
            continue
        g = Graph(labels, [tuple(sorted(e)) for e in ea | eb])
        if check_regular_diamond_free(g, 4).ok:
            return g, HamDecomposition(tuple(a), tuple(b))
    raise RuntimeError(f"no diamond-free decomposable graph after {max_tries} tries")
