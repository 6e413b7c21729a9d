"""Linear-time recognition of one-bend ENPG co-bipartite graphs, with
certificates, and the Type I / Type II representation builders."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from typing import AbstractSet, Iterable, Mapping

from .difference import DegreeLevels, MeetingSpec, TwoK2, difference_levels, meeting_paths
from .graph import Graph, PartitionRefinement, find_cobipartition
from .grid import LatticePath, Representation

K_NAME = "K"
KP_NAME = "Kp"

# zed size <= 4 and branching <= 4 bound the recursion by 5**5 difference tests
MAX_DIFFERENCE_CHECKS = 5 ** 5


class NotCoBipartiteError(ValueError):
    pass


@dataclass(frozen=True)
class CoBipartite:
    """A co-bipartite graph stored as its two cliques plus cross edges only.

    Keeping the clique edges implicit is what makes the recognizer linear in
    |K| + |K'| + |E| rather than in the size of the full graph.
    """

    k: frozenset[str]
    kp: frozenset[str]
    cross: Mapping[str, frozenset[str]]

    @classmethod
    def from_cross_edges(cls, k: Iterable, kp: Iterable, edges: Iterable[tuple]) -> CoBipartite:
        k = frozenset(map(str, k))
        kp = frozenset(map(str, kp))
        if k & kp:
            raise ValueError("cliques overlap")
        adj: dict[str, set[str]] = {v: set() for v in k | kp}
        for u, v in edges:
            u, v = str(u), str(v)
            if (u in k) == (v in k):
                raise ValueError(f"{u}-{v} is not a cross edge")
            adj[u].add(v)
            adj[v].add(u)
        return cls(k, kp, {v: frozenset(s) for v, s in adj.items()})

    @classmethod
    def from_graph(cls, g: Graph) -> CoBipartite:
        """Use the graph's K / Kp annotation when present, else search for one."""
        ann = g.annotations
        if K_NAME in ann and KP_NAME in ann:
            k, kp = ann[K_NAME], ann[KP_NAME]
            for part in (k, kp):
                for v in part:
                    if len(g.neighbors(v) & part) != len(part) - 1:
                        raise NotCoBipartiteError(f"annotated part containing {v} is not a clique")
        else:
            found = find_cobipartition(g)
            if found is None:
                raise NotCoBipartiteError("graph is not co-bipartite")
            k, kp = found
        cross = {v: g.neighbors(v) - (k if v in k else kp) for v in g.vertices}
        return cls(frozenset(k), frozenset(kp), cross)

    @cached_property
    def vertices(self) -> frozenset[str]:
        return self.k | self.kp

    def side(self, v: str) -> frozenset[str]:
        return self.k if v in self.k else self.kp

    def other(self, v: str) -> frozenset[str]:
        return self.kp if v in self.k else self.k

    def adjacent(self, u: str, v: str) -> bool:
        if u == v:
            return False
        if (u in self.k) == (v in self.k):
            return True
        return v in self.cross[u]

    def bipartite(self) -> Graph:
        """The cross-edge graph G_B."""
        edges = [(u, v) for u in sorted(self.k) for v in self.cross[u]]
        return Graph(sorted(self.vertices), edges)

    def to_graph(self) -> Graph:
        edges = [(u, v) for part in (self.k, self.kp) for u, v in combinations(sorted(part), 2)]
        edges += [(u, v) for u in sorted(self.k) for v in self.cross[u]]
        return Graph(sorted(self.vertices), edges, {K_NAME: self.k, KP_NAME: self.kp})

    def induced(self, keep: AbstractSet[str]) -> CoBipartite:
        return CoBipartite(self.k & keep, self.kp & keep,
                           {v: self.cross[v] & keep for v in self.vertices if v in keep})

    def is_connected(self) -> bool:
        if not self.k or not self.kp:
            return True
        return any(self.cross[v] for v in self.k)

    def remove_twins(self) -> tuple[CoBipartite, dict[str, str]]:
        """Twin removal in O(|K| + |K'| + |E|).

        Vertices adjacent to everything on the other side are universal and
        pairwise twins; all other twins lie on one side and share their cross
        neighbourhood, found by refining with every cross neighbourhood.
        """
        removed: dict[str, str] = {}
        cross = self.cross
        universal: list[str] = []
        lonely: dict[str, list[str]] = {}
        rest: dict[str, list[str]] = {}
        # one pass per side sorts vertices into universal, isolated in G_B
        # (twins of each other) and the rest, which go to the refinement
        for name, part, full in (("k", self.k, len(self.kp)), ("kp", self.kp, len(self.k))):
            lone, other = [], []
            for v in part:
                d = len(cross[v])
                if d == full and full:
                    universal.append(v)
                elif d:
                    other.append(v)
                else:
                    lone.append(v)
            lonely[name], rest[name] = lone, other
        for group in (universal, lonely["k"], lonely["kp"]):
            if len(group) > 1:
                keep = min(group)
                for v in group:
                    if v != keep:
                        removed[v] = keep
        for name, pivot_name in (("k", "kp"), ("kp", "k")):
            pr = PartitionRefinement(rest[name])
            for v in rest[pivot_name]:
                pr.refine(cross[v])
            for cls in pr.classes():
                if len(cls) > 1:
                    keep = min(cls)
                    for v in cls:
                        if v != keep:
                            removed[v] = keep
        keep_set = self.vertices - removed.keys()
        return self.induced(keep_set), removed


def is_zed(cb: CoBipartite, z: Iterable[str]) -> bool:
    """Does z induce a P4 or an induced subgraph of P4 in G?"""
    z = list(z)
    if len(z) > 4:
        return False
    if len(z) <= 2:
        return True
    deg = {v: 0 for v in z}
    m = 0
    for u, v in combinations(z, 2):
        if cb.adjacent(u, v):
            deg[u] += 1
            deg[v] += 1
            m += 1
    if max(deg.values()) > 2:
        return False
    if len(z) == 3:
        return m in (1, 2)
    # four vertices: must be a path, i.e. 3 edges, connected, no vertex of degree 3
    return m == 3 and min(deg.values()) >= 1 and sorted(deg.values()) == [1, 1, 2, 2]


def _sym_diff_plus(cb: CoBipartite, a: str, b: str, base: frozenset[str]) -> frozenset[str] | None:
    na, nb = cb.cross[a], cb.cross[b]
    out = set(base)
    # a zed holds at most 4 vertices, so stop as soon as that is exceeded
    for y in na:
        if y not in nb:
            out.add(y)
            if len(out) > 4:
                return None
    for y in nb:
        if y not in na:
            out.add(y)
            if len(out) > 4:
                return None
    return frozenset(out)


def find_bimodule_zed(cb: CoBipartite, z: Iterable[str]) -> frozenset[str] | None:
    """Smallest superset of z that is a zed of G and a bimodule of G_B."""
    z = frozenset(z)
    if not is_zed(cb, z):
        raise ValueError("z is not a zed")
    zk, zkp = sorted(z & cb.k), sorted(z & cb.kp)
    if len(zk) <= 1 and len(zkp) <= 1:
        return z
    u1, u2 = zk if len(zk) == 2 else zkp
    z1 = _sym_diff_plus(cb, u1, u2, z)
    if z1 is None or not is_zed(cb, z1):
        return None
    opp = cb.other(u1)
    u_prime = sorted(z1 & opp)
    if len(u_prime) <= 1:
        return z1
    if len(u_prime) > 2:
        return None
    z2 = _sym_diff_plus(cb, u_prime[0], u_prime[1], z1)
    return z1 if z2 == z1 else None


@dataclass
class TypeICertificate:
    zed: frozenset[str]
    levels: DegreeLevels

    def to_json(self) -> dict:
        return {"zed": sorted(self.zed), "levels": self.levels.to_json()}


@dataclass
class TypeIICertificate:
    components: list[DegreeLevels]
    isolated: list[str]

    def to_json(self) -> dict:
        return {"components": [c.to_json() for c in self.components], "isolated": sorted(self.isolated)}


@dataclass
class _Search:
    cb: CoBipartite
    adj: Mapping[str, frozenset[str]]
    k_sorted: list[str]
    kp_sorted: list[str]
    checks: int = 0
    trace: list[dict] = field(default_factory=list)

    def difference(self, skip: AbstractSet[str]) -> DegreeLevels | TwoK2:
        self.checks += 1
        if self.checks > MAX_DIFFERENCE_CHECKS:
            raise AssertionError("type I recursion exceeded its 5^5 budget")
        return difference_levels(self.adj, self.k_sorted, self.kp_sorted, skip)


def _is_type_i(search: _Search, z: frozenset[str]) -> TypeICertificate | None:
    cb = search.cb
    if not is_zed(cb, z):
        search.trace.append({"zed": sorted(z), "result": "not a zed"})
        return None
    z1 = find_bimodule_zed(cb, z)
    if z1 == z:
        res = search.difference(z)
        if isinstance(res, DegreeLevels):
            return TypeICertificate(z, res)
        search.trace.append({"zed": sorted(z), "result": "2K2", "2K2": list(res.vertices)})
        for u in res.vertices:
            found = _is_type_i(search, z | {u})
            if found is not None:
                return found
        return None
    if z1 is not None:
        return _is_type_i(search, z1)
    search.trace.append({"zed": sorted(z), "result": "no bimodule zed superset"})
    return None


def is_type_i(cb: CoBipartite, z: Iterable[str] = ()) -> TypeICertificate | None:
    """Search for a Type I certificate containing z (graph assumed twin-free)."""
    search = _new_search(cb)
    return _is_type_i(search, frozenset(z))


def _new_search(cb: CoBipartite) -> _Search:
    return _Search(cb, cb.cross, sorted(cb.k), sorted(cb.kp))


def _bipartite_components(cb: CoBipartite) -> list[set[str]]:
    seen: set[str] = set()
    comps = []
    for s in sorted(cb.vertices):
        if s in seen or not cb.cross[s]:
            continue
        seen.add(s)
        comp = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in cb.cross[u]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_type_ii(cb: CoBipartite, search: _Search | None = None) -> TypeIICertificate | None:
    """G_B minus isolated vertices has <= 2 components, each a difference graph."""
    search = search or _new_search(cb)
    isolated = [v for v in cb.vertices if not cb.cross[v]]
    if len(set(isolated) & cb.k) > 1 or len(set(isolated) & cb.kp) > 1:
        raise AssertionError("twin-free input has at most one isolated vertex per side")
    comps = _bipartite_components(cb)
    if len(comps) > 2:
        search.trace.append({"type": "II", "result": f"{len(comps)} non-trivial components"})
        return None
    levels = []
    for comp in comps:
        search.checks += 1
        res = difference_levels(cb.cross, sorted(comp & cb.k), sorted(comp & cb.kp))
        if isinstance(res, TwoK2):
            search.trace.append({"type": "II", "result": "2K2", "2K2": list(res.vertices)})
            return None
        levels.append(res)
    return TypeIICertificate(levels, sorted(isolated))


@dataclass
class CobipOutcome:
    decision: bool
    kind: str | None
    certificate: TypeICertificate | TypeIICertificate | None
    reduced: CoBipartite
    twin_map: dict[str, str]
    trace: list[dict] = field(default_factory=list)
    difference_checks: int = 0

    def to_json(self) -> dict:
        cert = self.certificate.to_json() if self.certificate is not None else {"refutation": self.trace}
        if self.twin_map:
            cert = {**cert, "twins": dict(sorted(self.twin_map.items()))}
        return {"decision": "yes" if self.decision else "no", "kind": self.kind, "certificate": cert}


def as_cobipartite(g: Graph | CoBipartite) -> CoBipartite:
    return g if isinstance(g, CoBipartite) else CoBipartite.from_graph(g)


def recognize_cobipartite(g: Graph | CoBipartite) -> CobipOutcome:
    """Decide one-bend ENPG membership of a co-bipartite graph.

    Twins are removed first; Type II is tried before Type I so that a graph
    satisfying both reports the cheaper Type II certificate.
    """
    cb = as_cobipartite(g)
    reduced, twins = cb.remove_twins()
    search = _new_search(reduced)
    cert2 = is_type_ii(reduced, search)
    if cert2 is not None:
        return CobipOutcome(True, "TypeII", cert2, reduced, twins, search.trace, search.checks)
    if not reduced.is_connected():
        raise AssertionError("a disconnected twin-free co-bipartite graph is always Type II")
    cert1 = _is_type_i(search, frozenset())
    if cert1 is not None:
        return CobipOutcome(True, "TypeI", cert1, reduced, twins, search.trace, search.checks)
    return CobipOutcome(False, None, None, reduced, twins, search.trace, search.checks)


# ---------------------------------------------------------------- builders

_ROLES = ("x", "y", "xp", "yp")


def _zed_roles(cb: CoBipartite, z: frozenset[str]) -> dict[str, str]:
    """Place the zed on the P4 y - x - x' - y' (x, y in K; x', y' in K').

    The only cross edge of that P4 is x x', which fixes the roles.
    """
    zk, zkp = sorted(z & cb.k), sorted(z & cb.kp)
    for rk in permutations(("x", "y"), len(zk)):
        for rkp in permutations(("xp", "yp"), len(zkp)):
            roles = dict(zip(rk, zk)) | dict(zip(rkp, zkp))
            if all(cb.adjacent(roles[a], roles[b]) == (a == "x" and b == "xp")
                   for a in ("x", "y") if a in roles for b in ("xp", "yp") if b in roles):
                return roles
    raise ValueError(f"zed {sorted(z)} does not embed in P4")


def build_type_i_rep(cb: CoBipartite, cert: TypeICertificate) -> Representation:
    """One segment shared by the two clique unions, zed paths around it."""
    roles = _zed_roles(cb, cert.zed)
    levels = cert.levels
    ell = min(len(cb.k), len(cb.kp)) + 2
    if ell < levels.t + 2:
        raise ValueError("certificate levels exceed the segment length")
    paths: dict[str, LatticePath] = {}
    if "x" in roles:
        paths[roles["x"]] = LatticePath.through((0, 0), (ell, 0), (ell, 1))
    if "y" in roles:
        paths[roles["y"]] = LatticePath.through((-1, 0), (ell, 0), (ell, 1))
    if "xp" in roles:
        paths[roles["xp"]] = LatticePath.through((ell, 0), (0, 0), (0, -1))
    if "yp" in roles:
        paths[roles["yp"]] = LatticePath.through((ell + 1, 0), (0, 0), (0, -1))
    # the K-side zed member decides where K' paths end (bimodule => y, x agree)
    k_probe = roles.get("y", roles.get("x"))
    kp_probe = roles.get("yp", roles.get("xp"))
    spec = MeetingSpec((0, 0), (ell, 0))
    t = levels.t
    for v, i in levels.x_levels.items():
        start = 0 if kp_probe is None or cb.adjacent(v, kp_probe) else -1
        paths[v] = LatticePath.through((start, 0), spec.anchor(i))
    for v, j in levels.y_levels.items():
        end = ell if k_probe is None or cb.adjacent(v, k_probe) else ell + 1
        paths[v] = LatticePath.through(spec.anchor(t - j), (end, 0))
    return Representation(paths)


def build_type_ii_rep(cb: CoBipartite, cert: TypeIICertificate) -> Representation:
    """Rectangle layout: unit top/bottom edges, components on the two sides."""
    if len(cert.components) > 2:
        raise ValueError("Type II needs at most two non-trivial components")
    iso_k = [v for v in cert.isolated if v in cb.k]
    iso_kp = [v for v in cert.isolated if v in cb.kp]
    if len(iso_k) > 1 or len(iso_kp) > 1:
        raise ValueError("at most one isolated vertex per side")
    sizes = [min(len(c.x_levels), len(c.y_levels)) for c in cert.components]
    h = max(sizes, default=0) + 2
    paths: dict[str, LatticePath] = {}
    for col, comp in enumerate(cert.components):
        other = 1 - col
        spec = MeetingSpec((col, h), (col, 0))
        t = comp.t
        if h < t + 2:
            raise ValueError("component has more levels than the side can hold")
        for v, i in comp.x_levels.items():
            paths[v] = LatticePath.through((other, h), (col, h), spec.anchor(i))
        for v, j in comp.y_levels.items():
            paths[v] = LatticePath.through(spec.anchor(t - j), (col, 0), (other, 0))
    for v in iso_k:
        paths[v] = LatticePath.through((0, h), (1, h))
    for v in iso_kp:
        paths[v] = LatticePath.through((0, 0), (1, 0))
    return Representation(paths)


def build_cobip_rep(g: Graph | CoBipartite, outcome: CobipOutcome | None = None) -> Representation:
    """Representation of the original graph; twins reuse their representative's path."""
    cb = as_cobipartite(g)
    outcome = outcome or recognize_cobipartite(cb)
    if not outcome.decision:
        raise ValueError("graph is not one-bend ENPG")
    if isinstance(outcome.certificate, TypeIICertificate):
        rep = build_type_ii_rep(outcome.reduced, outcome.certificate)
    else:
        rep = build_type_i_rep(outcome.reduced, outcome.certificate)
    extra = {}
    for v, keep in outcome.twin_map.items():
        while keep in outcome.twin_map:
            keep = outcome.twin_map[keep]
        extra[v] = rep[keep]
    return rep.merged(extra)


# ------------------------------------------------------------------ oracle

class GuardError(RuntimeError):
    """Raised when an exhaustive routine is asked to exceed its size guard."""


def _brute_twin_free(cb: CoBipartite) -> CoBipartite:
    verts = sorted(cb.vertices)
    closed = {v: frozenset(w for w in verts if w == v or cb.adjacent(v, w)) for v in verts}
    keep = []
    for v in verts:
        if not any(closed[w] == closed[v] for w in keep):
            keep.append(v)
    return cb.induced(frozenset(keep))


def _brute_difference(cb: CoBipartite, verts: AbstractSet[str]) -> bool:
    edges = [(u, v) for u in cb.k & verts for v in cb.cross[u] if v in verts]
    for (a, b), (c, d) in combinations(edges, 2):
        if a != c and b != d and d not in cb.cross[a] and b not in cb.cross[c]:
            return False
    return True


def _brute_bimodule(cb: CoBipartite, z: AbstractSet[str]) -> bool:
    for v in cb.vertices - z:
        inside = z & cb.other(v)
        if inside and 0 < len(cb.cross[v] & inside) < len(inside):
            return False
    return True


def _brute_zed(cb: CoBipartite, z: tuple[str, ...]) -> bool:
    # compare against every injective placement on a 4-vertex path
    p4 = {(0, 1), (1, 2), (2, 3)}
    for slots in permutations(range(4), len(z)):
        if all(cb.adjacent(z[i], z[j]) == ((min(slots[i], slots[j]), max(slots[i], slots[j])) in p4)
               for i, j in combinations(range(len(z)), 2)):
            return True
    return False


@dataclass
class OracleOutcome:
    decision: bool
    kind: str | None
    zed: tuple[str, ...] | None = None


def brute_force_zed_oracle(g: Graph | CoBipartite, max_vertices: int = 24) -> OracleOutcome:
    """Exhaustive check of the Type I / Type II conditions on every vertex
    subset of size <= 4, sharing no code path with the recognizer."""
    cb = as_cobipartite(g)
    if len(cb.vertices) > max_vertices:
        raise GuardError(f"{len(cb.vertices)} vertices exceeds the oracle guard of {max_vertices}")
    cb = _brute_twin_free(cb)
    verts = sorted(cb.vertices)
    # Type II on components of G_B, by plain DFS
    nontrivial = [v for v in verts if cb.cross[v]]
    comp_of: dict[str, int] = {}
    for v in nontrivial:
        if v in comp_of:
            continue
        stack = [v]
        comp_of[v] = len(set(comp_of.values()))
        while stack:
            u = stack.pop()
            for w in cb.cross[u]:
                if w not in comp_of:
                    comp_of[w] = comp_of[v]
                    stack.append(w)
    groups: dict[int, set[str]] = {}
    for v, c in comp_of.items():
        groups.setdefault(c, set()).add(v)
    if len(groups) <= 2 and all(_brute_difference(cb, grp) for grp in groups.values()):
        return OracleOutcome(True, "TypeII")
    for size in range(0, 5):
        for z in combinations(verts, size):
            zs = frozenset(z)
            if _brute_zed(cb, z) and _brute_bimodule(cb, zs) and _brute_difference(cb, cb.vertices - zs):
                return OracleOutcome(True, "TypeI", z)
    return OracleOutcome(False, None)


def matching_cobip(r: int) -> Graph:
    """Cliques a1..ar and b1..br joined by the perfect matching ai - bi (G_B = rK2)."""
    k = [f"a{i}" for i in range(1, r + 1)]
    kp = [f"b{i}" for i in range(1, r + 1)]
    return CoBipartite.from_cross_edges(k, kp, zip(k, kp)).to_graph()


def three_k2() -> Graph:
    return matching_cobip(3)


def four_k2() -> Graph:
    return matching_cobip(4)
