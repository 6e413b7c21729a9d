"""One-bend ENPG split graphs: structure witnesses, their checker, the
canonical representation builder and the degree-class size bounds."""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import Graph, find_split_partition, is_clique, is_connected, is_stable
from .grid import LatticePath, Representation, _incident

SIDES = ("L", "R")
KINDS = ("H", "V", "HH", "HV")


def other_side(x: str) -> str:
    return "R" if x == "L" else "L"


class WitnessError(ValueError):
    """The witness breaks a structural invariant (not one of the six conditions)."""


@dataclass(frozen=True)
class SClass:
    """Class of a stable-set vertex and its range, 1-based and inclusive.

    H / V: an interval of sigma[side, kind].  HH: a prefix (lo == 1) of
    sigma[side, H].  HV: a suffix (hi == len) of sigma[side, H], possibly
    empty (lo == len + 1).
    """

    side: str
    kind: str
    lo: int
    hi: int

    def __post_init__(self):
        if self.side not in SIDES or self.kind not in KINDS:
            raise WitnessError(f"bad class {self.side},{self.kind}")

    @property
    def token(self) -> str:
        return f"{self.side},{self.kind}"


@dataclass(frozen=True)
class SplitWitness:
    k_parts: Mapping[tuple[str, str], frozenset[str]]
    sigmas: Mapping[tuple[str, str], tuple[str, ...]]
    s_classes: Mapping[str, SClass]

    @classmethod
    def from_sigmas(cls, sigmas: Mapping[tuple[str, str], Iterable[str]], s_classes: Mapping[str, SClass]) -> SplitWitness:
        sig = {(x, y): tuple(sigmas.get((x, y), ())) for x in SIDES for y in ("H", "V")}
        return cls({key: frozenset(seq) for key, seq in sig.items()}, sig, dict(s_classes))

    def part(self, x: str, y: str) -> frozenset[str]:
        return self.k_parts.get((x, y), frozenset())

    def sigma(self, x: str, y: str) -> tuple[str, ...]:
        return self.sigmas.get((x, y), ())

    @property
    def clique(self) -> frozenset[str]:
        return self.part("L", "H") | self.part("L", "V")

    def members(self, x: str, kind: str) -> list[str]:
        return sorted(s for s, c in self.s_classes.items() if c.side == x and c.kind == kind)

    def validate(self) -> None:
        """Raise WitnessError on any invariant breach."""
        for x in SIDES:
            for y in ("H", "V"):
                seq, part = self.sigma(x, y), self.part(x, y)
                if len(set(seq)) != len(seq) or set(seq) != part:
                    raise WitnessError(f"sigma {x},{y} is not a permutation of K_{x},{y}")
            if self.part(x, "H") & self.part(x, "V"):
                raise WitnessError(f"K_{x},H and K_{x},V overlap")
        if self.part("L", "H") | self.part("L", "V") != self.part("R", "H") | self.part("R", "V"):
            raise WitnessError("the two partitions cover different vertex sets")
        if self.part("L", "V") & self.part("R", "V"):
            raise WitnessError("K_L,V and K_R,V intersect")
        for s, c in self.s_classes.items():
            n = len(self.sigma(c.side, "V" if c.kind == "V" else "H"))
            if c.kind in ("H", "V") and not 1 <= c.lo <= c.hi <= n:
                raise WitnessError(f"range of {s} is not a non-empty interval of length <= {n}")
            if c.kind == "HH" and not (c.lo == 1 and 0 <= c.hi <= n):
                raise WitnessError(f"range of {s} is not a prefix")
            if c.kind == "HV" and not (c.hi == n and 1 <= c.lo <= n + 1):
                raise WitnessError(f"range of {s} is not a suffix")

    def range_members(self, s: str) -> frozenset[str]:
        c = self.s_classes[s]
        seq = self.sigma(c.side, "V" if c.kind == "V" else "H")
        return frozenset(seq[c.lo - 1:c.hi])

    def expected_neighbourhood(self, s: str) -> frozenset[str]:
        c = self.s_classes[s]
        rng = self.range_members(s)
        if c.kind == "HH":
            return rng & self.part(other_side(c.side), "H")
        if c.kind == "HV":
            return rng | self.part(c.side, "V")
        return rng


@dataclass(frozen=True)
class WitnessCheck:
    ok: bool
    condition: str | None = None
    vertices: tuple[str, ...] = ()
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        if self.ok:
            return {"ok": True}
        return {"ok": False, "condition": self.condition, "vertices": list(self.vertices), "message": self.message}


def split_sides(g: Graph) -> tuple[frozenset[str], frozenset[str]]:
    """(K, S) of a split graph, from its annotation or by degree sequence."""
    ann = g.annotations
    if "K" in ann and "S" in ann:
        k, s = ann["K"], ann["S"]
        if not is_clique(g, k) or not is_stable(g, s):
            raise ValueError("annotated K/S is not a split partition")
        return k, s
    found = find_split_partition(g)
    if found is None:
        raise ValueError("graph is not split")
    return found


def normalized(g: Graph) -> tuple[frozenset[str], frozenset[str]]:
    """Check the connected, maximal-K preconditions and return (K, S)."""
    k, s = split_sides(g)
    if not is_connected(g):
        raise ValueError("split graph must be connected")
    for v in s:
        if k <= g.neighbors(v):
            raise ValueError(f"K is not maximal: {v} sees all of K")
    return k, s


def _overlap(a: SClass, b: SClass) -> bool:
    return max(a.lo, b.lo) <= min(a.hi, b.hi)


def check_split_witness(g: Graph, w: SplitWitness) -> WitnessCheck:
    """Verify the six structural conditions; report the first one that fails."""
    w.validate()
    k = w.clique
    s_all = frozenset(g.vertices) - k
    if not is_clique(g, k) or not is_stable(g, s_all):
        raise WitnessError("witness clique does not split the graph")
    if set(w.s_classes) != s_all:
        raise WitnessError("class assignment does not partition S")
    for x in SIDES:
        if not w.part(x, "V") <= w.part(other_side(x), "H"):
            return WitnessCheck(False, "vi", tuple(sorted(w.part(x, "V") - w.part(other_side(x), "H"))),
                                f"K_{x},V is not inside the other side's horizontal part")
    label = {"H": "i", "V": "i", "HH": "ii", "HV": "iii"}
    for s in sorted(s_all):
        c = w.s_classes[s]
        if g.neighbors(s) != w.expected_neighbourhood(s):
            return WitnessCheck(False, label[c.kind], (s,),
                                f"N({s}) does not match its {c.token} range {c.lo}..{c.hi}")
    for x in SIDES:
        hv = [(s, w.s_classes[s]) for s in w.members(x, "HV")]
        for s in w.members(x, "H") + w.members(x, "HH"):
            c = w.s_classes[s]
            hits = [t for t, ct in hv if _overlap(c, ct)]
            if len(hits) > 1:
                return WitnessCheck(False, "iv", (s, *hits), f"{s} overlaps {len(hits)} suffix vertices")
    for x in SIDES:
        hh = w.members(x, "HH")
        hv_other = w.members(other_side(x), "HV")
        if hh and len(hv_other) > 1:
            return WitnessCheck(False, "v", tuple(hh[:1] + hv_other), f"S_{x},HH is non-empty but |S_{other_side(x)},HV| > 1")
    return WitnessCheck(True)


# ------------------------------------------------------------------ builder

@dataclass
class _Arms:
    """Arc-length geometry of the clique union: arm X starts at the origin,
    runs horizontally to the bend b_X at arc B_X, then goes up."""

    spacing: int
    bend: dict[str, int]
    pos: dict[tuple[str, str], dict[str, int]] = field(default_factory=dict)

    def point(self, x: str, a: int) -> tuple[int, int]:
        sgn = -1 if x == "L" else 1
        b = self.bend[x]
        return (sgn * a, 0) if a <= b else (sgn * b, a - b)

    def corners(self, x: str, a0: int, a1: int) -> list[tuple[int, int]]:
        pts = [self.point(x, a0)]
        b = self.bend[x]
        if min(a0, a1) < b < max(a0, a1):
            pts.append(self.point(x, b))
        pts.append(self.point(x, a1))
        return pts

    def h_pos(self, w: SplitWitness, x: str, idx: int) -> int:
        # idx is 1-based; index len + 1 is the bend itself
        n = len(w.sigma(x, "H"))
        return self.bend[x] if idx > n else 1 + self.spacing * idx


def _stub(arms: _Arms, x: str, a: int) -> tuple[int, int]:
    px, py = arms.point(x, a)
    if a <= arms.bend[x]:
        return (px, py - 1)
    return (px - 1, py) if x == "L" else (px + 1, py)


def build_split_rep(g: Graph, w: SplitWitness) -> Representation:
    """Canonical one-bend representation from a passing witness.

    Clique paths run between their endpoints on the two arms, spaced 2|S|
    apart; each S vertex gets a distinct offset in 1..|S| so that all path
    ends and bends are distinct.
    """
    check = check_split_witness(g, w)
    if not check:
        raise ValueError(f"witness fails condition {check.condition}: {check.message}")
    s_all = sorted(w.s_classes)
    d = max(2, 2 * len(s_all))
    bend = {x: 1 + d * (len(w.sigma(x, "H")) + 1) for x in SIDES}
    arms = _Arms(d, bend)
    arc: dict[tuple[str, str], int] = {}
    for x in SIDES:
        for i, v in enumerate(w.sigma(x, "H"), start=1):
            arc[x, v] = 1 + d * i
        for i, v in enumerate(w.sigma(x, "V"), start=1):
            arc[x, v] = bend[x] + d * i
    paths: dict[str, LatticePath] = {}
    for v in sorted(w.clique):
        left = arms.corners("L", arc["L", v], 0)
        right = arms.corners("R", 0, arc["R", v])
        paths[v] = LatticePath.through(*left, *right[1:])
    offset = {s: i for i, s in enumerate(s_all, start=1)}
    far: dict[str, int] = {}
    for s in s_all:
        c = w.s_classes[s]
        x, off = c.side, offset[s]
        if c.kind in ("H", "V"):
            base = 0 if c.kind == "H" else bend[x]
            lo = base + (1 if c.kind == "H" else 0) + d * c.lo
            hi = base + (1 if c.kind == "H" else 0) + d * c.hi
            a0, a1 = lo - off, hi + off
            paths[s] = LatticePath.through(*arms.corners(x, a0, a1), _stub(arms, x, a1))
            far[s] = a1
        elif c.kind == "HH":
            a = arms.h_pos(w, x, c.hi) + off if c.hi else 1 + off
            # runs through e_K and one edge past the far bend, so it splits
            # from every clique path that turns there
            xb = other_side(x)
            end = (bend[xb] + 1) * (-1 if xb == "L" else 1)
            paths[s] = LatticePath.through(_stub(arms, x, a), arms.point(x, a), (end, 0))
            far[s] = a
    for x in SIDES:
        turn = bool(w.members(other_side(x), "HH"))
        for s in w.members(x, "HV"):
            c = w.s_classes[s]
            a0 = arms.h_pos(w, x, c.lo) - offset[s]
            if turn:
                a1 = bend[x] + 1
            else:
                hits = [far[t] for t in w.members(x, "H") + w.members(x, "HH")
                        if _overlap(w.s_classes[t], c)]
                a1 = max(hits) + 1 if hits else a0 + 1
            paths[s] = LatticePath.through(*arms.corners(x, a0, a1))
    return Representation(paths)


# -------------------------------------------------------------- caterpillar

@dataclass(frozen=True)
class CaterpillarReport:
    ok: bool
    max_degree: int
    reason: str = ""


def caterpillar_check(rep: Representation, clique: Iterable[str]) -> CaterpillarReport:
    """Union of all paths is a tree of max degree <= 3 whose spine (the tree
    minus its leaves) is a path containing the interior of the clique union."""
    edges = rep.union_edges()
    inc = _incident(edges)
    maxdeg = max(len(v) for v in inc.values())
    if len(inc) != len(edges) + 1:
        return CaterpillarReport(False, maxdeg, "union is not a tree")
    # connectivity
    start = next(iter(inc))
    seen = {start}
    stack = [start]
    while stack:
        p = stack.pop()
        for e in inc[p]:
            q = e[1] if e[0] == p else e[0]
            if q not in seen:
                seen.add(q)
                stack.append(q)
    if len(seen) != len(inc):
        return CaterpillarReport(False, maxdeg, "union is disconnected")
    if maxdeg > 3:
        return CaterpillarReport(False, maxdeg, "degree exceeds 3")
    leaves = {p for p, s in inc.items() if len(s) == 1}
    spine = {e for e in edges if e[0] not in leaves and e[1] not in leaves}
    if spine:
        sinc = _incident(spine)
        if any(len(s) > 2 for s in sinc.values()) or len(sinc) != len(spine) + 1:
            return CaterpillarReport(False, maxdeg, "spine is not a path")
        spine_pts = set(sinc)
    else:
        spine_pts = set(inc) - leaves or set(inc)
    kunion = _incident(rep.union_edges(clique))
    interior = {p for p, s in kunion.items() if len(s) == 2}
    if not interior <= spine_pts:
        return CaterpillarReport(False, maxdeg, "clique union leaves the spine")
    return CaterpillarReport(True, maxdeg)


# -------------------------------------------------------- size inequalities

@dataclass(frozen=True)
class SizeViolation:
    equation: int
    side: str | None
    kind: str | None
    d: int
    count: int
    bound: int


def _degree_counter(g: Graph, verts: Iterable[str]) -> Counter:
    return Counter(g.degree(v) for v in verts)


def set_size_inequalities(g: Graph, w: SplitWitness) -> list[SizeViolation]:
    """Evaluate the five degree-class bounds on a witness; return violations."""
    out: list[SizeViolation] = []
    k = w.clique
    both_h = len(w.part("L", "H") & w.part("R", "H"))
    for x in SIDES:
        kv = len(w.part(x, "V"))
        cnt = {kind: _degree_counter(g, w.members(x, kind)) for kind in KINDS}
        degrees = set().union(*(c.keys() for c in cnt.values()))
        for dd in sorted(degrees):
            for y in ("H", "V"):
                bound = max(len(w.part(x, y)) + 1 - dd, 0)
                if cnt[y][dd] > bound:
                    out.append(SizeViolation(1, x, y, dd, cnt[y][dd], bound))
            bound = 1 if dd > kv else 0
            if cnt["HV"][dd] > bound:
                out.append(SizeViolation(2, x, "HV", dd, cnt["HV"][dd], bound))
            bound = 1 if dd > kv else kv + 1 - dd
            if cnt["V"][dd] + cnt["HV"][dd] > bound:
                out.append(SizeViolation(3, x, "V+HV", dd, cnt["V"][dd] + cnt["HV"][dd], bound))
            bound = 1 if dd <= both_h else 0
            if cnt["HH"][dd] > bound:
                out.append(SizeViolation(4, x, "HH", dd, cnt["HH"][dd], bound))
    for dd, count in sorted(_degree_counter(g, w.s_classes).items()):
        bound = 2 * (len(k) + 2 - dd)
        if count > bound:
            out.append(SizeViolation(5, None, None, dd, count, bound))
    return out


@dataclass(frozen=True)
class FilterResult:
    passed: bool
    d: int | None = None
    count: int | None = None
    bound: int | None = None

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> dict:
        if self.passed:
            return {"result": "pass"}
        return {"result": "fail", "d": self.d, "count": self.count, "bound": self.bound}


def split_size_filter(g: Graph) -> FilterResult:
    """Necessary condition |S_d| <= 2(|K| + 2 - d); a failure rules out one bend."""
    k, s = split_sides(g)
    for dd, count in sorted(_degree_counter(g, s).items()):
        bound = 2 * (len(k) + 2 - dd)
        if count > bound:
            return FilterResult(False, dd, count, bound)
    return FilterResult(True)


def false_twin_free(g: Graph) -> bool:
    seen = set()
    for v in g.vertices:
        key = g.neighbors(v)
        if key in seen:
            return False
        seen.add(key)
    return True


def twin_free(g: Graph) -> bool:
    return len({g.neighbors(v) | {v} for v in g.vertices}) == len(g)


def fixture_non_b1_split() -> Graph:
    """Split graph with K = 0..10 whose S holds one vertex per consecutive pair
    of two permutations plus three extra pairs; it is two-bend but not one-bend."""
    sigma_l = list(range(11))
    sigma_r = [0, 5, 10, 4, 9, 3, 8, 2, 7, 1, 6]
    pairs = [tuple(p[i:i + 2]) for p in (sigma_l, sigma_r) for i in range(10)]
    pairs += [(0, 2), (0, 3), (0, 4)]
    k = [str(i) for i in range(11)]
    s = [f"s{a}_{b}" for a, b in pairs]
    edges = [(a, b) for i, a in enumerate(k) for b in k[i + 1:]]
    for name, (a, b) in zip(s, pairs):
        edges += [(name, str(a)), (name, str(b))]
    return Graph(k + s, edges, {"K": k, "S": s})
