"""Exhaustive witness search for small split graphs and a random generator of
witness-accepted instances."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator

from .cobip import GuardError
from .graph import Graph
from .split import SIDES, SClass, SplitWitness, _overlap, check_split_witness, normalized, other_side

# an option is (sequence key, kind, constraint data); sequence keys are (X, Y)
Option = tuple[tuple[str, str], str, frozenset, frozenset]


def _alive(kind: str, n: frozenset, extra: frozenset, placed: list[str], pos: dict[str, int], rem: set[str]) -> bool:
    """Can the partial sequence still be completed so that the option holds?"""
    if kind == "interval":
        idx = [pos[v] for v in n if v in pos]
        if not idx:
            return True
        if max(idx) - min(idx) + 1 != len(idx):
            return False
        return placed[-1] in n or len(idx) == len(n)
    if kind == "prefix":
        # extra = the other side's horizontal part; n must precede its other members
        bad = [pos[v] for v in extra - n if v in pos]
        if not bad:
            return True
        first_bad = min(bad)
        return all(v in pos and pos[v] < first_bad for v in n)
    # suffix: once a member of n appears, only members of n may follow
    idx = [pos[v] for v in n if v in pos]
    if not idx:
        return True
    start = min(idx)
    return all(v in n for v in placed[start:]) and rem <= n


@dataclass
class _Problem:
    g: Graph
    s_order: list[str]
    parts: dict[tuple[str, str], frozenset[str]]
    options: dict[str, list[Option]]


def _options(g: Graph, s: str, parts) -> list[Option]:
    n = g.neighbors(s)
    out: list[Option] = []
    for x in SIDES:
        kh, kv, kbar = parts[x, "H"], parts[x, "V"], parts[other_side(x), "H"]
        if n <= kv:
            out.append(((x, "V"), "interval", n, frozenset()))
        if n <= kh:
            out.append(((x, "H"), "interval", n, frozenset()))
        if n <= kh & kbar:
            out.append(((x, "H"), "prefix", n, kbar))
        t = n - kv
        # an empty suffix only re-describes a full vertical interval
        if kv <= n and t and t <= kh:
            out.append(((x, "H"), "suffix", t, frozenset()))
    return out


def _permutations(prob: _Problem, key: tuple[str, str], options: dict[str, list[Option]]) -> Iterator[tuple[str, ...]]:
    """Orders of the part under ``key`` that keep every S vertex alive.

    ``options`` holds only options still viable on finished orders, so an S
    vertex with an option elsewhere can never be killed here.
    """
    universe = sorted(prob.parts[key])
    watch = [(s, opts) for s, opts in options.items() if all(o[0] == key for o in opts)]
    placed: list[str] = []
    pos: dict[str, int] = {}
    rem = set(universe)

    def ok() -> bool:
        for _, opts in watch:
            if not any(_alive(kind, n, extra, placed, pos, rem) for _, kind, n, extra in opts):
                return False
        return True

    def rec():
        if not rem:
            yield tuple(placed)
            return
        for v in sorted(rem):
            placed.append(v)
            pos[v] = len(placed) - 1
            rem.discard(v)
            if ok():
                yield from rec()
            rem.add(v)
            del pos[v]
            placed.pop()

    yield from rec()


def _concrete(prob: _Problem, sigmas, s: str) -> list[SClass]:
    out = []
    for key, kind, n, extra in prob.options[s]:
        seq = sigmas[key]
        pos = {v: i + 1 for i, v in enumerate(seq)}
        x = key[0]
        if kind == "interval":
            idx = sorted(pos[v] for v in n)
            if idx[-1] - idx[0] + 1 == len(idx):
                out.append(SClass(x, key[1], idx[0], idx[-1]))
        elif kind == "prefix":
            hi = max(pos[v] for v in n)
            if frozenset(seq[:hi]) & extra == n:
                out.append(SClass(x, "HH", 1, hi))
        else:
            lo = min(pos[v] for v in n)
            if frozenset(seq[lo - 1:]) == n:
                out.append(SClass(x, "HV", lo, len(seq)))
    # cheap classes first: vertical intervals never take part in (iv)/(v)
    rank = {"V": 0, "H": 1, "HH": 2, "HV": 3}
    return sorted(out, key=lambda c: (rank[c.kind], c.side))


def _assign(order: list[str], choices: dict[str, list[SClass]]) -> dict[str, SClass] | None:
    chosen: dict[str, SClass] = {}

    def consistent(s: str) -> bool:
        c = chosen[s]
        x = c.side
        hv = [t for t, ct in chosen.items() if ct.side == x and ct.kind == "HV"]
        hor = [t for t, ct in chosen.items() if ct.side == x and ct.kind in ("H", "HH")]
        if c.kind in ("H", "HH") and sum(_overlap(c, chosen[t]) for t in hv) > 1:
            return False
        if c.kind == "HV" and any(sum(_overlap(chosen[t], chosen[u]) for u in hv) > 1 for t in hor):
            return False
        for side in SIDES:
            hh = any(ct.side == side and ct.kind == "HH" for ct in chosen.values())
            nhv = sum(ct.side == other_side(side) and ct.kind == "HV" for ct in chosen.values())
            if hh and nhv > 1:
                return False
        return True

    def rec(i: int) -> bool:
        if i == len(order):
            return True
        s = order[i]
        for c in choices[s]:
            chosen[s] = c
            if consistent(s) and rec(i + 1):
                return True
            del chosen[s]
        return False

    return dict(chosen) if rec(0) else None


def _vertical_splits(k: list[str]) -> Iterator[tuple[frozenset, frozenset]]:
    """Disjoint (K_L,V, K_R,V) pairs, smallest first, one of each mirror pair."""
    seen = set()
    for total in range(len(k) + 1):
        for union in combinations(k, total):
            for size in range(total + 1):
                for left in combinations(union, size):
                    a = frozenset(left)
                    b = frozenset(union) - a
                    key = (tuple(sorted(a)), tuple(sorted(b)))
                    if key[::-1] in seen:
                        continue
                    seen.add(key)
                    yield a, b


def brute_force_split_recognize(g: Graph, max_k: int = 8, progress: Callable[[int], None] | None = None) -> SplitWitness | None:
    """Return a passing witness if one exists, else None (complete search).

    The search is sequential and deterministic: vertical parts by size, then
    the four orders built left to right with S-vertex viability pruning, then
    class choices under the overlap conditions.
    """
    k, s = normalized(g)
    if len(k) > max_k:
        raise GuardError(f"|K| = {len(k)} exceeds the search guard of {max_k}")
    korder = sorted(k)
    s_order = sorted(s, key=lambda v: (g.degree(v), v))
    for count, (klv, krv) in enumerate(_vertical_splits(korder)):
        if progress:
            progress(count)
        parts = {("L", "V"): klv, ("R", "V"): krv, ("L", "H"): k - klv, ("R", "H"): k - krv}
        options = {v: _options(g, v, parts) for v in s_order}
        if any(not opts for opts in options.values()):
            continue
        prob = _Problem(g, s_order, parts, options)
        found = _search_orders(prob)
        if found is not None:
            return found
    return None


_SEQ_ORDER = [("L", "H"), ("R", "H"), ("L", "V"), ("R", "V")]


def _search_orders(prob: _Problem) -> SplitWitness | None:
    sigmas: dict[tuple[str, str], tuple[str, ...]] = {}

    def rec(i: int, options: dict[str, list[Option]]) -> SplitWitness | None:
        if i == len(_SEQ_ORDER):
            choices = {s: _concrete(prob, sigmas, s) for s in prob.s_order}
            if any(not c for c in choices.values()):
                return None
            chosen = _assign(prob.s_order, choices)
            if chosen is None:
                return None
            w = SplitWitness.from_sigmas(sigmas, chosen)
            assert check_split_witness(prob.g, w), "search produced a failing witness"
            return w
        key = _SEQ_ORDER[i]
        for perm in _permutations(prob, key, options):
            sigmas[key] = perm
            pos = {v: j for j, v in enumerate(perm)}
            kept = {s: [o for o in opts if o[0] != key or _alive(o[1], o[2], o[3], list(perm), pos, set())]
                    for s, opts in options.items()}
            if all(kept.values()):
                found = rec(i + 1, kept)
                if found is not None:
                    return found
        sigmas.pop(key, None)
        return None

    return rec(0, prob.options)


# ---------------------------------------------------------------- generator

def witness_graph(k: list[str], w: SplitWitness) -> Graph:
    """The split graph a witness describes (each s gets its implied neighbourhood)."""
    edges = [(a, b) for i, a in enumerate(k) for b in k[i + 1:]]
    for s in sorted(w.s_classes):
        edges += [(s, v) for v in sorted(w.expected_neighbourhood(s))]
    return Graph(list(k) + sorted(w.s_classes), edges, {"K": k, "S": list(w.s_classes)})


def gen_random_split_witness(rng: random.Random, k: int, m: int, max_tries: int = 200) -> tuple[Graph, SplitWitness]:
    """Random (graph, witness) pair accepted by the checker.

    K and the class layout are drawn first; S vertices whose implied
    neighbourhood is empty or all of K are redrawn, and whole draws failing
    the overlap conditions are discarded.
    """
    labels = [f"k{i}" for i in range(k)]
    for _ in range(max_tries):
        shuffled = labels[:]
        rng.shuffle(shuffled)
        nv_l = rng.randint(0, k // 3)
        nv_r = rng.randint(0, k // 3)
        klv = shuffled[:nv_l]
        krv = shuffled[nv_l:nv_l + nv_r]
        sig = {}
        for x, kv in (("L", klv), ("R", krv)):
            h = [v for v in labels if v not in kv]
            rng.shuffle(h)
            v_order = list(kv)
            rng.shuffle(v_order)
            sig[x, "H"], sig[x, "V"] = tuple(h), tuple(v_order)
        base = SplitWitness.from_sigmas(sig, {})
        classes: dict[str, SClass] = {}
        used: set[frozenset] = set()
        for j in range(m):
            for _attempt in range(50):
                c = _random_class(rng, base)
                if c is None:
                    continue
                trial = SplitWitness.from_sigmas(sig, {"t": c})
                nb = trial.expected_neighbourhood("t")
                if nb and len(nb) < k and nb not in used:
                    used.add(nb)
                    classes[f"s{j}"] = c
                    break
        w = SplitWitness.from_sigmas(sig, classes)
        g = witness_graph(labels, w)
        if check_split_witness(g, w):
            return g, w
    raise RuntimeError("no accepted witness drawn; loosen the parameters")


def _random_class(rng: random.Random, w: SplitWitness) -> SClass | None:
    x = rng.choice(SIDES)
    kind = rng.choice(("H", "H", "V", "HH", "HV"))
    n = len(w.sigma(x, "V" if kind == "V" else "H"))
    if n == 0:
        return None
    if kind in ("H", "V"):
        lo = rng.randint(1, n)
        return SClass(x, kind, lo, rng.randint(lo, n))
    if kind == "HH":
        return SClass(x, kind, 1, rng.randint(1, n))
    return SClass(x, kind, rng.randint(1, n), n)
