"""Reduction from Hamiltonian decomposition of 4-regular diamond-free graphs
to one-bend ENPG split graph recognition, with witnesses in both directions."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, check_regular_diamond_free, edge_label
from .split import SClass, SplitWitness


class InvalidDecomposition(ValueError):
    pass


@dataclass(frozen=True)
class HamDecomposition:
    cycle_a: tuple[str, ...]
    cycle_b: tuple[str, ...]

    def to_json(self) -> dict:
        return {"cycle_a": list(self.cycle_a), "cycle_b": list(self.cycle_b)}


def _cycle_edges(cycle: tuple[str, ...]) -> list[frozenset[str]]:
    return [frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))]


def validate_decomposition(g4: Graph, d: HamDecomposition) -> None:
    """Raise InvalidDecomposition unless d splits E(g4) into two Hamiltonian cycles."""
    verts = set(g4.vertices)
    used: set[frozenset[str]] = set()
    for name, cyc in (("cycle_a", d.cycle_a), ("cycle_b", d.cycle_b)):
        if len(cyc) != len(verts) or set(cyc) != verts:
            raise InvalidDecomposition(f"{name} is not a Hamiltonian vertex order")
        for e in _cycle_edges(cyc):
            a, b = sorted(e)
            if not g4.has_edge(a, b):
                raise InvalidDecomposition(f"{name} uses non-edge {a}-{b}")
            if e in used:
                raise InvalidDecomposition(f"edge {a}-{b} is used twice")
            used.add(e)
    if len(used) != g4.m:
        raise InvalidDecomposition("cycles do not cover every edge")


def removed_vertex(g4: Graph) -> str:
    return min(g4.vertices)


def special_labels(g4: Graph) -> dict[str, str]:
    """Map s1..s4 to the neighbours of the removed vertex, in sorted order."""
    v = removed_vertex(g4)
    return {f"s{i}": u for i, u in enumerate(sorted(g4.neighbors(v)), start=1)}


def reduce_ham_decomp_to_split(g4: Graph) -> Graph:
    """Delete the smallest vertex v; K = remaining vertices, S = remaining
    edges plus four vertices s_i adjacent to all of K except v_i."""
    report = check_regular_diamond_free(g4, 4)
    if not report.ok:
        if report.bad_vertex is not None:
            raise ValueError(f"not 4-regular at {report.bad_vertex}")
        raise ValueError(f"contains a diamond on {report.diamond}")
    v = removed_vertex(g4)
    gp = g4.without([v])
    k = list(gp.vertices)
    s_edges = [edge_label(a, b) for a, b in gp.edges()]
    specials = special_labels(g4)
    edges = [(a, b) for i, a in enumerate(k) for b in k[i + 1:]]
    for (a, b), lab in zip(gp.edges(), s_edges):
        edges += [(lab, a), (lab, b)]
    for lab, vi in specials.items():
        edges += [(lab, u) for u in k if u != vi]
    s_all = s_edges + list(specials)
    return Graph(k + s_all, edges, {"K": k, "S": s_all})


def _path_without(cycle: tuple[str, ...], v: str) -> tuple[str, ...]:
    i = cycle.index(v)
    return cycle[i + 1:] + cycle[:i]


def ham_decomp_to_witness(g4: Graph, d: HamDecomposition) -> SplitWitness:
    """Witness with both horizontal orders given by the two Hamiltonian paths
    left after deleting v; every S vertex becomes an interval."""
    validate_decomposition(g4, d)
    v = removed_vertex(g4)
    sig = {("L", "H"): _path_without(d.cycle_a, v), ("R", "H"): _path_without(d.cycle_b, v)}
    classes: dict[str, SClass] = {}
    for x in ("L", "R"):
        seq = sig[x, "H"]
        for i in range(len(seq) - 1):
            classes[edge_label(seq[i], seq[i + 1])] = SClass(x, "H", i + 1, i + 2)
    n = len(sig["L", "H"])
    for lab, vi in special_labels(g4).items():
        for x in ("L", "R"):
            seq = sig[x, "H"]
            if seq[0] == vi:
                classes[lab] = SClass(x, "H", 2, n)
                break
            if seq[-1] == vi:
                classes[lab] = SClass(x, "H", 1, n - 1)
                break
        else:
            raise InvalidDecomposition(f"{vi} is not an end of either path")
    return SplitWitness.from_sigmas(sig, classes)


def witness_to_ham_decomp(g4: Graph, w: SplitWitness) -> HamDecomposition:
    """Re-insert v at both ends of each full order and validate the cycles."""
    v = removed_vertex(g4)
    cycles = []
    for x in ("L", "R"):
        cycles.append((v,) + w.sigma(x, "H") + w.sigma(x, "V"))
    d = HamDecomposition(*cycles)
    validate_decomposition(g4, d)
    return d
