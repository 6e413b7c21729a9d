"""Text formats for graphs, representations, split witnesses and Hamiltonian
decompositions.  Parsers raise GraphFormatError with a line number."""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable

from .graph import Graph, GraphFormatError
from .grid import LatticePath, Representation
from .reduction import HamDecomposition
from .split import SIDES, SClass, SplitWitness, WitnessError


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line.split()


def parse_graph(text: str) -> Graph:
    """Graph format: `n N M`, optional `v label`, `e a b`, `p name labels...`."""
    header = None
    labels: list[str] = []
    edges: list[tuple[str, str]] = []
    parts: dict[str, list[str]] = {}
    seen: set[frozenset[str]] = set()
    for no, tok in _lines(text):
        kind = tok[0]
        if header is None:
            if kind != "n" or len(tok) != 3:
                raise GraphFormatError(f"line {no}: expected header `n <vertices> <edges>`")
            try:
                header = (int(tok[1]), int(tok[2]))
            except ValueError:
                raise GraphFormatError(f"line {no}: header counts must be integers") from None
            continue
        if kind == "v" and len(tok) == 2:
            labels.append(tok[1])
        elif kind == "e" and len(tok) == 3:
            a, b = tok[1], tok[2]
            if a == b:
                raise GraphFormatError(f"line {no}: loop at {a}")
            key = frozenset((a, b))
            if key in seen:
                raise GraphFormatError(f"line {no}: duplicate edge {a}-{b}")
            seen.add(key)
            edges.append((a, b))
        elif kind == "p" and len(tok) >= 2:
            if tok[1] in parts:
                raise GraphFormatError(f"line {no}: partition {tok[1]} given twice")
            parts[tok[1]] = tok[2:]
        else:
            raise GraphFormatError(f"line {no}: cannot parse {' '.join(tok)!r}")
    if header is None:
        raise GraphFormatError("missing header line")
    n, m = header
    if not labels:
        labels = [str(i) for i in range(n)]
    if len(labels) != n or len(set(labels)) != n:
        raise GraphFormatError(f"header promises {n} distinct vertices, found {len(set(labels))}")
    if len(edges) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(edges)}")
    known = set(labels)
    for a, b in edges:
        for x in (a, b):
            if x not in known:
                raise GraphFormatError(f"edge names unknown vertex {x}")
    return Graph(labels, edges, parts or None, strict=True)


def format_graph(g: Graph) -> str:
    out = [f"n {g.n} {g.m}"]
    out += [f"v {v}" for v in g.vertices]
    out += [f"e {a} {b}" for a, b in g.edges()]
    for name, part in g.annotations.items():
        out.append(" ".join(["p", name, *sorted(part)]))
    return "\n".join(out) + "\n"


_REP_LINE = re.compile(r"^(.*\S)\s*:\s*(\(.*\))\s*$")
_POINT = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_rep(text: str) -> Representation:
    paths = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _REP_LINE.match(line)
        if not m:
            raise GraphFormatError(f"line {no}: expected `label: (x,y) ...`")
        label, body = m.group(1), m.group(2)
        pts = [(int(a), int(b)) for a, b in _POINT.findall(body)]
        if _POINT.sub("", body).strip():
            raise GraphFormatError(f"line {no}: junk between points")
        if label in paths:
            raise GraphFormatError(f"line {no}: label {label} given twice")
        try:
            paths[label] = LatticePath(tuple(pts))
        except ValueError as exc:
            raise GraphFormatError(f"line {no}: {exc}") from None
    return Representation(paths)


def _compress(p: LatticePath) -> list[tuple[int, int]]:
    # endpoints and bends are enough to describe the path; the parser refills steps
    return [p.points[0], *p.bend_points(), p.points[-1]]


def format_rep(rep: Representation, full: bool = True) -> str:
    """One line per label in sorted order; full=False writes only corners."""
    out = []
    for v in rep.labels:
        pts = rep[v].points if full else _compress(rep[v])
        out.append(f"{v}: " + " ".join(f"({x},{y})" for x, y in pts))
    return "\n".join(out) + "\n"


def parse_rep_corners(text: str) -> Representation:
    """Like parse_rep but accepts corner lists with non-unit straight runs."""
    paths = {}
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _REP_LINE.match(line)
        if not m:
            raise GraphFormatError(f"line {no}: expected `label: (x,y) ...`")
        pts = [(int(a), int(b)) for a, b in _POINT.findall(m.group(2))]
        try:
            paths[m.group(1)] = LatticePath.through(*pts)
        except (ValueError, IndexError) as exc:
            raise GraphFormatError(f"line {no}: {exc}") from None
    return Representation(paths)


def parse_witness(text: str) -> SplitWitness:
    parts: dict[tuple[str, str], list[str]] = {}
    sigmas: dict[tuple[str, str], list[str]] = {}
    classes: dict[str, SClass] = {}
    for no, tok in _lines(text):
        try:
            if tok[0] in ("KXY", "SIGMA") and len(tok) >= 3:
                x, y = tok[1], tok[2]
                if x not in SIDES or y not in ("H", "V"):
                    raise GraphFormatError(f"line {no}: bad part {x} {y}")
                (parts if tok[0] == "KXY" else sigmas)[x, y] = tok[3:]
            elif tok[0] == "SCLASS" and len(tok) == 5:
                side, _, kind = tok[2].partition(",")
                classes[tok[1]] = SClass(side, kind, int(tok[3]), int(tok[4]))
            else:
                raise GraphFormatError(f"line {no}: cannot parse {' '.join(tok)!r}")
        except (WitnessError, ValueError) as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"line {no}: {exc}") from None
    for key, members in parts.items():
        if set(members) != set(sigmas.get(key, ())):
            raise GraphFormatError(f"KXY {key[0]} {key[1]} disagrees with its SIGMA line")
    return SplitWitness.from_sigmas(sigmas, classes)


def format_witness(w: SplitWitness) -> str:
    out = []
    for x in SIDES:
        for y in ("H", "V"):
            out.append(" ".join(["KXY", x, y, *sorted(w.part(x, y))]))
            out.append(" ".join(["SIGMA", x, y, *w.sigma(x, y)]))
    for s in sorted(w.s_classes):
        c = w.s_classes[s]
        out.append(f"SCLASS {s} {c.token} {c.lo} {c.hi}")
    return "\n".join(out) + "\n"


def parse_decomposition(text: str) -> HamDecomposition:
    cycles = [tok[1:] for _, tok in _lines(text) if tok[0] == "C"]
    if len(cycles) != 2:
        raise GraphFormatError("decomposition needs exactly two `C` lines")
    return HamDecomposition(tuple(cycles[0]), tuple(cycles[1]))


def format_decomposition(d: HamDecomposition) -> str:
    return f"C {' '.join(d.cycle_a)}\nC {' '.join(d.cycle_b)}\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def read_rep(path: str | Path) -> Representation:
    return parse_rep(Path(path).read_text(encoding="utf-8"))
