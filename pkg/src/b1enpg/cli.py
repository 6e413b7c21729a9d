"""Command line: recognize, filter, build, verify, reduce, gen, render, bench.

Exit codes: 0 yes / success, 1 no, 2 usage or format error, 3 guard refusal.
Machine-readable results go to stdout as JSON lines; prose goes to stderr.
"""

from __future__ import annotations

import argparse
import gc
import json
import os
import sys
import time
from pathlib import Path

from . import cobip, constructions, formats, reduction, split, split_search
from .graph import GraphFormatError
from .grid import verify_rep
from .render import render_svg

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class _Out:
    def __init__(self, stdout, stderr):
        self.stdout, self.stderr = stdout, stderr
        self.colour = not os.environ.get("NO_COLOR") and getattr(stderr, "isatty", lambda: False)()

    def json(self, obj) -> None:
        self.stdout.write(json.dumps(obj, sort_keys=True) + "\n")

    def text(self, s: str) -> None:
        self.stdout.write(s)

    def say(self, msg: str, ok: bool | None = None) -> None:
        if self.colour and ok is not None:
            msg = f"\033[{32 if ok else 31}m{msg}\033[0m"
        self.stderr.write(msg + "\n")


def _emit_rep(out: _Out, rep, path: str | None) -> None:
    text = formats.format_rep(rep)
    if path:
        Path(path).write_text(text, encoding="utf-8")
        out.say(f"wrote {len(rep)} paths to {path}")
    else:
        out.text(text)


def _emit_graph(out: _Out, g, path: str | None) -> None:
    text = formats.format_graph(g)
    if path:
        Path(path).write_text(text, encoding="utf-8")
        out.say(f"wrote graph with {g.n} vertices and {g.m} edges to {path}")
    else:
        out.text(text)


# ------------------------------------------------------------------ commands

def cmd_recognize(args, out: _Out) -> int:
    g = formats.read_graph(args.graph)
    if args.family == "cobip":
        outcome = cobip.recognize_cobipartite(g)
        out.json(outcome.to_json())
        out.say(f"{'yes' if outcome.decision else 'no'}" + (f" ({outcome.kind})" if outcome.kind else ""),
                outcome.decision)
        return EXIT_YES if outcome.decision else EXIT_NO
    filt = split.split_size_filter(g)
    if not filt:
        out.json({"decision": "no", "certificate": {"filter": filt.to_json()}})
        out.say(f"no: |S_{filt.d}| = {filt.count} > {filt.bound}", False)
        return EXIT_NO
    w = split_search.brute_force_split_recognize(g, max_k=args.max_bruteforce_k)
    if w is None:
        out.json({"decision": "no", "certificate": {"search": "exhausted"}})
        out.say("no: exhaustive witness search found nothing", False)
        return EXIT_NO
    if args.witness_out:
        Path(args.witness_out).write_text(formats.format_witness(w), encoding="utf-8")
    out.json({"decision": "yes", "certificate": {"witness": formats.format_witness(w).splitlines()}})
    out.say("yes", True)
    return EXIT_YES


def cmd_filter(args, out: _Out) -> int:
    res = split.split_size_filter(formats.read_graph(args.graph))
    out.json(res.to_json())
    out.say("pass (inconclusive)" if res else f"fail: |S_{res.d}| = {res.count} > {res.bound}", res.passed)
    return EXIT_YES if res else EXIT_NO


def cmd_build(args, out: _Out) -> int:
    if args.what == "cycle":
        rep = constructions.build_cycle_rep(int(args.target))
    elif args.what == "tree":
        rep = constructions.build_tree_rep(formats.read_graph(args.target), args.root)
    elif args.what == "cobip":
        g = formats.read_graph(args.target)
        outcome = cobip.recognize_cobipartite(g)
        if not outcome.decision:
            out.json(outcome.to_json())
            out.say("graph is not one-bend ENPG; nothing to build", False)
            return EXIT_NO
        rep = cobip.build_cobip_rep(g, outcome)
    else:
        g = formats.read_graph(args.target)
        if args.witness:
            w = formats.parse_witness(Path(args.witness).read_text(encoding="utf-8"))
            check = split.check_split_witness(g, w)
            if not check:
                out.json(check.to_json())
                out.say(f"witness fails condition {check.condition}: {check.message}", False)
                return EXIT_NO
        else:
            w = split_search.brute_force_split_recognize(g, max_k=args.max_bruteforce_k)
            if w is None:
                out.json({"decision": "no"})
                out.say("no witness exists; nothing to build", False)
                return EXIT_NO
        rep = split.build_split_rep(g, w)
    _emit_rep(out, rep, args.output)
    return EXIT_YES


def cmd_verify(args, out: _Out) -> int:
    g = formats.read_graph(args.graph)
    rep = formats.read_rep(args.rep)
    try:
        report = verify_rep(rep, g, args.bends)
    except ValueError as exc:
        out.json({"ok": False, "diagnostics": [str(exc)]})
        out.say(str(exc), False)
        return EXIT_NO
    out.json({"ok": report.ok, "diagnostics": report.diagnostics})
    out.say("representation verified" if report else "; ".join(report.diagnostics), report.ok)
    return EXIT_YES if report else EXIT_NO


def cmd_reduce(args, out: _Out) -> int:
    g4 = formats.read_graph(args.graph)
    red = reduction.reduce_ham_decomp_to_split(g4)
    _emit_graph(out, red, args.output)
    if args.decomposition:
        d = formats.parse_decomposition(Path(args.decomposition).read_text(encoding="utf-8"))
        w = reduction.ham_decomp_to_witness(g4, d)
        text = formats.format_witness(w)
        if args.witness_out:
            Path(args.witness_out).write_text(text, encoding="utf-8")
        out.say(f"witness from decomposition: {'passes' if split.check_split_witness(red, w) else 'fails'}")
    return EXIT_YES


def cmd_gen(args, out: _Out) -> int:
    if args.kind == "tree":
        g = constructions.gen_random_tree(args.n, args.seed)
    elif args.kind == "cobip":
        g = constructions.gen_random_cobip(args.n, args.n2 or args.n, args.model, args.seed)
    else:
        g, d = constructions.gen_ham_decomposable_4regular(args.n, args.seed)
        if args.decomposition_out:
            Path(args.decomposition_out).write_text(formats.format_decomposition(d), encoding="utf-8")
    _emit_graph(out, g, args.output)
    return EXIT_YES


def cmd_render(args, out: _Out) -> int:
    rep = formats.read_rep(args.rep)
    Path(args.output).write_text(render_svg(rep), encoding="utf-8")
    out.say(f"wrote {args.output}")
    return EXIT_YES


def cmd_bench(args, out: _Out) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    prev = None
    for n in sizes:
        inst = constructions.gen_sparse_difference(n, args.seed)
        best = float("inf")
        # same convention as timeit: collector off, best of the repeats
        enabled = gc.isenabled()
        gc.disable()
        try:
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                res = cobip.recognize_cobipartite(inst)
                best = min(best, time.perf_counter() - t0)
        finally:
            if enabled:
                gc.enable()
        m = sum(len(inst.cross[v]) for v in inst.k)
        row = {"n": n, "m": m, "seconds": round(best, 6), "decision": "yes" if res.decision else "no"}
        if prev:
            row["ratio"] = round(best / prev, 3)
        prev = best
        out.json(row)
    return EXIT_YES


# -------------------------------------------------------------------- parser

def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="b1enpg", description="One-bend ENPG recognition and constructions")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("recognize", help="decide one-bend ENPG membership")
    r.add_argument("family", choices=["cobip", "split"])
    r.add_argument("graph")
    r.add_argument("--max-bruteforce-k", type=int, default=8)
    r.add_argument("--deterministic", action="store_true", help="the search is always sequential; kept for scripts")
    r.add_argument("--witness-out")
    r.set_defaults(func=cmd_recognize)

    f = sub.add_parser("filter", help="degree-class size filter for split graphs")
    f.add_argument("family", choices=["split"])
    f.add_argument("graph")
    f.set_defaults(func=cmd_filter)

    b = sub.add_parser("build", help="construct a one-bend representation")
    b.add_argument("what", choices=["cycle", "tree", "cobip", "split"])
    b.add_argument("target", help="k for cycle, otherwise a graph file")
    b.add_argument("--root")
    b.add_argument("--witness")
    b.add_argument("--max-bruteforce-k", type=int, default=8)
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="check a representation against a graph")
    v.add_argument("--bends", type=int, required=True)
    v.add_argument("graph")
    v.add_argument("rep")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("reduce", help="Hamiltonian decomposition to split graph reduction")
    d.add_argument("which", choices=["ham2split"])
    d.add_argument("graph")
    d.add_argument("--decomposition")
    d.add_argument("--witness-out")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_reduce)

    g = sub.add_parser("gen", help="seeded instance generators")
    g.add_argument("kind", choices=["tree", "cobip", "4reg"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--n2", type=int)
    g.add_argument("--model", choices=list(constructions.COBIP_MODELS), default="difference")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--decomposition-out")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("render", help="draw a representation as SVG")
    s.add_argument("rep")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_render)

    h = sub.add_parser("bench", help="time the co-bipartite recognizer")
    h.add_argument("family", choices=["cobip"])
    h.add_argument("--sizes", default="1000,10000,100000")
    h.add_argument("--repeat", type=int, default=5)
    h.add_argument("--seed", type=int, default=0)
    h.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    out = _Out(stdout, stderr)
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_YES
    try:
        return args.func(args, out)
    except cobip.GuardError as exc:
        out.json({"error": "guard", "message": str(exc)})
        out.say(f"refused: {exc}", False)
        return EXIT_GUARD
    except (GraphFormatError, OSError, cobip.NotCoBipartiteError, split.WitnessError,
            reduction.InvalidDecomposition, ValueError) as exc:
        out.json({"error": type(exc).__name__, "message": str(exc)})
        out.say(f"error: {exc}", False)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
