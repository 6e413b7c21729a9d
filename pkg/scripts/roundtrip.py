"""Build then verify one-bend representations for every family with a
constructive builder, and report counts and timing."""

import argparse
import random
import time

from b1enpg import build_cobip_rep, build_cycle_rep, build_split_rep, build_tree_rep, recognize_cobipartite, verify_rep
from b1enpg.constructions import cycle_graph, gen_random_cobip, gen_random_tree
from b1enpg.split import check_split_witness
from b1enpg.split_search import gen_random_split_witness


def cases(seed: int, trees: int, cobips: int, splits: int):
    for k in range(3, 21):
        yield "cycle", cycle_graph(k), lambda k=k: build_cycle_rep(k)
    rng = random.Random(seed)
    for i in range(trees):
        t = gen_random_tree(rng.randint(1, 40), seed + i)
        yield "tree", t, lambda t=t: build_tree_rep(t)
    for i in range(cobips):
        g = gen_random_cobip(rng.randint(1, 30), rng.randint(1, 30), "difference", seed + i)
        yield "cobip", g, lambda g=g: build_cobip_rep(g, recognize_cobipartite(g))
    for _ in range(splits):
        g, w = gen_random_split_witness(rng, rng.randint(2, 8), rng.randint(1, 12))
        assert check_split_witness(g, w)
        yield "split", g, lambda g=g, w=w: build_split_rep(g, w)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trees", type=int, default=200)
    ap.add_argument("--cobips", type=int, default=100)
    ap.add_argument("--splits", type=int, default=50)
    args = ap.parse_args()
    t0 = time.perf_counter()
    tally: dict[str, list[int]] = {}
    for family, g, build in cases(args.seed, args.trees, args.cobips, args.splits):
        ok = bool(verify_rep(build(), g, 1))
        tally.setdefault(family, [0, 0])[ok] += 1
        if not ok:
            print(f"FAIL {family} n={g.n} m={g.m}")
    for family, (bad, good) in tally.items():
        print(f"{family:6s} {good}/{good + bad}")
    print(f"total {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
