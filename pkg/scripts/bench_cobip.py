"""Scaling check for the co-bipartite recognizer, next to a bare linear pass
over the same instance as a yardstick for what the interpreter and memory
hierarchy alone cost per 10x."""

import argparse
import gc
import time

from b1enpg.cobip import recognize_cobipartite
from b1enpg.constructions import gen_sparse_difference


def best_of(fn, repeat: int) -> float:
    enabled = gc.isenabled()
    gc.disable()
    try:
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            best = min(best, time.perf_counter() - t0)
        return best
    finally:
        if enabled:
            gc.enable()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="1000,10000,100000")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    prev = None
    print(f"{'n':>8} {'recognize':>10} {'ratio':>6} {'linear':>10} {'ratio':>6}")
    for n in (int(s) for s in args.sizes.split(",")):
        inst = gen_sparse_difference(n, args.seed)
        t = best_of(lambda: recognize_cobipartite(inst), args.repeat)
        b = best_of(lambda: {v: len(s) for v, s in inst.cross.items()}, args.repeat)
        r1 = f"{t / prev[0]:6.1f}" if prev else "     -"
        r2 = f"{b / prev[1]:6.1f}" if prev else "     -"
        print(f"{n:>8} {t:10.5f} {r1} {b:10.5f} {r2}")
        prev = (t, b)


if __name__ == "__main__":
    main()
