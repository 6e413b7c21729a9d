"""Find a one-bend layout of C4 by exhaustive search.

The layout frozen in constructions.C4_LAYOUT came from this script:

    python scripts/search_layouts.py --size 4 --edges 3
"""

import argparse
import time

from b1enpg.constructions import cycle_graph
from b1enpg.formats import format_rep
from b1enpg.grid import verify_rep
from b1enpg.search import PathSpace, search_representation


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--size", type=int, default=4)
    ap.add_argument("--edges", type=int, default=3)
    args = ap.parse_args()

    g = cycle_graph(args.k)
    t0 = time.perf_counter()
    space = PathSpace.build(args.size, args.edges)
    res = search_representation(g, space)
    dt = time.perf_counter() - t0
    print(f"# {len(space.paths)} candidate paths, {res.nodes} nodes, {dt:.2f}s")
    if res.rep is None:
        print("# no layout in this window")
        return
    assert verify_rep(res.rep, g, 1)
    print(format_rep(res.rep, full=False), end="")


if __name__ == "__main__":
    main()
