"""Exhaustive search for a representation of the 3K2 co-bipartite graph in
which every path has exactly one bend.

Finding nothing is evidence that some path must stay straight.  With
--straight the straight paths are allowed too, which acts as a positive
control: the same search must then succeed.
"""

import argparse
import json
import time

from b1enpg.cobip import three_k2
from b1enpg.grid import verify_rep
from b1enpg.search import PathSpace, search_representation


def run(size: int, edges: int, straight: bool = False) -> dict:
    g = three_k2()
    t0 = time.perf_counter()
    space = PathSpace.build(size, edges, allow_straight=straight)
    res = search_representation(g, space)
    found = res.rep is not None
    if found:
        assert verify_rep(res.rep, g, 1)
    return {
        "size": size, "max_edges": edges, "straight": straight, "candidates": len(space.paths),
        "nodes": res.nodes, "found": found, "seconds": round(time.perf_counter() - t0, 2),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=8)
    ap.add_argument("--edges", type=int, default=7)
    ap.add_argument("--straight", action="store_true")
    args = ap.parse_args()
    print(json.dumps(run(args.size, args.edges, args.straight)))


if __name__ == "__main__":
    main()
