import re

from b1enpg import build_cycle_rep
from b1enpg.cobip import three_k2
from b1enpg.grid import LatticePath, Representation
from b1enpg.render import render_svg
from b1enpg.search import PathSpace, search_representation, window_paths


def test_svg_has_one_polyline_per_path_and_split_crosses():
    rep = Representation({
        "p": LatticePath.through((0, 0), (2, 0)),
        "q": LatticePath.through((0, 0), (1, 0), (1, 1)),
    })
    svg = render_svg(rep)
    assert svg.count("<polyline") == 2
    assert svg.count("<circle") == 1
    # the split at (1, 0) is drawn as a cross
    assert len(re.findall(r'<path d="M', svg)) == 1


def test_svg_of_cycle():
    assert render_svg(build_cycle_rep(6)).count("<polyline") == 6


def test_window_paths_are_one_bend_and_unique():
    paths = window_paths(4, 3)
    assert all(p.bends == 1 and len(p) <= 3 for p in paths)
    keys = {min(p.points, p.points[::-1]) for p in paths}
    assert len(keys) == len(paths)


def test_three_k2_small_windows():
    g = three_k2()
    assert search_representation(g, PathSpace.build(5, 4)).rep is None
    assert search_representation(g, PathSpace.build(6, 7, allow_straight=True)).rep is not None
