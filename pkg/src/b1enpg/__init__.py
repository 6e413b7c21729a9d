"""One-bend edge-intersecting non-splitting paths in a grid (B1-ENPG):
recognizers, certificates and representation builders."""

from .cobip import CoBipartite, build_cobip_rep, brute_force_zed_oracle, recognize_cobipartite
from .constructions import build_cycle_rep, build_tree_rep
from .graph import Graph
from .grid import LatticePath, Representation, enpg_from_rep, verify_rep
from .split import SplitWitness, build_split_rep, check_split_witness, split_size_filter

__all__ = [
    "CoBipartite", "Graph", "LatticePath", "Representation", "SplitWitness",
    "brute_force_zed_oracle", "build_cobip_rep", "build_cycle_rep", "build_split_rep",
    "build_tree_rep", "check_split_witness", "enpg_from_rep", "recognize_cobipartite",
    "split_size_filter", "verify_rep",
]
