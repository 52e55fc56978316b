"""Depth of powers of edge ideals: exact oracle, closed-form bounds, sweeps."""

__version__ = "0.1.0"

from .monomials import Monomial, MonomialIdeal, ideal_colon_monomial, ideal_power, minimalize, parse_monomial
from .graphs import Graph, builtin, edge_ideal, paper_example, parse_edge_list
from .homology import GF2, RATIONALS, Field, SimplicialComplex, reduced_homology_dims
from .oracle import BOX, LATTICE, betti_table, depth, socle_depth_zero
from .bounds import BoundReport, bound_power, bound_report

__all__ = [
    "Monomial", "MonomialIdeal", "ideal_colon_monomial", "ideal_power", "minimalize", "parse_monomial",
    "Graph", "builtin", "edge_ideal", "paper_example", "parse_edge_list",
    "GF2", "RATIONALS", "Field", "SimplicialComplex", "reduced_homology_dims",
    "BOX", "LATTICE", "betti_table", "depth", "socle_depth_zero",
    "BoundReport", "bound_power", "bound_report",
]
