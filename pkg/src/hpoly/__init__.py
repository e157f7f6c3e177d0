"""Exact chromatic H-polynomials: induced copies of a pattern H in coloring graphs."""

from __future__ import annotations

from .closed_forms import (FamilySpec, c4_count_poly, c6_count_poly, chromatic_closed,
                           clique_closed, clique_general, family_spec, pairs_closed,
                           pairs_general, sigma_tau)
from .errors import (BudgetExceeded, DivisibilityError, DomainError, GraphFormatError,
                     HPolyError, NotATreeError)
from .generators import Generator, enumerate_minimal_generators, hpoly
from .graph import (Graph, GraphStats, contract_edge, induced_subgraph, is_isomorphic,
                    named_pattern, parse_graph6, parse_edge_list, read_graph, stats,
                    to_graph6)
from .poly import Poly, binomial_poly, derivative, divide_exact, evaluate
from .restrained import Restraint, restraint_from_generator, rho

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "DivisibilityError", "DomainError", "FamilySpec", "Generator",
    "Graph", "GraphFormatError", "GraphStats", "HPolyError", "NotATreeError", "Poly",
    "Restraint", "binomial_poly", "c4_count_poly", "c6_count_poly", "chromatic_closed",
    "clique_closed", "clique_general", "contract_edge", "derivative", "divide_exact",
    "enumerate_minimal_generators", "evaluate", "family_spec", "hpoly",
    "induced_subgraph", "is_isomorphic", "named_pattern", "pairs_closed",
    "pairs_general", "parse_edge_list", "parse_graph6", "read_graph", "restraint_from_generator",
    "rho", "sigma_tau", "stats", "to_graph6",
]
