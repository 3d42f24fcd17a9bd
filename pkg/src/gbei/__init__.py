"""Depth bounds and exact depths for generalized binomial edge ideals."""

from .bounds import (DepthReport, ExactDepth, FormulaConflict, check_d_compatible, exact_depth,
                     lower_bound, psi, report, upper_bound)
from .caps import Caps, get_caps, parse_caps
from .classes import (ClassReport, classify, is_block_graph, is_chordal, is_generalized_block_graph,
                      is_in_h1, is_in_h3, is_strongly_unmixed, maximal_cliques,
                      strongly_unmixed_certificate, triangle_chain)
from .completion import complete_at, complete_at_set, complete_in_order, is_in_h2
from .connectivity import vertex_connectivity
from .cutsets import enumerate_cutsets, has_cut_point_property, is_accessible, is_unmixed
from .errors import (CapExceeded, CompleteInput, DisconnectedInput, GBEIError, GBTimeout,
                     InvalidGraph, NotACutset, NotSquarefree)
from .graph import SimpleGraph, invariants, parse_graph
from .oracle import depth_oracle, oracle_depth

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "Caps",
    "ClassReport",
    "CompleteInput",
    "DepthReport",
    "DisconnectedInput",
    "ExactDepth",
    "FormulaConflict",
    "GBEIError",
    "GBTimeout",
    "InvalidGraph",
    "NotACutset",
    "NotSquarefree",
    "SimpleGraph",
    "check_d_compatible",
    "classify",
    "complete_at",
    "complete_at_set",
    "complete_in_order",
    "depth_oracle",
    "enumerate_cutsets",
    "exact_depth",
    "get_caps",
    "has_cut_point_property",
    "invariants",
    "is_accessible",
    "is_block_graph",
    "is_chordal",
    "is_generalized_block_graph",
    "is_in_h1",
    "is_in_h2",
    "is_in_h3",
    "is_strongly_unmixed",
    "is_unmixed",
    "lower_bound",
    "maximal_cliques",
    "oracle_depth",
    "parse_caps",
    "parse_graph",
    "psi",
    "report",
    "strongly_unmixed_certificate",
    "triangle_chain",
    "upper_bound",
    "vertex_connectivity",
]
