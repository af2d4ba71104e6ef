"""Rainbow edge colorings with at most 2*alpha(G) - 1 colors, plus exact oracles."""

from .cases import ColoringCertificate, VerificationError
from .coloring import EdgeColoring, read_coloring, read_graph, write_coloring, write_graph
from .dominating import DominatingTree, PreconditionError, ProofGapError, build_dominating_tree
from .families import generate_family, parse_family
from .graph import Graph, GraphError, blow_up, bridges, diameter, from_edge_list
from .oracles import (BudgetExceeded, clique_cover_number, independence_number, is_rainbow_connected,
                      rc_exact)
from .pipeline import preprocess_bridges, rainbow_color_bounded

__version__ = "0.1.0"
