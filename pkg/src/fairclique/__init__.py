"""Maximum relative fair clique search on two-attribute graphs."""

from .bounds import BoundContext, evaluate_bounds, parse_bound_names
from .color import Coloring, greedy_color
from .graph import A, B, AttributedGraph, VertexSet, load_graph
from .heuristic import colorful_deg_heur, deg_heur, heur_rfc
from .oracle import max_fair_in_clique, oracle_max_fair_clique
from .reduce import reduce_pipeline
from .result import FairCliqueResult, verify_fair_clique
from .search import SearchConfig, max_rfc

__version__ = "0.1.0"

__all__ = [
    "A", "B", "AttributedGraph", "VertexSet", "load_graph",
    "Coloring", "greedy_color",
    "reduce_pipeline",
    "BoundContext", "evaluate_bounds", "parse_bound_names",
    "SearchConfig", "max_rfc", "FairCliqueResult", "verify_fair_clique",
    "deg_heur", "colorful_deg_heur", "heur_rfc",
    "max_fair_in_clique", "oracle_max_fair_clique",
]
