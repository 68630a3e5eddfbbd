"""Junctions and lowest common ancestors in directed acyclic graphs."""

from .arborescence import (
    ArcClass,
    Arborescence,
    build_arborescence,
    check_property1,
    classify_arcs,
    vertex_of,
)
from .graph import (
    CycleError,
    Digraph,
    ParseError,
    ReachabilityMatrix,
    descendants,
    parse_edge_list,
    reachability,
    serialize_edge_list,
    validate_dag,
)
from .junction import (
    JunctionIndex,
    PairReport,
    build_junction_index,
    init_representatives,
    is_junction,
    iter_junction_pairs,
    junctions_of_pairs,
    pairs_with_junction,
    single_junction_all_pairs,
)
from .lca import LcaReport, lcas_of_pairs

__all__ = [
    "ArcClass",
    "Arborescence",
    "CycleError",
    "Digraph",
    "JunctionIndex",
    "LcaReport",
    "PairReport",
    "ParseError",
    "ReachabilityMatrix",
    "build_arborescence",
    "build_junction_index",
    "check_property1",
    "classify_arcs",
    "descendants",
    "init_representatives",
    "is_junction",
    "iter_junction_pairs",
    "junctions_of_pairs",
    "lcas_of_pairs",
    "pairs_with_junction",
    "parse_edge_list",
    "reachability",
    "serialize_edge_list",
    "single_junction_all_pairs",
    "validate_dag",
    "vertex_of",
]
