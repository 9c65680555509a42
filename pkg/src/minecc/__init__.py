"""Minimum edge-colored clustering in edge-colored hypergraphs."""

from .colorpair import (
    build_colorpair_network,
    blp_to_lpvc,
    colorpair_flow,
    extract_blp_solution,
    round_half_integral,
)
from .exact import brute_force_lpvc, brute_force_minecc
from .hypergraph import (
    BadPair,
    BadPairExplosion,
    ColoredHypergraph,
    FormatError,
    GuardError,
    HyperEdge,
    compute_stats,
    coloring_from_deletions,
    enumerate_bad_pairs,
    generate_random,
    is_conflict_free,
    load_hypergraph,
    parse_hypergraph,
    serialize_hypergraph,
    unsatisfied_weight,
)
from .localratio import VcGraph, local_ratio, local_ratio_ecc, local_ratio_vc
from .maxflow import FlowNetwork, max_flow, min_cut_source_side
from .result import HalfIntegralSolution, SolveResult
from .vcflow import build_vc_network, vc_flow

__version__ = "0.1.0"
