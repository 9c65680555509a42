"""Deterministic local-ratio 2-approximations.

``local_ratio_vc`` is the textbook weighted vertex cover routine.
``local_ratio_ecc`` runs the same weight reductions on the implicit bad-pair
graph of a hypergraph, walking each node's color-sorted incidence list from
both ends so that every step deletes at least one edge.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from .hypergraph import DEFAULT_PAIR_CAP, ColoredHypergraph, bad_pair_positions, coloring_from_deletions
from .result import SolveResult


@dataclass(frozen=True)
class VcGraph:
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise ValueError("node weights must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at node {u}")


def local_ratio_vc(G: VcGraph) -> frozenset[int]:
    residual = list(G.weights)
    for u, v in G.edges:
        M = min(residual[u], residual[v])
        residual[u] -= M
        residual[v] -= M
    return frozenset(v for v, r in enumerate(residual) if r == 0)


def reduce_to_vertex_cover(H: ColoredHypergraph, cap: int | None = DEFAULT_PAIR_CAP) -> VcGraph:
    """Vertex cover instance on edge positions, one graph edge per bad pair."""
    return VcGraph(
        tuple(e.weight for e in H.edges),
        tuple(bad_pair_positions(H, cap)),
    )


def local_ratio_ecc(H: ColoredHypergraph, counters: dict | None = None) -> frozenset[int]:
    """Edge ids to delete; weights are reduced on a private copy."""
    w = [e.weight for e in H.edges]
    color = [e.color for e in H.edges]
    deleted = [False] * len(w)
    work = 0
    for inc in H.incidence:
        d = len(inc)
        if d < 2:
            continue
        f, b = 0, d - 1
        while deleted[inc[b]] and b > f:
            b -= 1
            work += 1
        while deleted[inc[f]] and b > f:
            f += 1
            work += 1
        while color[inc[f]] != color[inc[b]]:
            ef, eb = inc[f], inc[b]
            wf, wb = w[ef], w[eb]
            work += 1
            if wf < wb:
                deleted[ef] = True
                w[eb] = wb - wf
                w[ef] = 0
                while deleted[inc[f]] and b > f:
                    f += 1
                    work += 1
            elif wf == wb:
                deleted[ef] = deleted[eb] = True
                w[ef] = w[eb] = 0
                while deleted[inc[f]] and b > f:
                    f += 1
                    work += 1
                while deleted[inc[b]] and b > f:
                    b -= 1
                    work += 1
            else:
                deleted[eb] = True
                w[ef] = wf - wb
                w[eb] = 0
                while deleted[inc[b]] and b > f:
                    b -= 1
                    work += 1
    if counters is not None:
        counters["work"] = work
    return frozenset(e.id for e, gone in zip(H.edges, deleted) if gone)


def local_ratio(H: ColoredHypergraph) -> SolveResult:
    start = time.perf_counter()
    counters: dict = {}
    deleted = local_ratio_ecc(H, counters)
    coloring = coloring_from_deletions(H, deleted)
    elapsed = (time.perf_counter() - start) * 1000
    return SolveResult(
        algorithm="localratio",
        deleted=deleted,
        coloring=coloring,
        objective=H.weight_of(deleted),
        runtime_ms=elapsed,
        counters=counters,
        k_present=len(H.colors_present),
    )


def cover_weight(G: VcGraph, cover: Sequence[int] | frozenset[int]) -> int:
    return sum(G.weights[v] for v in cover)
