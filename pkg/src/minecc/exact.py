"""Exhaustive oracles for small instances."""

from __future__ import annotations

import time
from fractions import Fraction
from math import prod

from .hypergraph import ColoredHypergraph, GuardError, bad_pair_positions, unsatisfied_edges
from .result import HalfIntegralSolution, SolveResult

MAX_COLORINGS = 10**7
MAX_LP_EDGES = 12


def search_space(H: ColoredHypergraph) -> int:
    return prod(max(len(c), 1) for c in H.node_colors)


def brute_force_minecc(H: ColoredHypergraph, limit: int = MAX_COLORINGS) -> tuple[tuple[int, ...], int]:
    """Optimal coloring and its unsatisfied weight.

    Each node ranges over C(u) only (color 1 if C(u) is empty). Branches are
    cut once their partial cost reaches the incumbent, so the first optimum
    found, which is the lexicographically smallest, is the one returned.
    """
    space = search_space(H)
    if space > limit:
        raise GuardError(f"search space {space} exceeds limit {limit}")
    coloring = [c[0] if c else 1 for c in H.node_colors]
    free = [u for u, c in enumerate(H.node_colors) if len(c) > 1]

    colors = [e.color for e in H.edges]
    weights = [e.weight for e in H.edges]
    broken = [0] * H.m  # nodes of the edge colored against it so far
    base = 0
    for p, e in enumerate(H.edges):
        for u in e.nodes:
            if len(H.node_colors[u - 1]) <= 1 and coloring[u - 1] != e.color:
                broken[p] += 1
        if broken[p]:
            base += weights[p]

    best = [None, None]

    def search(i: int, cost: int) -> None:
        if best[1] is not None and cost >= best[1]:
            return
        if i == len(free):
            best[0], best[1] = tuple(coloring), cost
            return
        u = free[i]
        inc = H.incidence[u]
        for c in H.node_colors[u]:
            coloring[u] = c
            added = 0
            for p in inc:
                if colors[p] != c:
                    if broken[p] == 0:
                        added += weights[p]
                    broken[p] += 1
            search(i + 1, cost + added)
            for p in inc:
                if colors[p] != c:
                    broken[p] -= 1

    search(0, base)
    return best[0], best[1]


def brute_force_lpvc(H: ColoredHypergraph, max_edges: int = MAX_LP_EDGES) -> tuple[HalfIntegralSolution, Fraction]:
    """Minimum of sum w(e) x_e over x in {0, 1/2, 1}^E covering every bad pair."""
    m = H.m
    if m > max_edges:
        raise GuardError(f"{m} edges exceeds the LP enumeration limit of {max_edges}")
    pairs = bad_pair_positions(H, None)
    earlier: list[list[int]] = [[] for _ in range(m)]
    for p, q in pairs:
        earlier[q].append(p)
    in_pair = [False] * m
    for p, q in pairs:
        in_pair[p] = in_pair[q] = True
    weights = [e.weight for e in H.edges]
    halves = [0] * m
    best = [None, None]

    def search(p: int, cost: int) -> None:
        if best[1] is not None and cost >= best[1]:
            return
        if p == m:
            if best[1] is None or cost < best[1]:
                best[0], best[1] = tuple(halves), cost
            return
        choices = (0, 1, 2) if in_pair[p] else (0,)
        for h in choices:
            if all(halves[q] + h >= 2 for q in earlier[p]):
                halves[p] = h
                search(p + 1, cost + weights[p] * h)
        halves[p] = 0

    search(0, 0)
    return HalfIntegralSolution(best[0]), Fraction(best[1], 2)


def exact(H: ColoredHypergraph, limit: int = MAX_COLORINGS) -> SolveResult:
    start = time.perf_counter()
    coloring, value = brute_force_minecc(H, limit)
    deleted = frozenset(unsatisfied_edges(H, coloring))
    elapsed = (time.perf_counter() - start) * 1000
    return SolveResult(
        algorithm="exact",
        deleted=deleted,
        coloring=coloring,
        objective=value,
        runtime_ms=elapsed,
        counters={"search_space": search_space(H)},
        k_present=len(H.colors_present),
    )
