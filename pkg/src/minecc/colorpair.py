"""ColorPair-Flow: the (2 - 2/k)-approximation for MinECC.

The color-pair network has one alpha/beta node pair per edge and one per
(node, incident color). A minimum s-t cut gives an optimal binary solution
of the color-pair program, which maps onto an optimal half-integral LP_VC
solution. That solution is then rounded by keeping the half-valued edges of
the heaviest color.

Network layout (dense indices)::

    0                    s
    1                    t
    2 + p                alpha of edge at position p      (p < m)
    2 + m + p            beta of edge at position p
    2 + 2m + j           alpha of slot j                  (j < P)
    2 + 2m + P + j       beta of slot j

Slots enumerate (u, i) for u = 1..n and i in C(u), in that order; P is the
sum of |C(u)|.

All capacities are doubled so that half an edge weight stays integral: the
s/t arcs carry ``w(e)`` and the cut value equals twice the LP optimum.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .hypergraph import ColoredHypergraph, coloring_from_deletions
from .maxflow import CutResult, FlowNetwork, solve_min_cut
from .result import HalfIntegralSolution, SolveResult


@dataclass(frozen=True)
class ColorPairLayout:
    H: ColoredHypergraph
    slot_start: tuple[int, ...]  # first slot of node u at index u - 1
    slots: int

    @property
    def m(self) -> int:
        return self.H.m

    def alpha_edge(self, p: int) -> int:
        return 2 + p

    def beta_edge(self, p: int) -> int:
        return 2 + self.m + p

    def slot(self, u: int, color: int) -> int:
        start = self.slot_start[u - 1]
        return start + self.H.node_colors[u - 1].index(color)

    def alpha_slot(self, j: int) -> int:
        return 2 + 2 * self.m + j

    def beta_slot(self, j: int) -> int:
        return 2 + 2 * self.m + self.slots + j


@dataclass(frozen=True)
class BlpSolution:
    """Binary solution of the color-pair program, read off a cut.

    Edge variables are indexed by canonical position, node-color variables by
    layout slot.
    """

    a_edge: tuple[int, ...]
    b_edge: tuple[int, ...]
    a_slot: tuple[int, ...]
    b_slot: tuple[int, ...]

    def objective_halves(self, H: ColoredHypergraph) -> int:
        """Twice the objective, sum of w(e) * (b_e - a_e + 1)."""
        return sum(
            e.weight * (b - a + 1) for e, a, b in zip(H.edges, self.a_edge, self.b_edge)
        )

    def violations(self, layout: ColorPairLayout) -> list[str]:
        H = layout.H
        out = []
        for p, e in enumerate(H.edges):
            for u in e.nodes:
                j = layout.slot(u, e.color)
                if self.a_edge[p] > self.a_slot[j]:
                    out.append(f"a_e > a_u for edge {e.id}, node {u}")
                if self.b_slot[j] > self.b_edge[p]:
                    out.append(f"b_u > b_e for edge {e.id}, node {u}")
        for u, colors in enumerate(H.node_colors, start=1):
            start = layout.slot_start[u - 1]
            for i, j in combinations(range(len(colors)), 2):
                if self.a_slot[start + i] > self.b_slot[start + j]:
                    out.append(f"a_u^i > b_u^j at node {u}")
                if self.a_slot[start + j] > self.b_slot[start + i]:
                    out.append(f"a_u^j > b_u^i at node {u}")
        return out


def network_size(H: ColoredHypergraph) -> tuple[int, int]:
    """Closed-form node and arc counts of the color-pair network."""
    sum_colors = sum(len(c) for c in H.node_colors)
    pairs = sum(len(c) * (len(c) - 1) // 2 for c in H.node_colors)
    return 2 + 2 * H.m + 2 * sum_colors, 2 * H.m + 2 * H.mu + 2 * pairs


def build_colorpair_network(H: ColoredHypergraph) -> tuple[FlowNetwork, ColorPairLayout]:
    starts = []
    total = 0
    for colors in H.node_colors:
        starts.append(total)
        total += len(colors)
    layout = ColorPairLayout(H, tuple(starts), total)
    m = H.m
    net = FlowNetwork(2 + 2 * m + 2 * total)
    inf = 2 * H.total_weight + 1
    a_base = 2 + 2 * m
    b_base = a_base + total

    # a_u^i <= b_u^j and a_u^j <= b_u^i
    for u, colors in enumerate(H.node_colors):
        start = starts[u]
        for i, j in combinations(range(len(colors)), 2):
            net.add_arc(a_base + start + i, b_base + start + j, inf)
            net.add_arc(a_base + start + j, b_base + start + i, inf)
    # a_e <= a_u^l(e) and b_u^l(e) <= b_e
    for p, e in enumerate(H.edges):
        for u in e.nodes:
            j = layout.slot(u, e.color)
            net.add_arc(2 + p, a_base + j, inf)
            net.add_arc(b_base + j, 2 + m + p, inf)
    for p, e in enumerate(H.edges):
        net.add_arc(net.source, 2 + p, e.weight)
        net.add_arc(2 + m + p, net.sink, e.weight)
    return net, layout


def extract_blp_solution(cut: CutResult, layout: ColorPairLayout) -> BlpSolution:
    S = cut.source_side
    m, P = layout.m, layout.slots
    blp = BlpSolution(
        a_edge=tuple(int(2 + p in S) for p in range(m)),
        b_edge=tuple(int(2 + m + p in S) for p in range(m)),
        a_slot=tuple(int(2 + 2 * m + j in S) for j in range(P)),
        b_slot=tuple(int(2 + 2 * m + P + j in S) for j in range(P)),
    )
    bad = blp.violations(layout)
    if bad:
        raise RuntimeError("cut violates color-pair constraints: " + "; ".join(bad[:5]))
    return blp


def blp_to_lpvc(blp: BlpSolution, H: ColoredHypergraph) -> HalfIntegralSolution:
    # twice x_e = b_e - a_e + 1
    return HalfIntegralSolution(tuple(b - a + 1 for a, b in zip(blp.a_edge, blp.b_edge)))


def round_half_integral(H: ColoredHypergraph, x: HalfIntegralSolution) -> frozenset[int]:
    """Delete the 1-edges and every half-edge outside the heaviest half color."""
    half_weight: dict[int, int] = {}
    for e, h in zip(H.edges, x.halves):
        if h == 1:
            half_weight[e.color] = half_weight.get(e.color, 0) + e.weight
    keep = None
    if half_weight:
        # ties go to the smallest color id
        keep = min(half_weight, key=lambda c: (-half_weight[c], c))
    return frozenset(
        e.id for e, h in zip(H.edges, x.halves)
        if h == 2 or (h == 1 and e.color != keep)
    )


def solve_lpvc(H: ColoredHypergraph) -> tuple[HalfIntegralSolution, Fraction, dict]:
    """Optimal half-integral LP_VC solution via the color-pair cut."""
    net, layout = build_colorpair_network(H)
    cut, res = solve_min_cut(net)
    blp = extract_blp_solution(cut, layout)
    x = blp_to_lpvc(blp, H)
    counters = dict(res.counters, network_nodes=net.node_count, network_arcs=net.arc_count)
    return x, Fraction(cut.value, 2), counters


def colorpair_flow(H: ColoredHypergraph) -> SolveResult:
    start = time.perf_counter()
    x, bound, counters = solve_lpvc(H)
    if x.value(H) != bound:
        raise RuntimeError("extracted LP_VC value disagrees with the cut value")
    deleted = round_half_integral(H, x)
    coloring = coloring_from_deletions(H, deleted)
    elapsed = (time.perf_counter() - start) * 1000
    return SolveResult(
        algorithm="colorpair",
        deleted=deleted,
        coloring=coloring,
        objective=H.weight_of(deleted),
        lower_bound=bound,
        runtime_ms=elapsed,
        counters=counters,
        x=x,
        k_present=len(H.colors_present),
    )
