"""Independent reference implementations used only by the tests."""

import random
from collections import deque
from fractions import Fraction
from itertools import combinations, product

from minecc.hypergraph import ColoredHypergraph, generate_random


def edmonds_karp(n, arcs, s, t):
    """Shortest-augmenting-path max flow on a dense capacity matrix."""
    cap = [[0] * n for _ in range(n)]
    for u, v, c in arcs:
        cap[u][v] += c
    flow = 0
    while True:
        parent = [-1] * n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] == -1:
            u = queue.popleft()
            for v in range(n):
                if cap[u][v] > 0 and parent[v] == -1:
                    parent[v] = u
                    queue.append(v)
        if parent[t] == -1:
            return flow
        push = None
        v = t
        while v != s:
            u = parent[v]
            push = cap[u][v] if push is None else min(push, cap[u][v])
            v = u
        v = t
        while v != s:
            u = parent[v]
            cap[u][v] -= push
            cap[v][u] += push
            v = u
        flow += push


def all_pairs_bad(H):
    """O(|E|^2) bad pairs as sorted id tuples."""
    out = []
    for e, f in combinations(H.edges, 2):
        if e.color != f.color and set(e.nodes) & set(f.nodes):
            out.append((min(e.id, f.id), max(e.id, f.id)))
    return sorted(out)


def per_edge_objective(H, coloring):
    total = 0
    for e in H.edges:
        satisfied = True
        for u in e.nodes:
            if coloring[u - 1] != e.color:
                satisfied = False
        if not satisfied:
            total += e.weight
    return total


def min_deletion_by_subsets(H):
    """Cheapest deletion set leaving no bad pair, over all 2^|E| subsets."""
    pairs = all_pairs_bad(H)
    ids = [e.id for e in H.edges]
    weight = {e.id: e.weight for e in H.edges}
    best = None
    for mask in range(1 << len(ids)):
        gone = {ids[i] for i in range(len(ids)) if mask >> i & 1}
        if all(a in gone or b in gone for a, b in pairs):
            w = sum(weight[i] for i in gone)
            if best is None or w < best:
                best = w
    return best


def min_coloring_all_colors(H):
    """Exact MinECC letting every node take any of the k colors."""
    best = None
    for coloring in product(range(1, H.color_count + 1), repeat=H.node_count):
        w = per_edge_objective(H, coloring)
        if best is None or w < best:
            best = w
    return best


def lpvc_full_enumeration(H):
    """min sum w x over all of {0, 1/2, 1}^E, no pruning."""
    pairs = all_pairs_bad(H)
    ids = [e.id for e in H.edges]
    weight = [e.weight for e in H.edges]
    idx = {i: p for p, i in enumerate(ids)}
    best = None
    for xs in product((0, 1, 2), repeat=len(ids)):
        if all(xs[idx[a]] + xs[idx[b]] >= 2 for a, b in pairs):
            v = sum(w * x for w, x in zip(weight, xs))
            if best is None or v < best:
                best = v
    return Fraction(best, 2)


def small_instance(seed):
    """|V| <= 8, |E| <= 10, k <= 4, weights 1..5."""
    rng = random.Random(seed)
    n = rng.randint(1, 8)
    m = rng.randint(0, 10)
    k = rng.randint(1, 4)
    max_size = rng.randint(1, min(4, n))
    return generate_random(n, m, k, max_size, 5, seed)


def t1():
    return ColoredHypergraph.from_edges(3, 2, [(1, 1, [1, 2]), (2, 1, [2, 3]), (1, 1, [1, 3])])


T1_TEXT = "minecc 3 3 2\n1 1 1 2\n2 1 2 3\n1 1 1 3\n"
