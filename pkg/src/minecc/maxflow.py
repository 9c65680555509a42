"""FIFO push-relabel maximum flow with gap and global relabeling."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


@dataclass
class FlowNetwork:
    """Directed network with integer capacities.

    Arcs are stored as parallel lists. ``inf`` is the finite stand-in for an
    unbounded capacity; builders fill it in once all finite arcs are known.
    """

    node_count: int
    source: int = 0
    sink: int = 1
    tails: list[int] = field(default_factory=list)
    heads: list[int] = field(default_factory=list)
    caps: list[int] = field(default_factory=list)

    def add_arc(self, tail: int, head: int, cap: int) -> None:
        if cap < 0:
            raise ValueError("capacities must be nonnegative")
        self.tails.append(tail)
        self.heads.append(head)
        self.caps.append(cap)

    @property
    def arc_count(self) -> int:
        return len(self.caps)

    @property
    def arcs(self) -> list[tuple[int, int, int]]:
        return list(zip(self.tails, self.heads, self.caps))


@dataclass
class Residual:
    """Residual state after a max-flow run.

    Arc ``i`` of the network is stored at index ``2*i`` with its reverse at
    ``2*i + 1``; ``rcap`` holds residual capacities.
    """

    to: list[int]
    rcap: list[int]
    adj: list[list[int]]
    counters: dict[str, int]

    def flow(self, arc: int) -> int:
        return self.rcap[2 * arc + 1]


@dataclass(frozen=True)
class CutResult:
    value: int
    source_side: frozenset[int]


def _residual_graph(net: FlowNetwork) -> Residual:
    to: list[int] = []
    rcap: list[int] = []
    adj: list[list[int]] = [[] for _ in range(net.node_count)]
    for i, (u, v, c) in enumerate(zip(net.tails, net.heads, net.caps)):
        to += (v, u)
        rcap += (c, 0)
        adj[u].append(2 * i)
        adj[v].append(2 * i + 1)
    return Residual(to, rcap, adj, {})


def max_flow(net: FlowNetwork) -> tuple[int, Residual]:
    """Exact maximum s-t flow value and the final residual graph.

    The preflow is driven all the way to a flow: nodes that cannot reach the
    sink climb above ``n`` and return their excess to the source, so flow
    conservation holds at every node except s and t on return.
    """
    n = net.node_count
    s, t = net.source, net.sink
    if s == t:
        raise ValueError("source and sink must differ")
    res = _residual_graph(net)
    to, rcap, adj = res.to, res.rcap, res.adj

    height = [0] * n
    excess = [0] * n
    current = [0] * n
    count = [0] * (2 * n + 1)  # nodes per height, heights < 2n
    active = deque()
    queued = [False] * n
    pushes = relabels = gaps = global_relabels = 0

    def global_relabel():
        # exact distances to t, then to s (offset by n) for the rest
        for v in range(n):
            height[v] = 2 * n
        for root, base in ((t, 0), (s, n)):
            height[root] = base
            bfs = deque([root])
            while bfs:
                v = bfs.popleft()
                hv = height[v] + 1
                for a in adj[v]:
                    u = to[a]
                    # u -> v is residual iff the reverse of a has capacity
                    if rcap[a ^ 1] > 0 and height[u] == 2 * n and u != s and u != t:
                        height[u] = hv
                        bfs.append(u)
        height[s] = n
        height[t] = 0
        for h in range(len(count)):
            count[h] = 0
        for v in range(n):
            if height[v] < 2 * n:
                count[height[v]] += 1
            current[v] = 0

    for a in adj[s]:
        c = rcap[a]
        if c > 0:
            v = to[a]
            rcap[a] = 0
            rcap[a ^ 1] += c
            excess[v] += c
            excess[s] -= c
    global_relabel()
    for v in range(n):
        if excess[v] > 0 and v != s and v != t:
            active.append(v)
            queued[v] = True

    since_global = 0
    while active:
        u = active.popleft()
        queued[u] = False
        if height[u] >= 2 * n:
            continue
        edges = adj[u]
        degree = len(edges)
        while excess[u] > 0:
            i = current[u]
            if i == degree:
                # relabel
                old = height[u]
                best = 2 * n
                for a in edges:
                    if rcap[a] > 0:
                        hv = height[to[a]]
                        if hv < best:
                            best = hv
                new = best + 1
                count[old] -= 1
                height[u] = min(new, 2 * n)
                if height[u] < 2 * n:
                    count[height[u]] += 1
                current[u] = 0
                relabels += 1
                since_global += 1
                if count[old] == 0 and 0 < old < n:
                    gaps += 1
                    for v in range(n):
                        hv = height[v]
                        if old < hv < n and v != s:
                            count[hv] -= 1
                            height[v] = n
                            count[n] += 1
                            current[v] = 0
                if height[u] >= 2 * n:
                    break
                continue
            a = edges[i]
            v = to[a]
            if rcap[a] > 0 and height[u] == height[v] + 1:
                delta = excess[u] if excess[u] < rcap[a] else rcap[a]
                rcap[a] -= delta
                rcap[a ^ 1] += delta
                excess[u] -= delta
                excess[v] += delta
                pushes += 1
                if not queued[v] and v != s and v != t:
                    active.append(v)
                    queued[v] = True
            else:
                current[u] = i + 1
        if excess[u] > 0 and not queued[u] and height[u] < 2 * n:
            active.append(u)
            queued[u] = True
        if since_global >= n:
            since_global = 0
            global_relabels += 1
            global_relabel()

    res.counters.update(
        pushes=pushes, relabels=relabels, gaps=gaps, global_relabels=global_relabels,
    )
    return excess[t], res


def min_cut_source_side(net: FlowNetwork, residual: Residual) -> CutResult:
    """Minimal source side: nodes reachable from s in the residual graph."""
    seen = [False] * net.node_count
    seen[net.source] = True
    queue = deque([net.source])
    to, rcap, adj = residual.to, residual.rcap, residual.adj
    while queue:
        u = queue.popleft()
        for a in adj[u]:
            v = to[a]
            if rcap[a] > 0 and not seen[v]:
                seen[v] = True
                queue.append(v)
    value = sum(
        c for u, v, c in zip(net.tails, net.heads, net.caps) if seen[u] and not seen[v]
    )
    return CutResult(value, frozenset(v for v in range(net.node_count) if seen[v]))


def solve_min_cut(net: FlowNetwork) -> tuple[CutResult, Residual]:
    value, res = max_flow(net)
    cut = min_cut_source_side(net, res)
    if cut.value != value:
        raise RuntimeError(f"cut value {cut.value} differs from flow value {value}")
    return cut, res
