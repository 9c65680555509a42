import random

import networkx as nx
import pytest

from minecc.maxflow import FlowNetwork, max_flow, min_cut_source_side, solve_min_cut

from oracles import edmonds_karp


def network(n, arcs, s=0, t=1):
    net = FlowNetwork(n, s, t)
    for u, v, c in arcs:
        net.add_arc(u, v, c)
    return net


# node ids: s=0, t=1, a=2, b=3
PARALLEL = network(2, [(0, 1, 2), (0, 1, 3)])
PATH = network(3, [(0, 2, 4), (2, 1, 1)])
DIAMOND = network(4, [(0, 2, 3), (0, 3, 2), (2, 1, 2), (3, 1, 3), (2, 3, 1)])


def test_parallel_arcs():
    value, res = max_flow(PARALLEL)
    assert value == 5
    cut = min_cut_source_side(PARALLEL, res)
    assert (cut.value, cut.source_side) == (5, {0})


def test_path_bottleneck():
    value, res = max_flow(PATH)
    assert value == 1
    assert min_cut_source_side(PATH, res).source_side == {0, 2}


def test_diamond():
    assert edmonds_karp(4, DIAMOND.arcs, 0, 1) == 5
    value, res = max_flow(DIAMOND)
    assert value == 5
    cut = min_cut_source_side(DIAMOND, res)
    assert cut.value == 5
    S = cut.source_side
    for i, (u, v, c) in enumerate(DIAMOND.arcs):
        if u in S and v not in S:
            assert res.flow(i) == c


def test_zero_capacity_arc():
    net = network(3, [(0, 2, 0)])
    cut, _ = solve_min_cut(net)
    assert cut.value == 0 and cut.source_side == {0}
    net = network(3, [(2, 1, 5)])
    cut, _ = solve_min_cut(net)
    assert cut.value == 0 and 1 not in cut.source_side


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        FlowNetwork(2).add_arc(0, 1, -1)
    with pytest.raises(ValueError):
        max_flow(FlowNetwork(2, 0, 0))


def random_network(seed, max_nodes=30):
    rng = random.Random(seed)
    n = rng.randint(2, max_nodes)
    density = rng.uniform(0.05, 0.5)
    arcs = []
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < density:
                arcs.append((u, v, rng.randint(0, 20)))
    s, t = rng.sample(range(n), 2)
    return n, arcs, s, t


def check_flow(net, value, res):
    n = net.node_count
    balance = [0] * n
    for i, (u, v, c) in enumerate(net.arcs):
        f = res.flow(i)
        assert 0 <= f <= c
        assert res.rcap[2 * i] == c - f
        balance[u] -= f
        balance[v] += f
    for v in range(n):
        if v not in (net.source, net.sink):
            assert balance[v] == 0
    assert balance[net.sink] == value
    cut = min_cut_source_side(net, res)
    assert cut.value == value
    S = cut.source_side
    assert net.source in S and net.sink not in S
    for i, (u, v, c) in enumerate(net.arcs):
        if u in S and v not in S:
            assert res.flow(i) == c
        if v in S and u not in S:
            assert res.flow(i) == 0


@pytest.mark.parametrize("seed", range(150))
def test_against_edmonds_karp(seed):
    n, arcs, s, t = random_network(seed)
    net = network(n, arcs, s, t)
    value, res = max_flow(net)
    assert value == edmonds_karp(n, arcs, s, t)
    check_flow(net, value, res)


@pytest.mark.parametrize("seed", range(20))
def test_against_networkx(seed):
    n, arcs, s, t = random_network(1000 + seed, max_nodes=60)
    G = nx.DiGraph()
    G.add_nodes_from(range(n))
    for u, v, c in arcs:
        if G.has_edge(u, v):
            G[u][v]["capacity"] += c
        else:
            G.add_edge(u, v, capacity=c)
    value, _ = max_flow(network(n, arcs, s, t))
    assert value == nx.maximum_flow_value(G, s, t)


def test_deterministic_cut():
    n, arcs, s, t = random_network(5)
    a = solve_min_cut(network(n, arcs, s, t))[0]
    b = solve_min_cut(network(n, arcs, s, t))[0]
    assert a == b


def test_layered_network_exercises_gap_and_global_relabel():
    # long chains force many relabels
    rng = random.Random(3)
    n = 200
    arcs = [(0, 2, 1000)]
    for v in range(2, n - 1):
        arcs.append((v, v + 1, rng.randint(1, 50)))
        if rng.random() < 0.3:
            arcs.append((v, rng.randrange(2, n), rng.randint(1, 50)))
    arcs.append((n - 1, 1, 1000))
    net = network(n, arcs)
    value, res = max_flow(net)
    assert value == edmonds_karp(n, arcs, 0, 1)
    check_flow(net, value, res)
    assert res.counters["relabels"] > 0
