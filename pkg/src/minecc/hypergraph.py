"""Edge-colored hypergraphs: data model, file format, statistics and bad pairs.

Nodes carry 1-based ids in the file format and on ``HyperEdge.nodes``.
Per-node tables (``incidence``, ``node_colors``, colorings) are indexed by
``u - 1``. Edges keep their original 1-based input id; internally algorithms
address them by *position* in the canonical (color, id) order.
"""

from __future__ import annotations

import io
import random
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence, TextIO

INT64_MAX = 2**63 - 1
DEFAULT_PAIR_CAP = 50_000_000


class FormatError(ValueError):
    """Malformed or invalid instance file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GuardError(RuntimeError):
    """A configured resource guard was exceeded."""


class BadPairExplosion(GuardError):
    pass


@dataclass(frozen=True)
class HyperEdge:
    id: int
    color: int
    weight: int
    nodes: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.nodes)


@dataclass(frozen=True, order=True)
class BadPair:
    e: int
    f: int


@dataclass(frozen=True)
class HypergraphStats:
    n: int
    m: int
    k: int
    r: int
    mu: int
    sum_colors: int
    lp_ecc_constraints: int
    lp_cp_constraints: int
    bad_pairs: int | None = None
    lp_vc_constraints: int | None = None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "r": self.r,
            "mu": self.mu,
            "sum_colors": self.sum_colors,
            "bad_pairs": self.bad_pairs,
            "lp_ecc_constraints": self.lp_ecc_constraints,
            "lp_vc_constraints": self.lp_vc_constraints,
            "lp_cp_constraints": self.lp_cp_constraints,
        }


@dataclass(frozen=True, eq=False)
class ColoredHypergraph:
    """Immutable edge-colored hypergraph.

    Build with :meth:`from_edges` (or :func:`parse_hypergraph`), which sorts
    edges into canonical order and derives the incidence tables.
    """

    node_count: int
    color_count: int
    edges: tuple[HyperEdge, ...]
    incidence: tuple[tuple[int, ...], ...]
    node_colors: tuple[tuple[int, ...], ...]
    unweighted: bool = False
    position: dict[int, int] = field(default_factory=dict, repr=False)

    @classmethod
    def from_edges(
        cls,
        node_count: int,
        color_count: int,
        edges: Iterable[tuple[int, int, Sequence[int]]],
        unweighted: bool = False,
    ) -> "ColoredHypergraph":
        """Build from ``(color, weight, nodes)`` triples; ids follow input order."""
        if node_count < 0 or color_count < 0:
            raise ValueError("node and color counts must be nonnegative")
        built = []
        total = 0
        for i, (color, weight, nodes) in enumerate(edges, start=1):
            nodes = tuple(sorted(nodes))
            _check_edge(node_count, color_count, color, weight, nodes)
            total += weight
            built.append(HyperEdge(i, color, weight, nodes))
        if 2 * total > INT64_MAX:
            raise ValueError("total weight overflows 64-bit range")
        built.sort(key=lambda e: (e.color, e.id))

        incidence: list[list[int]] = [[] for _ in range(node_count)]
        for p, e in enumerate(built):
            for u in e.nodes:
                incidence[u - 1].append(p)
        node_colors = []
        for inc in incidence:
            seen: list[int] = []
            for p in inc:
                c = built[p].color
                if not seen or seen[-1] != c:
                    seen.append(c)
            node_colors.append(tuple(seen))
        return cls(
            node_count=node_count,
            color_count=color_count,
            edges=tuple(built),
            incidence=tuple(tuple(x) for x in incidence),
            node_colors=tuple(node_colors),
            unweighted=unweighted,
            position={e.id: p for p, e in enumerate(built)},
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def mu(self) -> int:
        return sum(len(e.nodes) for e in self.edges)

    @property
    def r(self) -> int:
        return max((len(e.nodes) for e in self.edges), default=0)

    @property
    def colors_present(self) -> tuple[int, ...]:
        return tuple(sorted({e.color for e in self.edges}))

    @property
    def total_weight(self) -> int:
        return sum(e.weight for e in self.edges)

    def edge(self, edge_id: int) -> HyperEdge:
        return self.edges[self.position[edge_id]]

    def weight_of(self, edge_ids: Iterable[int]) -> int:
        return sum(self.edges[self.position[i]].weight for i in edge_ids)


def _check_edge(n, k, color, weight, nodes, line=None):
    if not 1 <= color <= k:
        raise FormatError(f"color {color} out of range 1..{k}", line)
    if weight < 0:
        raise FormatError(f"negative weight {weight}", line)
    if not nodes:
        raise FormatError("edge has no nodes", line)
    for u in nodes:
        if not 1 <= u <= n:
            raise FormatError(f"node out of range: {u} not in 1..{n}", line)
    for a, b in zip(nodes, nodes[1:]):
        if a == b:
            raise FormatError(f"repeated node {a} in edge", line)


# ---------------------------------------------------------------------------
# file format


def parse_hypergraph(stream: TextIO | str) -> ColoredHypergraph:
    """Parse the ``minecc`` text format from a stream or string."""
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    header = None
    edges = []
    unweighted = False
    n = m = k = 0
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            header = tokens
            if tokens[0] != "minecc" or len(tokens) not in (4, 5):
                raise FormatError("expected header 'minecc <n> <m> <k> [unweighted]'", lineno)
            if len(tokens) == 5:
                if tokens[4] != "unweighted":
                    raise FormatError(f"unknown header flag {tokens[4]!r}", lineno)
                unweighted = True
            try:
                n, m, k = (int(t) for t in tokens[1:4])
            except ValueError:
                raise FormatError("header counts must be integers", lineno) from None
            if min(n, m, k) < 0:
                raise FormatError("header counts must be nonnegative", lineno)
            continue
        try:
            values = [int(t) for t in tokens]
        except ValueError:
            raise FormatError("edge line must contain integers only", lineno) from None
        if unweighted:
            color, weight, nodes = values[0], 1, values[1:]
        else:
            if len(values) < 2:
                raise FormatError("edge line needs a color and a weight", lineno)
            color, weight, nodes = values[0], values[1], values[2:]
        nodes = sorted(nodes)
        _check_edge(n, k, color, weight, nodes, lineno)
        edges.append((color, weight, nodes))
        if len(edges) > m:
            raise FormatError(f"more than the declared {m} edges", lineno)
    if header is None:
        raise FormatError("missing header")
    if len(edges) != m:
        raise FormatError(f"declared {m} edges but found {len(edges)}")
    try:
        return ColoredHypergraph.from_edges(n, k, edges, unweighted=unweighted)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def load_hypergraph(path) -> ColoredHypergraph:
    with open(path, encoding="utf-8") as fh:
        return parse_hypergraph(fh)


def serialize_hypergraph(H: ColoredHypergraph) -> str:
    """Canonical text: edges in (color, id) order, nodes ascending."""
    head = f"minecc {H.node_count} {H.m} {H.color_count}"
    lines = [head + (" unweighted" if H.unweighted else "")]
    for e in H.edges:
        fields = [e.color] if H.unweighted else [e.color, e.weight]
        lines.append(" ".join(map(str, fields + list(e.nodes))))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# bad pairs and statistics


def bad_pair_positions(H: ColoredHypergraph, cap: int | None = DEFAULT_PAIR_CAP) -> list[tuple[int, int]]:
    """Deduplicated bad pairs as sorted ``(p, q)`` edge positions, ``p < q``.

    Raises :class:`BadPairExplosion` as soon as more than ``cap`` distinct
    pairs have been found.
    """
    found: set[tuple[int, int]] = set()
    colors = [e.color for e in H.edges]
    for inc in H.incidence:
        if len(inc) < 2 or colors[inc[0]] == colors[inc[-1]]:
            continue
        groups: list[list[int]] = []
        for p in inc:
            if groups and colors[groups[-1][0]] == colors[p]:
                groups[-1].append(p)
            else:
                groups.append([p])
        # positions are color-sorted, so every later group has larger positions
        for gi, g in enumerate(groups):
            for h in groups[gi + 1 :]:
                for p in g:
                    for q in h:
                        found.add((p, q))
                if cap is not None and len(found) > cap:
                    raise BadPairExplosion(
                        f"bad-pair explosion: more than {cap} bad edge pairs"
                    )
    return sorted(found)


def enumerate_bad_pairs(H: ColoredHypergraph, cap: int | None = DEFAULT_PAIR_CAP) -> list[BadPair]:
    ids = [e.id for e in H.edges]
    pairs = []
    for p, q in bad_pair_positions(H, cap):
        a, b = ids[p], ids[q]
        pairs.append(BadPair(a, b) if a < b else BadPair(b, a))
    pairs.sort()
    return pairs


def compute_stats(H: ColoredHypergraph, count_pairs: bool = False,
                  cap: int | None = DEFAULT_PAIR_CAP) -> HypergraphStats:
    mu = H.mu
    n = H.node_count
    pair_terms = sum(comb(len(c), 2) for c in H.node_colors)
    bad = len(bad_pair_positions(H, cap)) if count_pairs else None
    return HypergraphStats(
        n=n,
        m=H.m,
        k=H.color_count,
        r=H.r,
        mu=mu,
        sum_colors=sum(len(c) for c in H.node_colors),
        lp_ecc_constraints=mu + n,
        lp_cp_constraints=mu + pair_terms,
        bad_pairs=bad,
        lp_vc_constraints=bad,
    )


# ---------------------------------------------------------------------------
# solutions


def is_conflict_free(H: ColoredHypergraph, deleted: Iterable[int]) -> bool:
    """True iff every node's surviving edges share a single color."""
    gone = {H.position[i] for i in deleted}
    for inc in H.incidence:
        color = None
        for p in inc:
            if p in gone:
                continue
            c = H.edges[p].color
            if color is None:
                color = c
            elif c != color:
                return False
    return True


def coloring_from_deletions(H: ColoredHypergraph, deleted: Iterable[int]) -> tuple[int, ...]:
    """Color each node by its surviving edges.

    Nodes with no surviving incident edge fall back to the smallest color in
    C(u), or color 1 when they have no incident edges at all.
    """
    gone = {H.position[i] for i in deleted}
    coloring = []
    for u, inc in enumerate(H.incidence, start=1):
        color = None
        for p in inc:
            if p in gone:
                continue
            c = H.edges[p].color
            if color is None:
                color = c
            elif c != color:
                raise ValueError(f"deletion set is not conflict-free at node {u}")
        if color is None:
            cs = H.node_colors[u - 1]
            color = cs[0] if cs else 1
        coloring.append(color)
    return tuple(coloring)


def unsatisfied_edges(H: ColoredHypergraph, coloring: Sequence[int]) -> list[int]:
    return [
        e.id for e in H.edges
        if any(coloring[u - 1] != e.color for u in e.nodes)
    ]


def unsatisfied_weight(H: ColoredHypergraph, coloring: Sequence[int]) -> int:
    if len(coloring) != H.node_count:
        raise ValueError("coloring must assign every node")
    return sum(
        e.weight for e in H.edges
        if any(coloring[u - 1] != e.color for u in e.nodes)
    )


# ---------------------------------------------------------------------------
# generator


def generate_random(n: int, m: int, k: int, max_size: int, max_weight: int = 1,
                    seed: int = 0) -> ColoredHypergraph:
    if min(n, k, max_size, max_weight) < 1 or m < 0:
        raise ValueError("n, k, max_size, max_weight must be >= 1 and m >= 0")
    if max_size > n:
        raise ValueError(f"max_size {max_size} exceeds node count {n}")
    rng = random.Random(seed)
    nodes = range(1, n + 1)
    edges = []
    for _ in range(m):
        size = rng.randint(1, max_size)
        members = rng.sample(nodes, size)
        color = rng.randint(1, k)
        weight = rng.randint(1, max_weight)
        edges.append((color, weight, members))
    return ColoredHypergraph.from_edges(n, k, edges)
