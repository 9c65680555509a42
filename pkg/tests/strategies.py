from hypothesis import strategies as st

from minecc.hypergraph import ColoredHypergraph


@st.composite
def hypergraphs(draw, max_nodes=7, max_edges=9, max_colors=4, max_weight=5, min_weight=1):
    n = draw(st.integers(1, max_nodes))
    k = draw(st.integers(1, max_colors))
    edge = st.tuples(
        st.integers(1, k),
        st.integers(min_weight, max_weight),
        st.sets(st.integers(1, n), min_size=1, max_size=min(n, 4)),
    )
    edges = draw(st.lists(edge, max_size=max_edges))
    return ColoredHypergraph.from_edges(n, k, edges)
