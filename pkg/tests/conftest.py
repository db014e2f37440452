import networkx as nx
from hypothesis import assume, strategies as st

from htg.core import HtgParams, valid_jumps


@st.composite
def htg_params(draw, max_order: int = 60, normal: bool = False, m=None):
    n = 2 * draw(st.integers(2, max(2, max_order // 2)))
    if m is None:
        assume(n <= max_order)
        m = draw(st.integers(1, max_order // n))
    jumps = valid_jumps(m, n, normal=normal)
    assume(jumps)
    return HtgParams(m, n, draw(st.sampled_from(jumps)))


def nx_graph(g) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(len(g.adj)))
    G.add_edges_from((a, b) for a in range(len(g.adj)) for b in g.adj[a])
    return G


def all_params(max_order: int, normal: bool = True, m_max: int | None = None):
    for n in range(4, max_order + 1, 2):
        for m in range(1, (m_max or max_order // n) + 1):
            if m * n > max_order:
                break
            for l in valid_jumps(m, n, normal=normal):
                yield HtgParams(m, n, l)
