import json
import math

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from conftest import all_params, htg_params, nx_graph
from htg import oracle
from htg.core import (
    BadFamilyArgs,
    BadN,
    BadParity,
    BadRange,
    DihedralConnection,
    EdgeKind,
    Hexagonal,
    HtgError,
    HtgParams,
    NotAnEdge,
    NotSimple,
    Parallelogramic,
    Rectangular,
    VertexId,
    build,
    classify_edge,
    dihedral_cayley,
    export,
    htg,
    named_family,
    normalize,
    planarity_class,
    to_json,
    valid_jumps,
    validate_params,
)


# ---------------------------------------------------------------- validation


def test_validate_accepts_smallest_rectangular():
    assert validate_params(2, 4, 0) == HtgParams(2, 4, 0)


@pytest.mark.parametrize(
    "m, n, l, exc",
    [
        (1, 8, 2, BadParity),
        (1, 8, 7, NotSimple),
        (1, 8, 1, NotSimple),
        (2, 5, 0, BadN),
        (2, 2, 0, BadN),
        (0, 8, 0, BadRange),
        (2, 8, 8, BadRange),
        (2, 8, -2, BadRange),
    ],
)
def test_validate_rejects(m, n, l, exc):
    with pytest.raises(exc):
        validate_params(m, n, l)


def test_errors_are_value_errors():
    assert issubclass(BadN, HtgError) and issubclass(HtgError, ValueError)


@given(st.integers(-2, 6), st.integers(-2, 14), st.integers(-3, 15))
def test_validate_is_exactly_the_stated_rules(m, n, l):
    ok = n % 2 == 0 and n >= 4 and m >= 1 and 0 <= l < n and (l - m) % 2 == 0
    ok = ok and not (m == 1 and l in (1, n - 1))
    try:
        validate_params(m, n, l)
    except HtgError:
        assert not ok
    else:
        assert ok


# ---------------------------------------------------------------- normal form


@pytest.mark.parametrize(
    "given_, expected", [((1, 14, 9), (1, 14, 5)), ((2, 8, 4), (2, 8, 4)), ((3, 10, 7), (3, 10, 3)), ((2, 8, 0), (2, 8, 0))]
)
def test_normalize_examples(given_, expected):
    assert normalize(HtgParams(*given_)) == HtgParams(*expected)


@given(htg_params(max_order=80))
def test_normalize_is_idempotent_and_normal(p):
    q = normalize(p)
    assert q.is_normal and normalize(q) == q
    assert (q.l - q.m) % 2 == 0


@pytest.mark.parametrize("p", list(all_params(24, normal=False)), ids=str)
def test_normalize_preserves_isomorphism_class(p):
    assert oracle.is_isomorphic(build(p), build(normalize(p)))


def test_valid_jumps_lists_only_valid_triples():
    assert valid_jumps(1, 14) == [3, 5, 7]
    assert valid_jumps(2, 8) == [0, 2, 4]
    assert valid_jumps(1, 4) == []
    assert valid_jumps(2, 7) == []


# ---------------------------------------------------------------- build


def test_build_counts_for_the_torus_drawing_instance():
    g = htg(4, 10, 2)
    assert (g.order, g.size) == (40, 60)


def test_htg_1_6_3_is_k33():
    G = nx_graph(htg(1, 6, 3))
    assert nx.is_isomorphic(G, nx.complete_bipartite_graph(3, 3))
    assert G.number_of_edges() == 9


def test_htg_2_4_2_edges_by_kind():
    g = htg(2, 4, 2)
    by_kind = {k: set() for k in EdgeKind}
    for a, b, k in g.edges():
        by_kind[k].add(frozenset((g.label(a), g.label(b))))
    assert by_kind[EdgeKind.FLAT] == {frozenset({(0, 1), (1, 1)}), frozenset({(0, 3), (1, 3)})}
    assert by_kind[EdgeKind.JUMP] == {frozenset({(1, 0), (0, 2)}), frozenset({(1, 2), (0, 0)})}
    assert len(by_kind[EdgeKind.VERTICAL]) == 8


def _rule_edges(m, n, l):
    """Edge set written straight from the three edge rules."""
    edges = {}
    for i in range(m):
        for j in range(n):
            edges[frozenset({(i, j), (i, (j + 1) % n)})] = EdgeKind.VERTICAL
    for i in range(m - 1):
        for j in range(n):
            if (i + j) % 2:
                edges[frozenset({(i, j), (i + 1, j)})] = EdgeKind.FLAT
    for j in range(n):
        if (j - m) % 2 == 0:
            edges[frozenset({(m - 1, j), (0, (j + l) % n)})] = EdgeKind.JUMP
    return edges


@settings(max_examples=150)
@given(htg_params(max_order=120))
def test_build_matches_edge_rules(p):
    g = build(p)
    got = {frozenset({g.label(a), g.label(b)}): k for a, b, k in g.edges()}
    assert got == _rule_edges(p.m, p.n, p.l)


@settings(max_examples=150)
@given(htg_params(max_order=120))
def test_build_invariants(p):
    g = build(p)
    G = nx_graph(g)
    assert g.order == p.m * p.n and g.size == 3 * p.m * p.n // 2
    assert all(len(set(nb)) == 3 and v not in nb for v, nb in enumerate(g.adj))
    assert G.number_of_edges() == g.size
    assert nx.is_connected(G)
    for a, b, _ in g.edges():
        assert g.part(a) != g.part(b)
    assert sum(g.part(v) for v in range(g.order)) == g.order // 2


def test_adjacency_order_is_down_up_third():
    g = htg(3, 8, 1)
    v = g.index(1, 5)
    down, up, third = g.adj[v]
    assert (g.label(down), g.label(up), g.label(third)) == ((1, 4), (1, 6), (0, 5))


# ---------------------------------------------------------------- classify


def test_classify_examples():
    g = htg(2, 4, 2)
    assert classify_edge(g, VertexId(0, 0), VertexId(0, 1)) is EdgeKind.VERTICAL
    assert classify_edge(g, VertexId(0, 1), VertexId(1, 1)) is EdgeKind.FLAT
    assert classify_edge(g, VertexId(1, 0), VertexId(0, 2)) is EdgeKind.JUMP


def test_classify_wraparound_vertical():
    g = htg(2, 6, 0)
    assert classify_edge(g, VertexId(1, 5), VertexId(1, 0)) is EdgeKind.VERTICAL


def test_classify_non_edge():
    with pytest.raises(NotAnEdge):
        classify_edge(htg(2, 4, 2), VertexId(0, 0), VertexId(1, 1))


# ---------------------------------------------------------------- families


def test_named_families():
    assert named_family(Hexagonal(2)) == HtgParams(2, 12, 6)
    assert named_family(Rectangular(4, 10)) == HtgParams(4, 10, 0)
    assert named_family(Parallelogramic(3, 10)) == HtgParams(3, 10, 3)
    assert named_family(Parallelogramic(13, 10)) == HtgParams(13, 10, 3)


@pytest.mark.parametrize(
    "kind", [Hexagonal(0), Rectangular(3, 10), Rectangular(2, 5), Parallelogramic(2, 7), Parallelogramic(1, 8)]
)
def test_named_family_errors(kind):
    with pytest.raises(BadFamilyArgs):
        named_family(kind)


def test_planarity_lookup():
    assert planarity_class(HtgParams(2, 8, 0)) == "planar"
    assert planarity_class(HtgParams(2, 4, 2)) == "planar"
    assert planarity_class(HtgParams(4, 10, 2)) == "nonplanar"
    assert planarity_class(HtgParams(2, 8, 6)) == "nonplanar"


@pytest.mark.parametrize("p", [HtgParams(2, 8, 0), HtgParams(2, 4, 2), HtgParams(2, 8, 2), HtgParams(3, 6, 3)], ids=str)
def test_planarity_lookup_agrees_with_networkx(p):
    planar, _ = nx.check_planarity(nx_graph(build(p)))
    assert planar == (planarity_class(p) == "planar")


# ---------------------------------------------------------------- dihedral


def test_dihedral_connection_bounds():
    with pytest.raises(HtgError):
        DihedralConnection(6, 3, 3)
    with pytest.raises(HtgError):
        DihedralConnection(6, 0, 2)


def test_dihedral_examples():
    assert dihedral_cayley(DihedralConnection(7, 1, 2))[1]
    assert not dihedral_cayley(DihedralConnection(6, 2, 4))[1]
    g, connected = dihedral_cayley(DihedralConnection(5, 1, 2))
    assert connected
    p = oracle.match_htg(g, m=1)
    assert p is not None and p.n == 10 and p.l % 2 == 1


def _connections(max_n):
    for n in range(3, max_n + 1):
        for i in range(1, n):
            for j in range(i + 1, n):
                yield DihedralConnection(n, i, j)


@pytest.mark.parametrize("c", list(_connections(12)), ids=lambda c: f"{c.n}-{c.i}-{c.j}")
def test_dihedral_connectivity_flag(c):
    g, connected = dihedral_cayley(c)
    G = nx_graph(g)
    assert connected == (nx.number_connected_components(G) == 1)
    assert all(len(set(nb)) == 3 for nb in g.adj)


def test_connected_dihedral_graphs_are_htgs():
    for c in _connections(12):
        g, connected = dihedral_cayley(c)
        if connected:
            p = oracle.match_htg(g, m=math.gcd(c.n, c.i))
            assert p is not None and p.order == 2 * c.n, c


# ---------------------------------------------------------------- export


def test_edge_list_of_k33():
    text = export(htg(1, 6, 3), "edges")
    lines = text.splitlines()
    assert len(lines) == 9
    assert lines[0] == "0,0 0,1 vertical"
    assert text.endswith("\n")


def test_edge_list_is_sorted():
    g = htg(3, 8, 3)
    pairs = [tuple(g.index(*map(int, part.split(","))) for part in line.split()[:2]) for line in export(g).splitlines()]
    assert pairs == sorted(pairs)
    assert all(a < b for a, b in pairs)


def test_json_export():
    doc = json.loads(export(htg(2, 4, 2), "json"))
    assert doc["order"] == 8 and doc["size"] == 12
    assert doc["params"] == {"m": 2, "n": 4, "l": 2}
    assert doc == to_json(htg(2, 4, 2))
    assert all(len(entry["neighbors"]) == 3 for entry in doc["adjacency"])


def test_dot_export():
    text = export(htg(4, 10, 2), "dot")
    assert text.startswith('graph "HTG(4,10,2)" {')
    assert text.count(" -- ") == 60
    assert "u_0_0 -- u_0_1 [kind=vertical];" in text
    assert "[kind=jump]" in text and "[kind=flat]" in text


def test_export_is_deterministic_and_rejects_unknown_format():
    g = htg(3, 10, 3)
    assert export(g, "dot") == export(build(HtgParams(3, 10, 3)), "dot")
    with pytest.raises(ValueError):
        export(g, "graphml")
