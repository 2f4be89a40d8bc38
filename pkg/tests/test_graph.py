import pytest
from hypothesis import given, settings, strategies as st

from triroman import graph as G
from triroman.graph import Graph, GraphFormatError


def test_parse_header_and_edge():
    g = G.from_edge_list("p 2\n0 1")
    assert g.p == 2 and g.edges() == [(0, 1)]


def test_parse_triangle_without_header():
    g = G.from_edge_list("0 1\n1 2\n2 0")
    assert g.p == 3 and g.q == 3


def test_duplicate_edges_collapse():
    assert G.from_edge_list("0 1\n0 1").q == 1


def test_comments_and_isolated_vertices():
    g = G.from_edge_list("# a comment\np 4\n0 1  # trailing\n")
    assert g.p == 4 and G.components(g) == [[0, 1], [2], [3]]


@pytest.mark.parametrize("text", ["0 0", "0 x", "0 1 2", "p 2\n0 5", "p -1"])
def test_malformed_input_rejected(text):
    with pytest.raises(GraphFormatError):
        G.from_edge_list(text)


def test_struct_path():
    r = G.struct_report(G.path(4))
    assert r.diameter == 3 and r.girth is None and r.is_tree


def test_struct_cycle():
    r = G.struct_report(G.cycle(5))
    assert r.diameter == 2 and r.girth == 5 and r.is_regular == 2


def test_struct_complete_bipartite():
    r = G.struct_report(G.complete_bipartite(3, 4))
    assert (r.diameter, r.girth, r.delta, r.Delta) == (2, 4, 3, 4)


def test_disconnected_has_no_diameter():
    r = G.struct_report(G.gnp(4, 0.0, seed=1))
    assert r.diameter is None and not r.is_connected


def test_double_star_11_is_p4():
    ds = G.double_star(1, 1)
    assert sorted(ds.degree(v) for v in range(4)) == [1, 1, 2, 2] and G.is_tree(ds)


def test_cycle3_is_triangle():
    assert G.cycle(3).edges() == [(0, 1), (0, 2), (1, 2)]


def test_random_tree_deterministic():
    assert G.random_tree(8, seed=7).edges() == G.random_tree(8, seed=7).edges()


def test_components():
    assert G.components(G.path(3)) == [[0, 1, 2]]
    assert len(G.components(Graph.from_edges(4, [(0, 1), (2, 3)]))) == 2
    assert len(G.components(G.gnp(6, 0.0, seed=3))) == 6


def test_spider_shape():
    s = G.spider([1, 2, 3])
    assert s.p == 7 and s.degree(0) == 3 and G.is_tree(s)


@given(st.integers(2, 30), st.integers(0, 10_000))
def test_random_tree_is_tree(p, seed):
    assert G.is_tree(G.random_tree(p, seed))


@given(st.integers(1, 12), st.floats(0, 1), st.integers(0, 1000))
@settings(max_examples=60)
def test_edge_list_round_trip(p, prob, seed):
    g = G.gnp(p, prob, seed)
    assert G.from_edge_list(G.to_edge_list(g)) == g


@given(st.integers(3, 12), st.floats(0.05, 0.9), st.integers(0, 1000))
@settings(max_examples=60)
def test_girth_and_diameter_match_networkx(p, prob, seed):
    nx = pytest.importorskip("networkx")
    g = G.gnp(p, prob, seed)
    h = nx.Graph()
    h.add_nodes_from(range(p))
    h.add_edges_from(g.edges())
    if nx.is_connected(h):
        assert G.diameter(g) == nx.diameter(h)
    want = nx.girth(h)
    assert G.girth(g) == (None if want == float("inf") else want)
