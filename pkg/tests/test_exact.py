import pytest
from hypothesis import given, settings, strategies as st

from conftest import FROZEN, frozen_graph
from triroman import graph as G
from triroman.exact import (
    BNB_LIMIT,
    BRUTEFORCE_LIMIT,
    Method,
    SizeGuardError,
    degree_lower_bound,
    domination_number,
    double_roman_number,
    gamma_3R_bnb,
    gamma_kR_bruteforce,
    inequality_chain_report,
    pendant_fixings,
    roman_number,
)
from triroman.graph import Graph
from triroman.labeling import is_valid


def test_bruteforce_examples():
    assert gamma_kR_bruteforce(G.path(4), 3).weight == 7
    assert gamma_kR_bruteforce(G.star(5), 3).weight == 4
    res = gamma_kR_bruteforce(Graph.from_edges(1, []), 3)
    assert res.weight == 3 and res.witness.values == (3,)


def test_bnb_examples():
    assert gamma_3R_bnb(G.cycle(10)).weight == 14
    assert gamma_3R_bnb(G.complete(4)).weight == 4
    assert gamma_3R_bnb(G.double_star(2, 2)).weight == 8


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_solvers_match_frozen_oracle(name):
    g = frozen_graph(name)
    want = FROZEN[name]["gamma_3R"]
    assert gamma_3R_bnb(g).weight == want
    if g.p <= 10:
        assert gamma_kR_bruteforce(g, 3).weight == want
    if "gamma_3R_no_ones" in FROZEN[name]:
        assert gamma_kR_bruteforce(g, 3, restrict_no_ones=True).weight == FROZEN[name]["gamma_3R_no_ones"]
        assert gamma_kR_bruteforce(g, 2).weight == FROZEN[name]["gamma_2R"]


@pytest.mark.parametrize("name", [n for n in sorted(FROZEN) if "gamma" in FROZEN[n]])
def test_classical_parameters_match_frozen_oracle(name):
    g, want = frozen_graph(name), FROZEN[name]
    assert domination_number(g) == want["gamma"]
    assert roman_number(g) == want["gamma_R"]
    assert double_roman_number(g) == want["gamma_dR"]


def test_classical_examples():
    assert domination_number(G.star(5)) == 1 and roman_number(G.star(5)) == 2
    assert domination_number(G.path(6)) == 2
    assert double_roman_number(G.cycle(5)) < gamma_3R_bnb(G.cycle(5)).weight == 7


def test_chain_reports():
    r = inequality_chain_report(G.cycle(5))
    assert r.chain_holds and r.gamma_3R == 7
    r = inequality_chain_report(G.path(2))
    assert (r.gamma, r.gamma_R, r.gamma_dR, r.gamma_3R) == (1, 2, 3, 4) and r.chain_holds
    r = inequality_chain_report(G.star(5))
    assert r.gamma == 1 and r.gamma_3R == 4 == 4 * r.gamma


def test_disconnected_sums_components():
    g = Graph.from_edges(7, [(0, 1), (2, 3), (3, 4), (4, 5), (5, 2)])
    for res in (gamma_3R_bnb(g), gamma_kR_bruteforce(g)):
        assert res.weight == 4 + 6 + 3
        assert sorted(c.weight for c in res.per_component) == [3, 4, 6]


def test_size_guards():
    with pytest.raises(SizeGuardError) as err:
        gamma_kR_bruteforce(G.path(BRUTEFORCE_LIMIT + 1))
    assert err.value.limit == BRUTEFORCE_LIMIT
    with pytest.raises(SizeGuardError):
        gamma_3R_bnb(G.cycle(BNB_LIMIT + 1))
    # the guard applies per component
    two = Graph.from_edges(2 * 10, [(i, i + 1) for i in range(9)] + [(i, i + 1) for i in range(10, 19)])
    assert gamma_kR_bruteforce(two).weight == 2 * 15


def test_restrict_no_ones_only_where_exact():
    with pytest.raises(ValueError):
        gamma_kR_bruteforce(G.path(3), 4, restrict_no_ones=True)


def test_methods_reported():
    assert gamma_3R_bnb(G.path(3)).method is Method.BNB
    assert gamma_kR_bruteforce(G.path(3)).method is Method.BRUTEFORCE


def test_degree_lower_bound_formula():
    assert degree_lower_bound(5, 4, 1) == 4
    assert degree_lower_bound(5, 2, 2) == 6


def test_pendant_fixings():
    assert pendant_fixings(G.double_star(2, 1)) == {0: 4, 2: 0, 3: 0}
    assert pendant_fixings(G.path(4)) == {}


def test_bnb_threads_same_witness():
    g = G.random_connected(16, 0.2, seed=5)
    base = gamma_3R_bnb(g)
    for t in (2, 4):
        other = gamma_3R_bnb(g, threads=t)
        assert other.weight == base.weight and other.witness == base.witness


@given(st.integers(1, 9), st.floats(0, 1), st.integers(0, 10_000))
@settings(max_examples=80, deadline=None)
def test_bnb_matches_bruteforce(p, prob, seed):
    g = G.gnp(p, prob, seed)
    a, b = gamma_kR_bruteforce(g), gamma_3R_bnb(g)
    assert a.weight == b.weight
    assert is_valid(g, b.witness) and b.witness.weight == b.weight


@given(st.integers(1, 7), st.floats(0, 1), st.integers(0, 10_000), st.integers(1, 4))
@settings(max_examples=60, deadline=None)
def test_krdf_monotone_in_k(p, prob, seed, k):
    g = G.gnp(p, prob, seed)
    assert gamma_kR_bruteforce(g, k).weight < gamma_kR_bruteforce(g, k + 1).weight


@given(st.integers(6, 18), st.floats(0.1, 0.6), st.integers(0, 10_000), st.sampled_from([2, 3, 4]))
@settings(max_examples=40, deadline=None)
def test_threaded_witness_equals_sequential(p, prob, seed, threads):
    g = G.random_connected(p, prob, seed)
    assert gamma_3R_bnb(g, threads=threads).witness == gamma_3R_bnb(g).witness
