import pytest
from hypothesis import given, settings, strategies as st

from triroman import reduction as R
from triroman.exact import gamma_3R_bnb
from triroman.labeling import is_valid

Q1T1 = R.X3CInstance(1, ((0, 1, 2),))


def test_gadget_sizes():
    g, gm = R.build_gadget(Q1T1)
    assert (g.p, g.q, gm.threshold) == (11, 10, 15)
    inst = R.X3CInstance(1, ((0, 1, 2), (0, 1, 2)))
    g, gm = R.build_gadget(inst)
    assert g.p == 16 and gm.threshold == 19
    gc, _ = R.build_gadget(inst, "chordal")
    assert gc.q == g.q + 1 and gc.has_edge(gm.c(0), gm.c(1))


def test_gadget_roles():
    g, gm = R.build_gadget(Q1T1)
    roles = gm.roles()
    assert roles[gm.x(0)] == "x0" and roles[gm.y(2)] == "y2" and roles[gm.w(0)] == "w0"
    assert all(g.degree(leaf) == 1 for leaf in gm.leaves(0))
    assert g.degree(gm.w(0)) == 4


def test_cover_to_labeling():
    g, gm = R.build_gadget(Q1T1)
    lab = R.cover_to_labeling(Q1T1, [0], gm)
    assert lab.weight == 15 and is_valid(g, lab)
    inst = R.X3CInstance(2, ((0, 1, 2), (3, 4, 5)))
    g, gm = R.build_gadget(inst)
    lab = R.cover_to_labeling(inst, [0, 1], gm)
    assert lab.weight == 30 and is_valid(g, lab)
    with pytest.raises(ValueError):
        R.cover_to_labeling(inst, [0], gm)


def test_round_trips():
    inst = R.X3CInstance(2, ((0, 1, 2), (2, 3, 4), (3, 4, 5), (0, 1, 5)))
    for variant in R.Variant:
        g, gm = R.build_gadget(inst, variant)
        for cover in ([0, 2], [1, 3]):
            assert R.labeling_to_cover(inst, gm, R.cover_to_labeling(inst, cover, gm)) == cover


def test_optimal_labeling_extracts_cover():
    g, gm = R.build_gadget(Q1T1)
    res = gamma_3R_bnb(g)
    assert res.weight == 15 and R.labeling_to_cover(Q1T1, gm, res.witness) == [0]


def test_extraction_rejects_heavy_labeling():
    g, gm = R.build_gadget(Q1T1)
    with pytest.raises(ValueError):
        R.labeling_to_cover(Q1T1, gm, R.Labeling(tuple([3] * g.p)))


@pytest.mark.parametrize("bad", [(1, ((0, 0, 1),)), (1, ((0, 1, 3),)), (0, ()), (1, ((0, 1),))])
def test_invalid_instances(bad):
    with pytest.raises(R.X3CFormatError):
        R.X3CInstance(*bad)


def test_text_format():
    inst = R.X3CInstance.from_text("# demo\n2 3\n0 1 2\n2 3 4\n3 4 5\n")
    assert inst.q == 2 and inst.t == 3
    assert R.X3CInstance.from_text(inst.to_text()) == inst
    for bad in ("2 3\n0 1 2\n", "x\n", "1 1\n0 1\n"):
        with pytest.raises(R.X3CFormatError):
            R.X3CInstance.from_text(bad)


def test_bruteforce():
    assert R.x3c_bruteforce(Q1T1) == [0]
    assert R.x3c_bruteforce(R.X3CInstance(2, ((0, 1, 2), (2, 3, 4), (3, 4, 5)))) == [0, 2]
    assert R.x3c_bruteforce(R.X3CInstance(2, ((0, 1, 2), (2, 3, 4)))) is None


def test_gadget_structure():
    import networkx as nx

    inst = R.X3CInstance(2, ((0, 1, 2), (2, 3, 4), (3, 4, 5)))
    g, _ = R.build_gadget(inst, "bipartite")
    gc, _ = R.build_gadget(inst, "chordal")
    h, hc = nx.Graph(g.edges()), nx.Graph(gc.edges())
    assert nx.is_bipartite(h) and nx.is_chordal(hc)


triples = st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)).filter(lambda t: len(set(t)) == 3)


@given(st.lists(triples, min_size=1, max_size=5))
@settings(max_examples=40, deadline=None)
def test_decision_matches_bruteforce(ts):
    inst = R.X3CInstance(2, tuple(ts))
    cover = R.x3c_bruteforce(inst)
    for variant in R.Variant:
        g, gm = R.build_gadget(inst, variant)
        res = gamma_3R_bnb(g)
        assert (res.weight <= gm.threshold) == (cover is not None)
        if cover is not None:
            assert res.weight == gm.threshold
            assert R.is_exact_cover(inst, R.labeling_to_cover(inst, gm, res.witness))
        else:
            assert res.weight > gm.threshold
