from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from egosim import (
    DegreeSignature,
    UndefinedSignatureError,
    all_signatures,
    load_edge_list,
    render_signature,
    signature,
)

from oracles import brute_signature, edge_text, random_edge_list, read_table


def test_fig2_node4(fig2_fragment):
    g = fig2_fragment
    s = signature(g, g.index_of("4"))
    assert s.degrees == (6, 4, 4, 3, 2, 2, 2)
    assert s.total == 23
    assert s.width == 7
    assert s.fractions() == [F(6, 23), F(4, 23), F(4, 23), F(3, 23), F(2, 23), F(2, 23), F(2, 23)]


def test_triangle(triangle):
    for s in all_signatures(triangle):
        assert s.fractions() == [F(1, 3)] * 3


def test_star(star3):
    g = star3
    assert signature(g, g.index_of("c")).fractions() == [F(1, 2), F(1, 6), F(1, 6), F(1, 6)]
    for leaf in "abd":
        assert signature(g, g.index_of(leaf)).fractions() == [F(3, 4), F(1, 4), 0, 0]


def test_four_cycle():
    sigs = all_signatures(load_edge_list("a b\nb c\nc d\nd a\n"))
    assert len(sigs) == 4
    assert all(s.degrees == (2, 2, 2) and s.width == 3 for s in sigs)


def test_global_not_induced_degrees(fig2_fragment):
    # total 23 is odd, which an induced-subgraph degree sum can never be
    g = fig2_fragment
    assert signature(g, g.index_of("4")).total % 2 == 1


def test_isolated_node_errors():
    g = load_edge_list("a b\nc c\n")
    with pytest.raises(UndefinedSignatureError, match="'c'"):
        signature(g, g.index_of("c"))
    with pytest.raises(UndefinedSignatureError):
        all_signatures(g)


def test_all_signatures_share_width(karate):
    sigs = all_signatures(karate)
    assert [s.node for s in sigs] == list(range(34))
    assert {s.width for s in sigs} == {18}


def test_karate_node1(karate):
    s = signature(karate, karate.index_of("1"))
    assert s.support == 17 and s.width == 18
    row = render_signature(s).split()
    assert len(row) == 18
    assert sum(map(float, row)) == pytest.approx(1.0, abs=0.05)


def test_a21_rows_render_as_table(a21):
    table = read_table()
    for label, sig in zip(a21.labels, a21.signatures):
        assert render_signature(sig).split() == table[label], label


def test_render_precision():
    s = DegreeSignature.from_degrees(0, [1, 3], width=3)
    assert render_signature(s) == "0.75 0.25 0.00"
    assert render_signature(s, 0) == "1 0 0"
    assert render_signature(s, 3, sep=",") == "0.750,0.250,0.000"


@pytest.mark.parametrize("degrees, width", [((), 1), ((0, 1), 2), ((1, 2), 2), ((3, 1), 1)])
def test_invalid_signature(degrees, width):
    with pytest.raises(ValueError):
        DegreeSignature(0, degrees, width)


def test_same_distribution():
    a = DegreeSignature(0, (3, 1), 2)
    assert a.same_distribution(DegreeSignature(1, (6, 2), 7))
    assert not a.same_distribution(DegreeSignature(1, (2, 1), 2))
    assert not a.same_distribution(DegreeSignature(1, (3, 1, 1), 3))


def test_regular_graph_signatures():
    # 3-regular: K4
    g = load_edge_list("a b\na c\na d\nb c\nb d\nc d\n")
    for s in all_signatures(g):
        assert s.fractions() == [F(1, 4)] * 4


@settings(max_examples=300)
@given(st.randoms(use_true_random=False))
def test_matches_brute_force(rnd):
    edges = random_edge_list(rnd)
    g = load_edge_list(edge_text(edges))
    width = g.max_degree() + 1
    for i, s in enumerate(all_signatures(g)):
        assert s.degrees == brute_signature(edges, g.labels[i])
        assert s.total == sum(s.degrees)
        assert s.width == width
        probs = s.probabilities()
        assert len(probs) == width
        assert sum(s.fractions()) == 1
        assert abs(sum(probs) - 1.0) <= width * 2.0**-52


@settings(max_examples=100)
@given(st.randoms(use_true_random=False))
def test_relabel_invariance(rnd):
    edges = random_edge_list(rnd)
    g = load_edge_list(edge_text(edges))
    rename = {lab: f"r{k}" for k, lab in enumerate(reversed(g.labels))}
    h = load_edge_list(edge_text([(rename[a], rename[b]) for a, b in edges]))
    for lab in g.labels:
        a = signature(g, g.index_of(lab))
        b = signature(h, h.index_of(rename[lab]))
        assert a.degrees == b.degrees
