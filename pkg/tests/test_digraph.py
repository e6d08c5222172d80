"""Core digraph type: construction, queries, derived digraphs, text format."""

import random

import pytest

from arclocal import (
    Digraph,
    EdgeListError,
    enumerate_digraphs,
    format_edge_list,
    parse_edge_list,
    set_relation,
)
from arclocal.generators import directed_cycle, directed_path

from oracles import brute_distance, brute_two_colorable


def test_build_rejects_loops_and_bad_range():
    with pytest.raises(ValueError, match="loop"):
        Digraph(3, [(1, 1)])
    with pytest.raises(ValueError, match="range"):
        Digraph(3, [(0, 3)])
    with pytest.raises(ValueError, match="range"):
        Digraph(2, [(-1, 0)])
    with pytest.raises(ValueError):
        Digraph(-1)


def test_duplicate_arcs_collapse():
    d = Digraph(2, [(0, 1), (0, 1), (0, 1)])
    assert d.arc_count == 1
    assert list(d.arcs()) == [(0, 1)]


def test_dominates_and_adjacent():
    d = Digraph(3, [(0, 1)])
    assert d.dominates(0, 1) and not d.dominates(1, 0)
    assert d.adjacent(0, 1) and d.adjacent(1, 0)
    assert not d.adjacent(0, 2)
    with pytest.raises(ValueError):
        d.dominates(1, 1)
    with pytest.raises(ValueError):
        d.adjacent(2, 2)
    with pytest.raises(ValueError):
        d.dominates(0, 5)


def test_digon_is_two_arcs():
    d = Digraph(2, [(0, 1), (1, 0)])
    assert d.dominates(0, 1) and d.dominates(1, 0)
    assert d.arc_count == 2


def test_inverse_is_involution_exhaustive_small():
    for n in range(5):
        for d in enumerate_digraphs(n):
            assert d.inverse().inverse() == d
            assert d.inverse().underlying_graph() == d.underlying_graph()


def test_induced_identity_and_relabeling():
    d = Digraph(4, [(0, 1), (1, 2), (3, 2)])
    whole, labels = d.induced(range(4))
    assert whole == d and labels == (0, 1, 2, 3)
    sub, labels = d.induced([1, 2, 3])
    assert labels == (1, 2, 3)
    assert sorted(sub.arcs()) == [(0, 1), (2, 1)]  # 1->2 and 3->2 relabelled
    empty, labels = d.induced([])
    assert empty.n == 0 and labels == ()


def test_set_relation_flags():
    d = Digraph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    rel = set_relation(d, [0, 1], [2, 3])
    assert rel.dominates_all and rel.no_back_arc and rel.strictly_dominates
    d2 = Digraph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 0)])
    rel2 = set_relation(d2, [0, 1], [2, 3])
    assert rel2.dominates_all and not rel2.no_back_arc
    d3 = Digraph(4, [(0, 2)])
    rel3 = set_relation(d3, [0, 1], [2, 3])
    assert not rel3.dominates_all and rel3.no_back_arc
    with pytest.raises(ValueError, match="disjoint"):
        set_relation(d, [0, 1], [1, 2])


def test_set_relation_empty_sides_are_vacuous():
    d = Digraph(3, [(0, 1)])
    assert set_relation(d, [], [0, 1]).strictly_dominates
    assert set_relation(d, [0], []).strictly_dominates


def test_connectivity_conventions():
    assert Digraph(0).is_connected()
    assert Digraph(1).is_connected()
    assert not Digraph(2).is_connected()
    assert Digraph(2, [(1, 0)]).is_connected()
    assert not Digraph(4, [(0, 1), (2, 3)]).is_connected()


def test_distance_examples():
    p = directed_path(4)
    assert p.distance(0, 3) == 3
    assert p.distance(0, 0) == 0
    assert p.distance(3, 0) is None
    c = directed_cycle(5)
    assert c.distance(0, 4) == 4
    assert c.distance(4, 0) == 1


def test_distance_against_floyd_warshall():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 8)
        arcs = [
            (u, v)
            for u in range(n)
            for v in range(n)
            if u != v and rng.random() < 0.25
        ]
        d = Digraph(n, arcs)
        for u in range(n):
            for v in range(n):
                assert d.distance(u, v) == brute_distance(d, u, v)


def test_semicomplete_predicates():
    assert Digraph(0).is_semicomplete()
    assert Digraph(1).is_semicomplete()
    assert Digraph(3, [(0, 1), (1, 2), (0, 2)]).is_semicomplete()
    assert Digraph(3, [(0, 1), (1, 0), (1, 2), (0, 2)]).is_semicomplete()
    assert not Digraph(3, [(0, 1), (1, 2)]).is_semicomplete()


def test_stable_set():
    d = Digraph(4, [(0, 1), (2, 1)])
    assert d.is_stable([0, 2])
    assert d.is_stable([])
    assert d.is_stable([3])
    assert not d.is_stable([0, 1])


def test_bipartition_directed_four_cycle():
    c4 = directed_cycle(4)
    colours = c4.bipartition()
    assert colours is not None
    assert colours[0] == colours[2] != colours[1] == colours[3]
    assert c4.is_semicomplete_bipartite()


def test_bipartition_odd_cycle_is_none():
    assert directed_cycle(5).bipartition() is None
    assert not directed_cycle(5).is_semicomplete_bipartite()


def test_bipartition_against_brute_two_coloring():
    rng = random.Random(21)
    for _ in range(300):
        n = rng.randint(0, 7)
        arcs = [
            (u, v)
            for u in range(n)
            for v in range(n)
            if u != v and rng.random() < 0.3
        ]
        d = Digraph(n, arcs)
        colours = d.bipartition()
        two_colorable = brute_two_colorable(d.underlying_graph())
        assert (colours is not None) == two_colorable
        if colours is not None:
            for u, v in d.arcs():
                assert colours[u] != colours[v]


def test_semicomplete_bipartite_conventions():
    # Arcless digraphs take one empty side.
    assert Digraph(0).is_semicomplete_bipartite()
    assert Digraph(1).is_semicomplete_bipartite()
    assert Digraph(3).is_semicomplete_bipartite()
    # A disconnected digraph with an arc cannot have all cross pairs adjacent.
    assert not Digraph(3, [(0, 1)]).is_semicomplete_bipartite()
    # One cross pair missing.
    assert not Digraph(4, [(0, 1), (0, 3), (2, 3)]).is_semicomplete_bipartite()
    # Complete bipartite with mixed orientations and a digon.
    d = Digraph(4, [(0, 1), (1, 2), (2, 1), (0, 3), (3, 2), (1, 0)])
    assert d.is_semicomplete_bipartite()


def test_underlying_graph_and_complement():
    d = Digraph(3, [(0, 1), (1, 0), (1, 2)])
    g = d.underlying_graph()
    assert sorted(g.edges()) == [(0, 1), (1, 2)]
    gc = g.complement()
    assert sorted(gc.edges()) == [(0, 2)]
    assert gc.complement() == g


def test_edge_list_round_trip_exhaustive_small():
    for n in range(4):
        for d in enumerate_digraphs(n):
            assert parse_edge_list(format_edge_list(d)) == d


def test_edge_list_round_trip_txt_shape():
    d = Digraph(3, [(2, 0), (0, 1)])
    assert format_edge_list(d) == "n 3\n0 1\n2 0\n"


def test_parse_accepts_comments_and_blanks():
    text = "# a digraph\n\nn 3\n0 1\n# middle comment\n2 0\n"
    assert parse_edge_list(text) == Digraph(3, [(0, 1), (2, 0)])


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("", 1, "missing header"),
        ("0 1\n", 1, "expected header"),
        ("n x\n", 1, "not an integer"),
        ("n -2\n", 1, "non-negative"),
        ("n 3\n0\n", 2, "expected arc"),
        ("n 3\n0 1 2\n", 2, "expected arc"),
        ("n 3\n0 a\n", 2, "not integers"),
        ("n 3\n0 3\n", 2, "range"),
        ("n 3\n# ok\n\n1 1\n", 4, "loop"),
    ],
)
def test_parse_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(EdgeListError, match=fragment) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_equality_and_hash():
    a = Digraph(3, [(0, 1), (1, 2)])
    b = Digraph(3, [(1, 2), (0, 1)])
    assert a == b and hash(a) == hash(b)
    assert a != Digraph(3, [(0, 1)])
    assert a != Digraph(4, [(0, 1), (1, 2)])
