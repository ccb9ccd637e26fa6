from __future__ import annotations

import itertools

from hypothesis import given, settings

import checks
from corpus import BIP, P4, STAR3, TRI, graphs
from matchstruct import oracle as O
from matchstruct.graph import Graph, Matching, odd_components
from matchstruct.matching import (
    allowed_edges,
    deficiency,
    exposable_vertices,
    gallai_edmonds,
    is_factor_critical,
    matching_number,
    maximum_matching,
)


def test_maximum_matching_examples():
    assert maximum_matching(P4).edges == ((0, 1), (2, 3))
    m = maximum_matching(TRI)
    assert len(m) == 1 and m.is_matching_of(TRI)
    assert maximum_matching(Graph.from_edges(0, [])).edges == ()


def test_maximum_matching_is_lexicographically_least():
    # C6 has two perfect matchings; the least one starts with edge 0-1
    c6 = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    assert maximum_matching(c6).edges == ((0, 1), (2, 3), (4, 5))


def test_deficiency_examples():
    assert deficiency(TRI) == 1
    assert deficiency(P4) == 0
    assert deficiency(STAR3) == 2


def test_factor_critical_examples():
    assert is_factor_critical(TRI)
    assert not is_factor_critical(P4)
    assert is_factor_critical(Graph.from_edges(1, []))
    assert not is_factor_critical(Graph.from_edges(0, []))


def test_exposable_examples():
    assert exposable_vertices(TRI) == {0, 1, 2}
    assert exposable_vertices(STAR3) == {1, 2, 3}
    assert exposable_vertices(P4) == frozenset()


def test_allowed_edges_examples():
    assert allowed_edges(P4) == {(0, 1), (2, 3)}
    assert allowed_edges(TRI) == set(TRI.edges)
    assert allowed_edges(BIP) == {(0, 1), (2, 3)}


def test_gallai_edmonds_examples():
    ge = gallai_edmonds(STAR3)
    assert (ge.d_set, ge.a_set, ge.c_set) == ({1, 2, 3}, {0}, frozenset())
    ge = gallai_edmonds(P4)
    assert (ge.d_set, ge.a_set, ge.c_set) == (frozenset(), frozenset(), {0, 1, 2, 3})
    ge = gallai_edmonds(TRI)
    assert (ge.d_set, ge.a_set, ge.c_set) == ({0, 1, 2}, frozenset(), frozenset())


@settings(max_examples=300)
@given(graphs())
def test_matching_agrees_with_oracle(g):
    assert checks.matching_violations(g) == []


@settings(max_examples=200)
@given(graphs())
def test_gallai_edmonds_invariants(g):
    assert checks.ge_violations(g) == []


@settings(max_examples=200)
@given(graphs())
def test_allowed_and_exposable_agree_with_oracle(g):
    assert allowed_edges(g) == O.brute_allowed_edges(g)
    assert exposable_vertices(g) == O.brute_exposable(g)
    assert is_factor_critical(g) == O.brute_is_factor_critical(g)


@settings(max_examples=100)
@given(graphs(max_n=8))
def test_berge_formula(g):
    d = deficiency(g)
    best = max(odd_components(g, x).q - len(x) for k in range(g.n + 1) for x in itertools.combinations(range(g.n), k))
    assert best == d
    a = gallai_edmonds(g).a_set
    assert odd_components(g, a).q - len(a) == d


@settings(max_examples=100)
@given(graphs(max_n=8))
def test_every_allowed_edge_extends_to_a_maximum_matching(g):
    nu = matching_number(g)
    for u, v in allowed_edges(g):
        rest = [x for x in g.vertices if x not in (u, v)]
        sub = Graph.from_edges(
            len(rest), [(rest.index(a), rest.index(b)) for a, b in g.edges if a in rest and b in rest]
        )
        inner = maximum_matching(sub)
        m = Matching.from_edges(g.n, [(u, v), *((rest[a], rest[b]) for a, b in inner.edges)])
        assert m.is_matching_of(g) and len(m) == nu
