from __future__ import annotations

import pytest

from corpus import P4, STAR3, TRI
from matchstruct import oracle as O
from matchstruct.graph import Graph, Matching, PathKind

M_P4 = Matching.from_edges(4, [(0, 1), (2, 3)])


def test_brute_matching_examples():
    assert len(O.brute_max_matching(P4)) == 2
    assert len(O.brute_max_matching(TRI)) == 1
    assert len(O.brute_max_matching(Graph.from_edges(2, [(0, 1)]))) == 1


def test_brute_barrier_examples():
    assert O.brute_barriers(P4).maximal == {frozenset({0, 2}), frozenset({1, 2}), frozenset({1, 3})}
    assert O.brute_barriers(TRI).maximal == {frozenset()}
    assert O.brute_barriers(STAR3).maximal == {frozenset({0})}


def test_brute_component_order_examples():
    comps, order = O.brute_component_order(P4)
    assert order == {(0, 0), (1, 1)}
    assert O.brute_component_order(TRI)[1] == {(0, 0)}


def test_brute_kl_examples():
    assert sorted(map(sorted, O.brute_kl(P4))) == [[0], [1], [2], [3]]
    assert sorted(map(sorted, O.brute_kl(STAR3))) == [[0]]


def test_alternating_path_examples():
    assert O.alternating_path_exists(P4, M_P4, 0, 1, PathKind.SATURATED)
    assert not O.alternating_path_exists(P4, M_P4, 0, 2, PathKind.SATURATED)
    assert O.alternating_path_exists(P4, M_P4, 0, 3, PathKind.SATURATED)
    assert O.alternating_path_exists(P4, M_P4, 0, 2, PathKind.FORWARDING)
    assert not O.alternating_path_exists(P4, M_P4, 2, 0, PathKind.FORWARDING)


def test_ear_examples():
    assert not [e for e in O.enumerate_m_ears(P4, M_P4, [0, 1]) if e.has_internal]
    m = Matching.from_edges(3, [(1, 2)])
    ears = [e for e in O.enumerate_m_ears(TRI, m, [0]) if e.has_internal]
    assert len(ears) == 1 and ears[0].circuit and ears[0].ends == {0}
    assert not [e for e in O.enumerate_m_ears(P4, M_P4, range(4)) if e.has_internal]


def test_size_guards():
    big = Graph.from_edges(O.MAX_VERTICES + 1, [])
    with pytest.raises(O.SizeGuardError):
        O.brute_max_matching(big)
    with pytest.raises(O.SizeGuardError):
        O.brute_barriers(big)
    with pytest.raises(O.SizeGuardError):
        O.enumerate_m_ears(Graph.from_edges(O.MAX_EAR_VERTICES + 1, []), Matching.from_edges(11, []), [0])
