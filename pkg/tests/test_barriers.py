from __future__ import annotations

import pytest
from hypothesis import given, settings

import checks
from corpus import NAMED, P4, STAR3, TRI, graphs
from matchstruct.barriers import (
    BarrierKind,
    BarrierLimitExceeded,
    IdealError,
    NotABarrierError,
    barrier_from_ideal,
    barrier_intersection,
    classify_barrier,
    decompose_barrier,
    enumerate_maximal_barriers,
    enumerate_odd_maximal_barriers,
    is_barrier,
)
from matchstruct.dmposet import build_tfr_poset, ideal_flags
from matchstruct.graph import Graph


def test_is_barrier_examples():
    assert is_barrier(TRI, set())
    assert is_barrier(P4, {1, 2})
    assert not is_barrier(P4, {0, 3})


def test_classify_examples():
    assert classify_barrier(P4, {1, 2}).kind is BarrierKind.MAXIMAL
    assert classify_barrier(P4, {2}).kind is BarrierKind.ODD_MAXIMAL
    b = classify_barrier(STAR3, {0})
    assert (b.kind, b.q) == (BarrierKind.MAXIMAL, 3)
    with pytest.raises(NotABarrierError):
        classify_barrier(P4, {0, 3})


def test_classify_plain_barrier():
    # the empty set is a barrier of P3 but its odd component is not factor-critical
    p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    assert classify_barrier(p3, {1}).kind is BarrierKind.MAXIMAL
    assert classify_barrier(p3, set()).kind is BarrierKind.PLAIN


def test_barrier_from_ideal_examples():
    assert barrier_from_ideal(build_tfr_poset(P4), {1, 2}) == (1, 2)
    assert barrier_from_ideal(build_tfr_poset(TRI), {0}) == ()
    assert barrier_from_ideal(build_tfr_poset(STAR3), {0}) == (0,)
    with pytest.raises(IdealError, match="legitimate"):
        barrier_from_ideal(build_tfr_poset(P4), {0, 1, 2})
    with pytest.raises(IdealError, match="normalized"):
        barrier_from_ideal(build_tfr_poset(TRI), set())


def test_enumerate_maximal_examples():
    assert [b.vertices for b in enumerate_maximal_barriers(P4)] == [(0, 2), (1, 2), (1, 3)]
    assert [b.vertices for b in enumerate_maximal_barriers(TRI)] == [()]
    assert [b.vertices for b in enumerate_maximal_barriers(STAR3)] == [(0,)]


def test_enumerate_odd_maximal_examples():
    got = {b.vertices for b in enumerate_odd_maximal_barriers(P4)}
    assert got == {(), (1,), (2,), (0, 2), (1, 2), (1, 3)}
    assert [b.vertices for b in enumerate_odd_maximal_barriers(TRI)] == [()]
    assert [b.vertices for b in enumerate_odd_maximal_barriers(STAR3)] == [(0,)]


def test_witness_ideals_pass_their_flags():
    p = build_tfr_poset(P4)
    for b in enumerate_maximal_barriers(P4, poset=p):
        flags = ideal_flags(p, b.witness.elements)
        assert flags == b.witness and flags.is_spanning
        assert barrier_from_ideal(p, flags) == b.vertices


def test_intersection_examples():
    assert barrier_intersection(P4) == frozenset()
    assert barrier_intersection(STAR3) == {0}
    assert barrier_intersection(TRI) == frozenset()


def test_decompose_examples():
    p = build_tfr_poset(P4)
    assert [p.elements[i].base for i in decompose_barrier(P4, {1, 2}, p)] == [(1,), (2,)]
    assert decompose_barrier(STAR3, {0}) == [0]
    assert decompose_barrier(TRI, set()) == [0]
    with pytest.raises(NotABarrierError):
        decompose_barrier(Graph.from_edges(3, [(0, 1), (1, 2)]), set())


def test_cap_raises_with_partial_result():
    with pytest.raises(BarrierLimitExceeded) as info:
        enumerate_maximal_barriers(P4, max_barriers=2)
    assert info.value.limit == 2
    assert [b.vertices for b in info.value.partial] == sorted(b.vertices for b in info.value.partial)
    assert len(info.value.partial) == 2
    with pytest.raises(ValueError):
        enumerate_maximal_barriers(P4, max_barriers=0)


@pytest.mark.parametrize("name", sorted(n for n in NAMED if NAMED[n].n <= 12))
def test_named_barrier_families(name):
    assert checks.barrier_violations(NAMED[name]) == []
    assert checks.intersection_violations(NAMED[name]) == []


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_barrier_families_match_oracle(g):
    assert checks.barrier_violations(g) == []
    assert checks.intersection_violations(g) == []


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8))
def test_every_odd_maximal_barrier_decomposes(g):
    p = build_tfr_poset(g)
    for b in enumerate_odd_maximal_barriers(g, poset=p):
        ids = decompose_barrier(g, b.vertices, p)
        assert sorted(v for i in ids for v in p.elements[i].base) == list(b.vertices)
