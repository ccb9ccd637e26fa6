"""Barriers and their enumeration through ideals of the DM poset.

A set ``X`` is a barrier when ``def(G) = q_G(X) - |X|``.  Odd-maximal
barriers correspond one-to-one with legitimate normalized upper ideals of
the DM poset (``X`` is the union of the bases), and the maximal ones with
the ideals that are also spanning.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator

from .dmposet import Ideal, TfrPoset, _bits, build_tfr_poset, ideal_flags
from .graph import Graph, connected_components, induced_subgraph, odd_components
from .matching import deficiency, is_factor_critical

DEFAULT_MAX_BARRIERS = 10**6


class BarrierKind(enum.Enum):
    PLAIN = "plain"
    ODD_MAXIMAL = "odd-maximal"
    MAXIMAL = "maximal"


class NotABarrierError(ValueError):
    pass


class IdealError(ValueError):
    """The ideal lacks a flag required by the operation."""


class BarrierLimitExceeded(RuntimeError):
    """More barriers than the cap allows; ``partial`` holds those found."""

    def __init__(self, limit: int, partial: list[Barrier]) -> None:
        super().__init__(f"barrier enumeration stopped after {limit} results")
        self.limit = limit
        self.partial = partial


@dataclass(frozen=True)
class Barrier:
    vertices: tuple[int, ...]
    q: int
    kind: BarrierKind
    witness: Ideal | None = None


def is_barrier(g: Graph, x: Iterable[int]) -> bool:
    xs = g.check_vertices(x)
    return deficiency(g) == odd_components(g, xs).q - len(xs)


def classify_barrier(g: Graph, x: Iterable[int]) -> Barrier:
    xs = g.check_vertices(x)
    rep = odd_components(g, xs)
    if deficiency(g) != rep.q - len(xs):
        raise NotABarrierError(f"{sorted(xs)} is not a barrier")
    odd_max = all(is_factor_critical(induced_subgraph(g, c).graph) for c in rep.odd)
    if not odd_max:
        kind = BarrierKind.PLAIN
    elif rep.c_set:
        kind = BarrierKind.ODD_MAXIMAL
    else:
        kind = BarrierKind.MAXIMAL
    return Barrier(tuple(sorted(xs)), rep.q, kind)


def barrier_from_ideal(poset: TfrPoset, ideal: Iterable[int] | Ideal) -> tuple[int, ...]:
    """Union of the bases of a legitimate normalized upper ideal."""
    flags = ideal if isinstance(ideal, Ideal) else ideal_flags(poset, ideal)
    missing = [
        name
        for name, ok in (
            ("upper", flags.is_upper),
            ("legitimate", flags.is_legitimate),
            ("normalized", flags.is_normalized),
        )
        if not ok
    ]
    if missing:
        raise IdealError(f"ideal {sorted(flags.elements)} is not {', '.join(missing)}")
    return tuple(sorted(v for i in flags.elements for v in poset.elements[i].base))


def _ideals(poset: TfrPoset, spanning: bool) -> Iterator[int]:
    """Legitimate normalized upper ideals as bitmasks, optionally only the
    spanning ones.

    Elements are decided upper-first, so an element can be taken only when
    all of its strict uppers already are.
    """
    k = len(poset)
    up, forb = poset.up, poset.forb
    seq = sorted(range(k), key=lambda i: (bin(up[i]).count("1"), i))
    later_forb = [0] * (k + 1)
    for pos in range(k - 1, -1, -1):
        later_forb[pos] = later_forb[pos + 1] | forb[seq[pos]]
    consistent = [e.consistent for e in poset.elements]
    full = (1 << k) - 1

    def rec(pos: int, chosen: int, hit: int) -> Iterator[int]:
        if pos == k:
            if not spanning or (chosen | hit) == full:
                yield chosen
            return
        e = seq[pos]
        bit = 1 << e
        if not (hit & bit) and not (up[e] & ~bit & ~chosen):
            yield from rec(pos + 1, chosen | bit, hit | forb[e])
        if consistent[e] and (not spanning or (hit | later_forb[pos + 1]) & bit):
            yield from rec(pos + 1, chosen, hit)

    yield from rec(0, 0, 0)


def _enumerate(g: Graph, poset: TfrPoset | None, spanning: bool, max_barriers: int) -> list[Barrier]:
    if max_barriers < 1:
        raise ValueError("max_barriers must be positive")
    poset = poset or build_tfr_poset(g)
    d = deficiency(g)
    out = []
    for mask in _ideals(poset, spanning):
        if len(out) >= max_barriers:
            out.sort(key=lambda b: b.vertices)
            raise BarrierLimitExceeded(max_barriers, out)
        ids = _bits(mask)
        flags = ideal_flags(poset, ids)
        xs = barrier_from_ideal(poset, flags)
        kind = BarrierKind.MAXIMAL if flags.is_spanning else BarrierKind.ODD_MAXIMAL
        out.append(Barrier(xs, d + len(xs), kind, flags))
    out.sort(key=lambda b: b.vertices)
    return out


def enumerate_maximal_barriers(
    g: Graph, max_barriers: int = DEFAULT_MAX_BARRIERS, poset: TfrPoset | None = None
) -> list[Barrier]:
    """All maximal barriers, sorted by vertex tuple, each with its witness ideal.

    Raises :class:`BarrierLimitExceeded` (carrying the partial list) once
    more than ``max_barriers`` would be produced.
    """
    return _enumerate(g, poset, True, max_barriers)


def enumerate_odd_maximal_barriers(
    g: Graph, max_barriers: int = DEFAULT_MAX_BARRIERS, poset: TfrPoset | None = None
) -> list[Barrier]:
    return _enumerate(g, poset, False, max_barriers)


def barrier_intersection(g: Graph, poset: TfrPoset | None = None) -> frozenset[int]:
    """Intersection of all maximal barriers (which is ``A(G)``)."""
    barriers = enumerate_maximal_barriers(g, poset=poset)
    out = frozenset(barriers[0].vertices)
    for b in barriers[1:]:
        out &= frozenset(b.vertices)
    return out


def decompose_barrier(g: Graph, x: Iterable[int], poset: TfrPoset | None = None) -> list[int]:
    """Kotzig-Lovasz class ids whose bases partition the odd-maximal barrier
    ``x``; the coupled sets of those classes partition ``D_X`` and their
    components are the odd components of ``G - X``."""
    xs = g.check_vertices(x)
    b = classify_barrier(g, xs)
    if b.kind is BarrierKind.PLAIN:
        raise NotABarrierError(f"{sorted(xs)} is a barrier but not odd-maximal")
    poset = poset or build_tfr_poset(g)
    ids = [e.id for e in poset.elements if not e.base or xs.issuperset(e.base)]
    chosen = [poset.elements[i] for i in ids]
    if sorted(v for e in chosen for v in e.base) != sorted(xs):
        raise AssertionError(f"bases do not cover {sorted(xs)}")
    coupled = [v for e in chosen for v in e.vertices if v not in e.base]
    rep = odd_components(g, xs)
    if len(coupled) != len(set(coupled)) or set(coupled) != rep.d_set:
        raise AssertionError("coupled sets do not partition the odd components")
    pieces = sorted(
        tuple(c)
        for e in chosen
        for c in connected_components(g, [v for v in e.vertices if v not in e.base])
    )
    if pieces != sorted(rep.odd):
        raise AssertionError("coupled components differ from the odd components")
    return ids
