"""DM components and the poset with a transitive forbidden relation built on
them.

Relations are kept as integer bitmasks internally (bit ``j`` of ``up[i]``
means ``i`` is below ``j``); the public fields expose plain pair sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .basilica import BasilicaDecomposition, basilica
from .graph import Graph

Pair = tuple[int, int]


class TfrInvariantError(RuntimeError):
    """The constructed relations violate a poset/forbidden-relation axiom."""


@dataclass(frozen=True)
class DmComponent:
    id: int
    base: tuple[int, ...]
    vertices: tuple[int, ...]
    host: int
    consistent: bool


@dataclass(frozen=True)
class TfrPoset:
    elements: tuple[DmComponent, ...]
    order: frozenset[Pair]  # reflexive
    forbidden: frozenset[Pair]  # unordered, stored with i < j
    immediate_order: frozenset[Pair]  # reflexive
    immediate_forbidden: frozenset[Pair]  # ordered
    star_forbidden: frozenset[Pair]  # ordered
    up: tuple[int, ...] = field(repr=False)
    forb: tuple[int, ...] = field(repr=False)
    decomposition: BasilicaDecomposition | None = field(default=None, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def forbids(self, i: int, j: int) -> bool:
        return bool(self.forb[i] >> j & 1)

    @property
    def inconsistent_mask(self) -> int:
        return _mask(e.id for e in self.elements if not e.consistent)


@dataclass(frozen=True)
class Ideal:
    elements: frozenset[int]
    is_upper: bool
    is_legitimate: bool
    is_spanning: bool
    is_normalized: bool


def _mask(ids: Iterable[int]) -> int:
    out = 0
    for i in ids:
        out |= 1 << i
    return out


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def dm_components(b: BasilicaDecomposition) -> list[DmComponent]:
    """One DM component per Kotzig-Lovasz class, ids shared with the class."""
    return [
        DmComponent(
            id=c.id,
            base=c.base,
            vertices=c.span,
            host=c.host,
            consistent=b.components[c.host].consistent,
        )
        for c in b.classes
    ]


def _owner(components: Sequence[DmComponent], n: int) -> list[int]:
    owner = [-1] * n
    for c in components:
        for v in c.base:
            owner[v] = c.id
    return owner


def _immediate_up(components: Sequence[DmComponent], g: Graph) -> list[int]:
    owner = _owner(components, g.n)
    out = []
    for c in components:
        coupled = set(c.vertices).difference(c.base)
        m = 1 << c.id
        for v in coupled:
            for w in g.adj[v]:
                if w not in coupled and owner[w] != -1:
                    m |= 1 << owner[w]
        out.append(m)
    return out


def _topological(succ: Sequence[int]) -> list[int]:
    k = len(succ)
    indeg = [0] * k
    for i in range(k):
        for j in _bits(succ[i] & ~(1 << i)):
            indeg[j] += 1
    ready = [i for i in range(k) if indeg[i] == 0]
    out = []
    while ready:
        i = ready.pop()
        out.append(i)
        for j in _bits(succ[i] & ~(1 << i)):
            indeg[j] -= 1
            if indeg[j] == 0:
                ready.append(j)
    if len(out) != k:
        raise TfrInvariantError("order relation has a cycle; antisymmetry fails")
    return out


def _closure(succ: Sequence[int]) -> list[int]:
    up = [0] * len(succ)
    for i in reversed(_topological(succ)):
        m = 1 << i
        for j in _bits(succ[i] & ~(1 << i)):
            m |= up[j]
        up[i] = m
    return up


def _pairs(masks: Sequence[int]) -> frozenset[Pair]:
    return frozenset((i, j) for i, m in enumerate(masks) for j in _bits(m))


def order_relation(components: Sequence[DmComponent], g: Graph) -> tuple[frozenset[Pair], frozenset[Pair]]:
    """Immediate order and its reflexive-transitive closure, as pair sets.

    ``D1`` is immediately below ``D2`` when a vertex of ``base(D2)`` is a
    neighbour of the coupled set of ``D1``.
    """
    succ = _immediate_up(components, g)
    return _pairs(succ), _pairs(_closure(succ))


def _immediate_forbidden(components: Sequence[DmComponent], n: int) -> list[int]:
    owner = _owner(components, n)
    out = []
    for c in components:
        coupled = set(c.vertices).difference(c.base)
        cands = {owner[v] for v in coupled if owner[v] != -1}
        out.append(_mask(d for d in cands if coupled.issuperset(components[d].base)))
    return out


def _forbidden(up: Sequence[int], forb0: Sequence[int]) -> list[int]:
    out = []
    for m in up:
        f = 0
        for j in _bits(m):
            f |= forb0[j]
        out.append(f)
    return out


def forbidden_relation(
    components: Sequence[DmComponent], order: Iterable[Pair], g: Graph
) -> tuple[frozenset[Pair], frozenset[Pair]]:
    """Immediate forbidden pairs and the full forbidden relation (both as
    ordered pairs; the full relation is symmetric)."""
    k = len(components)
    up = [1 << i for i in range(k)]
    for i, j in order:
        up[i] |= 1 << j
    forb0 = _immediate_forbidden(components, g.n)
    forb = _forbidden(up, forb0)
    _check_symmetric(forb)
    return _pairs(forb0), _pairs(forb)


def _check_symmetric(forb: Sequence[int]) -> None:
    for i, m in enumerate(forb):
        if m >> i & 1:
            raise TfrInvariantError(f"element {i} is forbidden with itself")
        for j in _bits(m):
            if not forb[j] >> i & 1:
                raise TfrInvariantError(f"forbidden relation not symmetric on ({i}, {j})")


def _star(up: Sequence[int], forb: Sequence[int]) -> frozenset[Pair]:
    out = set()
    for x, fx in enumerate(forb):
        for y in _bits(fx):
            if not (up[x] & forb[y] & ~(1 << x | 1 << y)):
                out.add((x, y))
    return frozenset(out)


def star_forbidden(poset: TfrPoset) -> frozenset[Pair]:
    """Immediate forbidden pairs: ``x`` and ``y`` forbidden with no third
    element ``z`` above ``x`` that is forbidden with ``y``."""
    return _star(poset.up, poset.forb)


def _validate(elements: Sequence[DmComponent], up: Sequence[int], forb: Sequence[int]) -> None:
    k = len(elements)
    for i in range(k):
        if not up[i] >> i & 1:
            raise TfrInvariantError(f"order not reflexive at {i}")
        for j in _bits(up[i]):
            if j != i and up[j] >> i & 1:
                raise TfrInvariantError(f"order not antisymmetric on ({i}, {j})")
            if up[j] & ~up[i]:
                raise TfrInvariantError(f"order not transitive through {j}")
            if forb[j] & ~forb[i]:
                raise TfrInvariantError(f"forbidden relation not transitive along ({i}, {j})")
    _check_symmetric(forb)
    for e in elements:
        if not e.consistent and (up[e.id] != 1 << e.id or forb[e.id]):
            raise TfrInvariantError(f"inconsistent element {e.id} is comparable or forbidden")


def from_decomposition(b: BasilicaDecomposition) -> TfrPoset:
    elements = dm_components(b)
    succ = _immediate_up(elements, b.graph)
    up = _closure(succ)
    forb0 = _immediate_forbidden(elements, b.graph.n)
    forb = _forbidden(up, forb0)
    _validate(elements, up, forb)
    return TfrPoset(
        elements=tuple(elements),
        order=_pairs(up),
        forbidden=frozenset((i, j) for i, j in _pairs(forb) if i < j),
        immediate_order=_pairs(succ),
        immediate_forbidden=_pairs(forb0),
        star_forbidden=_star(up, forb),
        up=tuple(up),
        forb=tuple(forb),
        decomposition=b,
    )


def build_tfr_poset(g: Graph) -> TfrPoset:
    """DM components with their order and forbidden relation; every axiom is
    checked before returning."""
    return from_decomposition(basilica(g))


def _subset_mask(poset: TfrPoset, subset: Iterable[int]) -> int:
    m = 0
    for i in subset:
        if not (isinstance(i, int) and 0 <= i < len(poset)):
            raise ValueError(f"unknown element id {i!r}")
        m |= 1 << i
    return m


def ideal_flags(poset: TfrPoset, subset: Iterable[int]) -> Ideal:
    m = _subset_mask(poset, subset)
    ids = _bits(m)
    is_upper = all(not (poset.up[i] & ~m) for i in ids)
    is_legitimate = all(not (poset.forb[i] & m) for i in ids)
    reach = m
    for i in ids:
        reach |= poset.forb[i]
    full = (1 << len(poset)) - 1
    inc = poset.inconsistent_mask
    return Ideal(
        elements=frozenset(ids),
        is_upper=is_upper,
        is_legitimate=is_legitimate,
        is_spanning=reach == full,
        is_normalized=(m & inc) == inc,
    )


def normalize(poset: TfrPoset, subset: Iterable[int]) -> frozenset[int]:
    """Add every inconsistent element."""
    return frozenset(_bits(_subset_mask(poset, subset) | poset.inconsistent_mask))


def hasse(poset: TfrPoset) -> list[Pair]:
    """Transitive reduction of the strict order."""
    out = []
    for i, m in enumerate(poset.up):
        strict = m & ~(1 << i)
        implied = 0
        for j in _bits(strict):
            implied |= poset.up[j] & ~(1 << j)
        out.extend((i, j) for j in _bits(strict & ~implied))
    return sorted(out)
