"""Basilica decomposition: the order between factor-components, the
Kotzig-Lovasz partition, and the attachment of upper components to
Kotzig-Lovasz classes.

The order is computed from a fixed maximum matching M.  Component ``H`` lies
below a consistent component ``I`` exactly when ``I`` sits inside the
largest separating set ``X`` such that every vertex of ``X - V(H)`` has an
M-forwarding path into ``H`` running inside ``X`` and meeting ``H`` only at
its last vertex (equivalently ``G[X]/H`` is factor-critical).  That set is
found as a greatest fixpoint of alternating-forest searches in ``G[X]/H``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .factor import FactorComponent, MatchingStructure, analyse
from .graph import Graph, Matching, connected_components
from .matching import GallaiEdmondsPartition, MatchingInvariantError, _grow


class AttachmentError(RuntimeError):
    """An upper component touched more than one Kotzig-Lovasz class."""


@dataclass(frozen=True)
class KLClass:
    """A Kotzig-Lovasz class.

    ``coupled`` and ``up_set`` are ``None`` until filled in by
    :func:`coupled_and_up_sets`.
    """

    id: int
    base: tuple[int, ...]
    host: int
    coupled: tuple[int, ...] | None = None
    up_set: tuple[int, ...] | None = None

    @property
    def span(self) -> tuple[int, ...]:
        """``base`` together with the coupled set."""
        return tuple(sorted((*self.base, *(self.coupled or ()))))


@dataclass(frozen=True)
class ComponentOrder:
    """Reflexive order over factor-component ids, stored as upper sets."""

    uppers: tuple[frozenset[int], ...]

    def __contains__(self, pair: object) -> bool:
        i, j = pair  # type: ignore[misc]
        return i == j or j in self.uppers[i]

    @property
    def pairs(self) -> frozenset[tuple[int, int]]:
        out = {(i, i) for i in range(len(self.uppers))}
        out.update((i, j) for i, up in enumerate(self.uppers) for j in up)
        return frozenset(out)

    def strict_pairs(self) -> list[tuple[int, int]]:
        return sorted((i, j) for i, up in enumerate(self.uppers) for j in up)

    def hasse(self) -> list[tuple[int, int]]:
        out = []
        for i, up in enumerate(self.uppers):
            implied = set()
            for j in up:
                implied |= self.uppers[j]
            out.extend((i, j) for j in up if j not in implied)
        return sorted(out)


@dataclass(frozen=True)
class Attachment:
    host: int
    vertices: tuple[int, ...]
    class_id: int


@dataclass(frozen=True)
class BasilicaDecomposition:
    graph: Graph
    matching: Matching
    ge: GallaiEdmondsPartition
    components: tuple[FactorComponent, ...]
    classes: tuple[KLClass, ...]
    order: ComponentOrder
    attachments: tuple[Attachment, ...]
    class_of: tuple[int | None, ...] = field(repr=False)
    structure: MatchingStructure = field(repr=False, compare=False)


# -- Kotzig-Lovasz partition ---------------------------------------------------


def _kl_bases(ms: MatchingStructure) -> list[KLClass]:
    a_set = ms.ge.a_set
    raw: list[tuple[int, tuple[int, ...]]] = []
    for comp in ms.components:
        if not comp.consistent:
            raw.append((comp.id, tuple(v for v in comp.vertices if v in a_set)))
            continue
        taken: set[int] = set()
        for u in comp.vertices:
            if u in taken:
                continue
            sat = ms.sat[u]
            cls = tuple(v for v in comp.vertices if v == u or not sat[v])
            if taken.intersection(cls):
                raise MatchingInvariantError(f"Kotzig-Lovasz relation is not transitive around {u}")
            taken.update(cls)
            raw.append((comp.id, cls))
    raw.sort(key=lambda hb: (hb[0], hb[1][0] if hb[1] else -1, not hb[1]))
    return [KLClass(i, base, host) for i, (host, base) in enumerate(raw)]


def kl_partition(g: Graph) -> list[KLClass]:
    """Kotzig-Lovasz classes (bases only), ordered by host component and
    then minimum vertex.  An inconsistent component without vertices in
    ``A(G)`` contributes one class with an empty base."""
    return _kl_bases(analyse(g))


# -- order between factor-components -------------------------------------------


def _upper_components(ms: MatchingStructure, h: FactorComponent) -> frozenset[int]:
    g = ms.graph
    adj = g.adj
    comp_of = ms.comp_of
    hv = set(h.vertices)
    if not any(w not in hv for v in h.vertices for w in adj[v]):
        return frozenset()
    # only consistent components can lie strictly above anything
    reach = {h.id}
    stack = [h.id]
    while stack:
        c = stack.pop()
        for v in ms.components[c].vertices:
            for w in adj[v]:
                k = comp_of[w]
                if k not in reach and ms.components[k].consistent:
                    reach.add(k)
                    stack.append(k)
    cand = reach - {h.id}
    mate = ms.mate
    while cand:
        verts = [v for c in sorted(cand) for v in ms.components[c].vertices]
        local = {v: i + 1 for i, v in enumerate(verts)}
        kadj: list[list[int]] = [[] for _ in range(len(verts) + 1)]
        for v, i in local.items():
            row = kadj[i]
            touches = False
            for w in adj[v]:
                j = local.get(w)
                if j is not None:
                    row.append(j)
                elif w in hv:
                    touches = True
            if touches:
                row.append(0)
                kadj[0].append(i)
        kmate = [-1] + [local[mate[v]] for v in verts]
        forest = _grow(kadj, kmate, [0])
        if forest.end != -1:
            raise MatchingInvariantError("upper components are not perfectly matched")
        keep = {c for c in cand if all(forest.even[local[v]] for v in ms.components[c].vertices)}
        if keep == cand:
            break
        cand = keep
    return frozenset(cand)


def _order(ms: MatchingStructure) -> ComponentOrder:
    return ComponentOrder(tuple(_upper_components(ms, h) for h in ms.components))


def component_order(g: Graph) -> ComponentOrder:
    return _order(analyse(g))


# -- attachment, upper and coupled sets -------------------------------------------


def _complete(
    ms: MatchingStructure, order: ComponentOrder, classes: Sequence[KLClass]
) -> tuple[list[KLClass], list[Attachment]]:
    g = ms.graph
    class_of: dict[int, int] = {}
    by_host: dict[int, list[KLClass]] = {}
    for c in classes:
        by_host.setdefault(c.host, []).append(c)
        for v in c.base:
            class_of[v] = c.id
    up_of: dict[int, set[int]] = {c.id: set() for c in classes}
    attachments = []
    for h in ms.components:
        hv = set(h.vertices)
        above = [v for j in sorted(order.uppers[h.id]) for v in ms.components[j].vertices]
        for k in connected_components(g, above):
            touched = {class_of.get(w) for v in k for w in g.adj[v] if w in hv}
            if len(touched) != 1 or None in touched:
                raise AttachmentError(f"upper part {k} above component {h.id} touches classes {touched}")
            (cid,) = touched
            up_of[cid].update(k)
            attachments.append(Attachment(h.id, tuple(k), cid))
    out = []
    for c in classes:
        h = ms.components[c.host]
        star = set(h.vertices)
        for j in order.uppers[h.id]:
            star.update(ms.components[j].vertices)
        up = up_of[c.id]
        coupled = star - set(c.base) - up
        out.append(KLClass(c.id, c.base, c.host, tuple(sorted(coupled)), tuple(sorted(up))))
    attachments.sort(key=lambda a: (a.host, a.vertices))
    return out, attachments


def coupled_and_up_sets(g: Graph, order: ComponentOrder, classes: Iterable[KLClass]) -> list[KLClass]:
    """Fill in ``coupled`` and ``up_set`` for each class."""
    done, _ = _complete(analyse(g), order, list(classes))
    return done


def from_structure(ms: MatchingStructure) -> BasilicaDecomposition:
    order = _order(ms)
    classes, attachments = _complete(ms, order, _kl_bases(ms))
    class_of: list[int | None] = [None] * ms.graph.n
    for c in classes:
        for v in c.base:
            class_of[v] = c.id
    return BasilicaDecomposition(
        graph=ms.graph,
        matching=ms.matching,
        ge=ms.ge,
        components=ms.components,
        classes=tuple(classes),
        order=order,
        attachments=tuple(attachments),
        class_of=tuple(class_of),
        structure=ms,
    )


def basilica(g: Graph) -> BasilicaDecomposition:
    return from_structure(analyse(g))
