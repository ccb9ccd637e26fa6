"""Factor-components: connected pieces of the allowed-edge subgraph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .graph import Edge, Graph, Matching
from .matching import (
    GallaiEdmondsPartition,
    _allowed_structure,
    _ge_labels,
    _lexmin_mate,
    _partition_from_labels,
)


@dataclass(frozen=True)
class FactorComponent:
    id: int
    vertices: tuple[int, ...]
    allowed_edges: tuple[Edge, ...]
    consistent: bool


class MatchingStructure(NamedTuple):
    """Everything derived from one canonical maximum matching."""

    graph: Graph
    mate: list[int]
    ge: GallaiEdmondsPartition
    allowed: tuple[Edge, ...]
    sat: dict[int, bytearray]
    components: tuple[FactorComponent, ...]
    comp_of: tuple[int, ...]

    @property
    def matching(self) -> Matching:
        return Matching.from_mate(self.mate)


def analyse(g: Graph) -> MatchingStructure:
    mate = _lexmin_mate(g.adj)
    ge = _partition_from_labels(g.n, _ge_labels(g.adj, mate))
    allowed = _allowed_structure(g, mate, ge)
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in allowed.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    ordered = sorted(groups.values(), key=lambda vs: vs[0])
    comp_of = [0] * g.n
    for i, vs in enumerate(ordered):
        for v in vs:
            comp_of[v] = i
    edges_of: list[list[Edge]] = [[] for _ in ordered]
    for u, v in allowed.edges:
        edges_of[comp_of[u]].append((u, v))
    comps = tuple(
        FactorComponent(i, tuple(vs), tuple(edges_of[i]), not any(v in ge.d_set for v in vs))
        for i, vs in enumerate(ordered)
    )
    return MatchingStructure(g, mate, ge, allowed.edges, allowed.sat, comps, tuple(comp_of))


def factor_components(g: Graph) -> list[FactorComponent]:
    """Factor-components ordered by minimum vertex, with consistency flags.

    An isolated vertex is its own (inconsistent) component.
    """
    return list(analyse(g).components)
