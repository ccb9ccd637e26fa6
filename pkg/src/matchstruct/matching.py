"""Maximum matching (Edmonds' blossom search) and the Gallai-Edmonds partition.

Everything here works on plain adjacency tuples and a mutable ``mate``
array (``-1`` = exposed).  A single alternating-forest search costs
``O(m alpha(n))``; blossoms are tracked with a union-find over bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .graph import Edge, Graph, Matching, neighbors

Adj = Sequence[Sequence[int]]


class _Forest(NamedTuple):
    even: bytearray
    odd: bytearray
    end: int  # exposed vertex closing an augmenting path, or -1
    pred: list[int]


class MatchingInvariantError(RuntimeError):
    """A supposedly maximum matching admitted an augmenting path."""


def _grow(adj: Adj, mate: list[int], roots: Sequence[int], alive: bytearray | None = None) -> _Forest:
    """Grow an Edmonds alternating forest from ``roots`` (all exposed).

    Stops at the first exposed non-root vertex reached (an augmenting path
    that can be applied with :func:`_augment` when there is a single root).
    Raises if two trees meet, which only happens for non-maximum matchings.
    """
    n = len(adj)
    pred = [-1] * n
    even = bytearray(n)
    odd = bytearray(n)
    uf = list(range(n))
    base = list(range(n))
    mark = [0] * n
    stamp = 0
    q = list(roots)
    for r in q:
        even[r] = 1

    def find(x: int) -> int:
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def lca(a: int, b: int) -> int:
        nonlocal stamp
        stamp += 1
        while True:
            a = base[find(a)]
            mark[a] = stamp
            if mate[a] == -1:
                break
            a = pred[mate[a]]
        while True:
            b = base[find(b)]
            if mark[b] == stamp:
                return b
            if mate[b] == -1:
                return -1
            b = pred[mate[b]]

    def mark_path(v: int, b: int, child: int, members: list[int]) -> None:
        while base[find(v)] != b:
            mv = mate[v]
            members.append(v)
            members.append(mv)
            pred[v] = child
            child = mv
            v = pred[mv]

    head = 0
    while head < len(q):
        v = q[head]
        head += 1
        for to in adj[v]:
            if alive is not None and not alive[to]:
                continue
            if mate[v] == to:
                continue
            if base[find(v)] == base[find(to)]:
                continue
            if even[to]:
                cb = lca(v, to)
                if cb == -1:
                    raise MatchingInvariantError(f"trees meet across edge ({v}, {to})")
                members: list[int] = []
                mark_path(v, cb, to, members)
                mark_path(to, cb, v, members)
                rb = find(cb)
                for x in members:
                    rx = find(x)
                    if rx != rb:
                        uf[rx] = rb
                base[rb] = cb
                for x in members:
                    if not even[x]:
                        even[x] = 1
                        q.append(x)
            elif pred[to] == -1:
                pred[to] = v
                odd[to] = 1
                if mate[to] == -1:
                    return _Forest(even, odd, to, pred)
                w = mate[to]
                even[w] = 1
                q.append(w)
    return _Forest(even, odd, -1, pred)


def _augment(mate: list[int], pred: list[int], end: int) -> None:
    to = end
    while to != -1:
        pv = pred[to]
        nxt = mate[pv]
        mate[to] = pv
        mate[pv] = to
        to = nxt


def _max_mate(adj: Adj, alive: bytearray | None = None) -> list[int]:
    """Some maximum matching of the graph induced by ``alive`` vertices."""
    n = len(adj)
    mate = [-1] * n
    for v in range(n):
        if mate[v] != -1 or (alive is not None and not alive[v]):
            continue
        for w in adj[v]:
            if mate[w] == -1 and (alive is None or alive[w]):
                mate[v], mate[w] = w, v
                break
    for r in range(n):
        if mate[r] == -1 and (alive is None or alive[r]):
            f = _grow(adj, mate, [r], alive)
            if f.end != -1:
                _augment(mate, f.pred, f.end)
    return mate


def _exposed_roots(mate: list[int], alive: bytearray | None) -> list[int]:
    return [v for v, w in enumerate(mate) if w == -1 and (alive is None or alive[v])]


def _allowed_at(adj: Adj, mate: list[int], alive: bytearray, u: int) -> list[int]:
    """Live neighbours ``w`` of ``u`` such that ``uw`` lies in some maximum
    matching of the live graph.  May replace ``mate`` by another maximum
    matching (one exposing ``u``)."""
    mu = mate[u]
    alive[u] = 0
    try:
        if mu != -1:
            mate[u] = mate[mu] = -1
            f = _grow(adj, mate, [mu], alive)
            if f.end == -1:
                # u is never exposed: uw allowed iff w exposable in G - u
                f = _grow(adj, mate, _exposed_roots(mate, alive), alive)
                mate[u], mate[mu] = mu, u
                return [w for w in adj[u] if alive[w] and f.even[w]]
            _augment(mate, f.pred, f.end)
        # u exposable: uw allowed iff w is not exposable in G - u
        f = _grow(adj, mate, _exposed_roots(mate, alive), alive)
        return [w for w in adj[u] if alive[w] and not f.even[w]]
    finally:
        alive[u] = 1


def _lexmin_mate(adj: Adj) -> list[int]:
    """The maximum matching whose sorted edge list is lexicographically least.

    Greedy: repeatedly commit the smallest edge that still lies in a maximum
    matching of the remaining graph.
    """
    n = len(adj)
    mate = _max_mate(adj)
    alive = bytearray(b"\x01") * n
    out = [-1] * n
    for u in range(n):
        if not alive[u]:
            continue
        first = next((w for w in adj[u] if alive[w]), -1)
        if first == -1:
            alive[u] = 0
            continue
        if mate[u] == first:
            v = first
        else:
            cands = _allowed_at(adj, mate, alive, u)
            if not cands:
                alive[u] = 0
                continue
            v = cands[0]
        if mate[u] != v:
            freed = [x for x in (mate[u], mate[v]) if x != -1]
            for x in freed:
                mate[x] = -1
            mate[u], mate[v] = v, u
            alive[u] = alive[v] = 0
            if len(freed) == 2:
                for r in freed:
                    f = _grow(adj, mate, [r], alive)
                    if f.end != -1:
                        _augment(mate, f.pred, f.end)
                        break
                else:
                    raise MatchingInvariantError("lost a matching edge while fixing an allowed edge")
        alive[u] = alive[v] = 0
        out[u], out[v] = v, u
    return out


class GELabels(NamedTuple):
    d: bytearray
    a: bytearray


def _ge_labels(adj: Adj, mate: list[int]) -> GELabels:
    f = _grow(adj, mate, _exposed_roots(mate, None))
    if f.end != -1:
        raise MatchingInvariantError("matching is not maximum")
    a = bytearray(x & (1 - y) for x, y in zip(f.odd, f.even))
    return GELabels(f.even, a)


def _saturated_reach(adj: Adj, mate: list[int], alive: bytearray, u: int) -> bytearray:
    """Flags of vertices ``t`` joined to ``u`` by an M-saturated path.

    Requires ``u`` covered and never exposed by a maximum matching."""
    r = mate[u]
    alive[u] = 0
    mate[u] = mate[r] = -1
    try:
        f = _grow(adj, mate, [r], alive)
    finally:
        mate[u], mate[r] = r, u
        alive[u] = 1
    if f.end != -1:
        raise MatchingInvariantError(f"vertex {u} is exposable")
    return f.even


def mate_array(m: Matching) -> list[int]:
    return [-1 if w is None else w for w in m.mate]


def maximum_matching(g: Graph) -> Matching:
    """A maximum matching; ties broken towards the lexicographically
    smallest sorted edge list, so the result is canonical."""
    return Matching.from_mate(_lexmin_mate(g.adj))


def matching_number(g: Graph) -> int:
    return sum(1 for v, w in enumerate(_max_mate(g.adj)) if v < w)


def deficiency(g: Graph) -> int:
    return g.n - 2 * matching_number(g)


def exposable_vertices(g: Graph) -> frozenset[int]:
    """Vertices missed by at least one maximum matching, i.e. ``D(G)``."""
    labels = _ge_labels(g.adj, _max_mate(g.adj))
    return frozenset(v for v in g.vertices if labels.d[v])


def is_factor_critical(g: Graph) -> bool:
    """Deleting any one vertex leaves a perfectly matchable graph.

    A single vertex counts as factor-critical; the empty graph does not.
    """
    if g.n % 2 == 0:
        return False
    mate = _max_mate(g.adj)
    if sum(1 for w in mate if w == -1) != 1:
        return False
    return all(_ge_labels(g.adj, mate).d)


@dataclass(frozen=True)
class GallaiEdmondsPartition:
    d_set: frozenset[int]
    a_set: frozenset[int]
    c_set: frozenset[int]


def _partition_from_labels(n: int, labels: GELabels) -> GallaiEdmondsPartition:
    d = frozenset(v for v in range(n) if labels.d[v])
    a = frozenset(v for v in range(n) if labels.a[v])
    return GallaiEdmondsPartition(d, a, frozenset(range(n)) - d - a)


def gallai_edmonds(g: Graph) -> GallaiEdmondsPartition:
    ge = _partition_from_labels(g.n, _ge_labels(g.adj, _max_mate(g.adj)))
    # the inner vertices of the final forest are exactly N(D(G))
    assert ge.a_set == neighbors(g, ge.d_set)
    return ge


class AllowedStructure(NamedTuple):
    """Allowed edges plus the saturated-path reach of every vertex of C(G)."""

    edges: tuple[Edge, ...]
    sat: dict[int, bytearray]


def _allowed_structure(g: Graph, mate: list[int], ge: GallaiEdmondsPartition) -> AllowedStructure:
    adj = g.adj
    alive = bytearray(b"\x01") * g.n
    sat = {u: _saturated_reach(adj, mate, alive, u) for u in sorted(ge.c_set)}
    d, a = ge.d_set, ge.a_set
    edges = []
    for u, v in g.edges:
        if mate[u] == v:
            edges.append((u, v))
        elif u in d:
            # D-D edges sit inside one factor-critical odd component; D-A
            # edges are allowed by the structure theorem
            if v in d or v in a:
                edges.append((u, v))
        elif v in d:
            if u in a:
                edges.append((u, v))
        elif u in sat and v in sat and sat[u][v]:
            edges.append((u, v))
    return AllowedStructure(tuple(edges), sat)


def allowed_edges(g: Graph) -> frozenset[Edge]:
    """Edges lying in at least one maximum matching."""
    mate = _max_mate(g.adj)
    ge = _partition_from_labels(g.n, _ge_labels(g.adj, mate))
    return frozenset(_allowed_structure(g, mate, ge).edges)
