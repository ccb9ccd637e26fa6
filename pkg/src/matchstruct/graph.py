"""Immutable simple graphs and the elementary operations used throughout.

Vertices are dense integer ids ``0..n-1``.  Derived graphs (induced
subgraphs, deletions, contractions) come with an explicit id remap table so
callers can translate results back to the host graph.
"""

from __future__ import annotations

import enum
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex ids."""


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Build with :meth:`from_edges`; the constructor expects already
    normalised, sorted, duplicate-free edges.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        seen: set[Edge] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an id outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = _norm(u, v)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return cls(n, tuple(sorted(seen)), tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def check_vertices(self, x: Iterable[int]) -> frozenset[int]:
        xs = frozenset(x)
        for v in xs:
            if not (isinstance(v, int) and 0 <= v < self.n):
                raise GraphError(f"invalid vertex id {v!r} for graph on {self.n} vertices")
        return xs


class Subgraph(NamedTuple):
    """A derived graph plus ``ids[i]`` = host id of its vertex ``i``."""

    graph: Graph
    ids: tuple[int, ...]


class Contraction(NamedTuple):
    """A contracted graph plus ``image[v]`` = new id of host vertex ``v``."""

    graph: Graph
    image: tuple[int, ...]
    contracted: int


def induced_subgraph(g: Graph, x: Iterable[int]) -> Subgraph:
    xs = sorted(g.check_vertices(x))
    pos = {v: i for i, v in enumerate(xs)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return Subgraph(Graph.from_edges(len(xs), edges), tuple(xs))


def delete_vertices(g: Graph, x: Iterable[int]) -> Subgraph:
    xs = g.check_vertices(x)
    return induced_subgraph(g, (v for v in g.vertices if v not in xs))


def contract(g: Graph, x: Iterable[int]) -> Contraction:
    """Shrink ``x`` to a single new vertex, placed last in the new id order."""
    xs = g.check_vertices(x)
    if not xs:
        raise GraphError("cannot contract an empty vertex set")
    rest = [v for v in g.vertices if v not in xs]
    c = len(rest)
    image = [c] * g.n
    for i, v in enumerate(rest):
        image[v] = i
    edges = set()
    for u, v in g.edges:
        a, b = image[u], image[v]
        if a != b:
            edges.add(_norm(a, b))
    return Contraction(Graph.from_edges(c + 1, edges), tuple(image), c)


def neighbors(g: Graph, x: Iterable[int]) -> frozenset[int]:
    xs = g.check_vertices(x)
    return frozenset(w for v in xs for w in g.adj[v] if w not in xs)


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Components of ``g[within]`` (whole graph by default), each sorted,
    listed by minimum vertex."""
    if within is None:
        allowed = None
        order: Iterable[int] = g.vertices
    else:
        allowed = set(within)
        order = sorted(allowed)
    seen: set[int] = set()
    comps = []
    for s in order:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        dq = deque([s])
        while dq:
            v = dq.popleft()
            for w in g.adj[v]:
                if w not in seen and (allowed is None or w in allowed):
                    seen.add(w)
                    comp.append(w)
                    dq.append(w)
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class OddComponentReport:
    """Odd/even component split of ``G - X``."""

    q: int
    d_set: frozenset[int]
    c_set: frozenset[int]
    odd: tuple[tuple[int, ...], ...]
    even: tuple[tuple[int, ...], ...]


def odd_components(g: Graph, x: Iterable[int]) -> OddComponentReport:
    xs = g.check_vertices(x)
    odd, even = [], []
    for comp in connected_components(g, (v for v in g.vertices if v not in xs)):
        (odd if len(comp) % 2 else even).append(tuple(comp))
    return OddComponentReport(
        q=len(odd),
        d_set=frozenset(v for c in odd for v in c),
        c_set=frozenset(v for c in even for v in c),
        odd=tuple(odd),
        even=tuple(even),
    )


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of a graph on ``n`` vertices."""

    n: int
    edges: tuple[Edge, ...]
    mate: tuple[int | None, ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Matching:
        mate: list[int | None] = [None] * n
        norm = []
        for e in edges:
            u, v = _norm(int(e[0]), int(e[1]))
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"invalid matching edge ({u}, {v})")
            if mate[u] is not None or mate[v] is not None:
                raise GraphError(f"edge ({u}, {v}) shares an endpoint with another matching edge")
            mate[u], mate[v] = v, u
            norm.append((u, v))
        return cls(n, tuple(sorted(norm)), tuple(mate))

    @classmethod
    def from_mate(cls, mate: Sequence[int]) -> Matching:
        """From an array with ``-1`` (or None) for exposed vertices."""
        edges = [(v, w) for v, w in enumerate(mate) if w is not None and w >= 0 and v < w]
        return cls.from_edges(len(mate), edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e: object) -> bool:
        if not isinstance(e, tuple) or len(e) != 2:
            return False
        u, v = e
        return 0 <= u < self.n and self.mate[u] == v

    def partner(self, v: int) -> int | None:
        return self.mate[v]

    def covers(self, v: int) -> bool:
        return self.mate[v] is not None

    def exposed(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.mate[v] is None)

    def is_matching_of(self, g: Graph) -> bool:
        return self.n == g.n and all(g.has_edge(u, v) for u, v in self.edges)


class PathKind(enum.Enum):
    FORWARDING = "forwarding"
    SATURATED = "saturated"
    EXPOSED = "exposed"
    NOT_ALTERNATING = "not-alternating"


@dataclass(frozen=True)
class AlternatingPathKind:
    """Classification of a path against a matching.

    For ``FORWARDING`` the path runs from ``start`` to ``end`` and ``end`` is
    the vertex left uncovered; the other kinds treat the ends symmetrically.
    """

    kind: PathKind
    start: int | None = None
    end: int | None = None


def classify_path(g: Graph, m: Matching, path: Sequence[int]) -> AlternatingPathKind:
    if not path:
        raise GraphError("empty path")
    if len(set(path)) != len(path):
        raise GraphError("path repeats a vertex")
    g.check_vertices(path)
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise GraphError(f"({a}, {b}) is not an edge")
    if len(path) == 1:
        return AlternatingPathKind(PathKind.FORWARDING, path[0], path[0])
    covered = [False] * len(path)
    for i, (a, b) in enumerate(zip(path, path[1:])):
        if m.mate[a] == b:
            covered[i] = covered[i + 1] = True
    missing = [i for i, c in enumerate(covered) if not c]
    s, t = path[0], path[-1]
    last = len(path) - 1
    if not missing:
        return AlternatingPathKind(PathKind.SATURATED, s, t)
    if missing == [last]:
        return AlternatingPathKind(PathKind.FORWARDING, s, t)
    if missing == [0]:
        return AlternatingPathKind(PathKind.FORWARDING, t, s)
    if missing == [0, last]:
        return AlternatingPathKind(PathKind.EXPOSED, s, t)
    return AlternatingPathKind(PathKind.NOT_ALTERNATING)


def random_graph(n: int, m: int, seed: int | None = None) -> Graph:
    """Uniform random simple graph with ``n`` vertices and ``m`` edges."""
    import random

    if m > n * (n - 1) // 2:
        raise GraphError(f"a simple graph on {n} vertices has at most {n * (n - 1) // 2} edges")
    rng = random.Random(seed)
    edges: set[Edge] = set()
    while len(edges) < m:
        u, v = rng.sample(range(n), 2)
        edges.add(_norm(u, v))
    return Graph.from_edges(n, sorted(edges))
