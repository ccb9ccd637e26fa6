"""Brute-force reference implementations.

Used by the test-suite to cross-check the production code.  Nothing here
reuses the blossom search or the decomposition pipeline: matching numbers
come from a memoised exhaustive enumeration over vertex subsets, barrier
families from a powerset scan, and path questions from exhaustive simple
path search.  Every entry point has a hard size guard.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import (
    Graph,
    Matching,
    PathKind,
    classify_path,
    contract,
    induced_subgraph,
    neighbors,
)

MAX_VERTICES = 12
MAX_BARRIER_VERTICES = 12
MAX_EAR_VERTICES = 10


class SizeGuardError(ValueError):
    pass


def _guard(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise SizeGuardError(f"oracle limited to {limit} vertices, got {g.n}")


class _Enumerator:
    """Memoised matching numbers of induced subgraphs, keyed by vertex mask."""

    def __init__(self, g: Graph) -> None:
        _guard(g, MAX_VERTICES)
        self.g = g
        self.full = (1 << g.n) - 1
        self.nbr = [sum(1 << w for w in g.adj[v]) for v in g.vertices]
        self.memo: dict[int, int] = {0: 0}

    def nu(self, mask: int) -> int:
        got = self.memo.get(mask)
        if got is not None:
            return got
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        best = self.nu(rest)
        cand = self.nbr[v] & rest
        while cand:
            low = cand & -cand
            cand ^= low
            best = max(best, 1 + self.nu(rest & ~low))
        self.memo[mask] = best
        return best

    def matching(self, mask: int) -> list[tuple[int, int]]:
        out = []
        while mask:
            target = self.nu(mask)
            v = (mask & -mask).bit_length() - 1
            rest = mask & ~(1 << v)
            if self.nu(rest) == target:
                mask = rest
                continue
            cand = self.nbr[v] & rest
            while cand:
                low = cand & -cand
                cand ^= low
                if 1 + self.nu(rest & ~low) == target:
                    w = low.bit_length() - 1
                    out.append((v, w))
                    mask = rest & ~low
                    break
        return out

    def without(self, *vs: int) -> int:
        mask = self.full
        for v in vs:
            mask &= ~(1 << v)
        return mask


def brute_max_matching(g: Graph) -> Matching:
    e = _Enumerator(g)
    return Matching.from_edges(g.n, e.matching(e.full))


def brute_deficiency(g: Graph) -> int:
    e = _Enumerator(g)
    return g.n - 2 * e.nu(e.full)


def brute_exposable(g: Graph) -> frozenset[int]:
    e = _Enumerator(g)
    nu = e.nu(e.full)
    return frozenset(v for v in g.vertices if e.nu(e.without(v)) == nu)


def brute_allowed_edges(g: Graph) -> frozenset[tuple[int, int]]:
    e = _Enumerator(g)
    nu = e.nu(e.full)
    return frozenset((u, v) for u, v in g.edges if e.nu(e.without(u, v)) == nu - 1)


def brute_is_factor_critical(g: Graph) -> bool:
    if g.n % 2 == 0:
        return False
    e = _Enumerator(g)
    half = (g.n - 1) // 2
    return all(e.nu(e.without(v)) == half for v in g.vertices)


@dataclass(frozen=True)
class BruteGE:
    d_set: frozenset[int]
    a_set: frozenset[int]
    c_set: frozenset[int]


def brute_gallai_edmonds(g: Graph) -> BruteGE:
    d = brute_exposable(g)
    a = neighbors(g, d)
    return BruteGE(d, a, frozenset(g.vertices) - d - a)


def brute_factor_components(g: Graph) -> list[frozenset[int]]:
    """Components of the allowed-edge subgraph, by minimum vertex."""
    parent = list(g.vertices)

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in brute_allowed_edges(g):
        parent[find(u)] = find(v)
    groups: dict[int, set[int]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(s) for s in groups.values()), key=min)


# -- barriers ---------------------------------------------------------------


def _components_of_mask(nbr: list[int], mask: int) -> list[int]:
    comps = []
    while mask:
        low = mask & -mask
        comp = low
        frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = nbr[b.bit_length() - 1] & mask & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        mask &= ~comp
    return comps


@dataclass(frozen=True)
class BruteBarriers:
    deficiency: int
    barriers: frozenset[frozenset[int]]
    odd_maximal: frozenset[frozenset[int]]
    maximal: frozenset[frozenset[int]]


def _mask_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def brute_barriers(g: Graph) -> BruteBarriers:
    """All barriers by scanning every vertex subset.

    The deficiency is taken as the maximum of ``q(X) - |X|`` (Berge), so no
    matching code is involved.  Odd-maximality and maximality are decided
    by looking for barrier supersets directly.
    """
    _guard(g, MAX_BARRIER_VERTICES)
    nbr = [sum(1 << w for w in g.adj[v]) for v in g.vertices]
    full = (1 << g.n) - 1
    score: dict[int, int] = {}
    dx: dict[int, int] = {}
    for x in range(full + 1):
        odd = [c for c in _components_of_mask(nbr, full & ~x) if bin(c).count("1") % 2]
        score[x] = len(odd) - bin(x).count("1")
        dx[x] = sum(odd)
    best = max(score.values())
    bars = [x for x, s in score.items() if s == best]
    odd_max, maximal = [], []
    for x in bars:
        supers = [y for y in bars if y != x and y & x == x]
        if not supers:
            maximal.append(x)
        if not any((y & ~x) & ~dx[x] == 0 for y in supers):
            odd_max.append(x)
    conv = lambda xs: frozenset(_mask_set(x) for x in xs)  # noqa: E731
    return BruteBarriers(best, conv(bars), conv(odd_max), conv(maximal))


# -- basilica pieces ----------------------------------------------------------


def brute_component_order(g: Graph, max_components: int = 5) -> tuple[list[frozenset[int]], frozenset[tuple[int, int]]]:
    """The order between factor-components straight from its definition.

    Returns the components (indexed by position) and the reflexive set of
    pairs ``(i, j)`` with component ``i`` below component ``j``.
    """
    comps = brute_factor_components(g)
    if len(comps) > max_components:
        raise SizeGuardError(f"{len(comps)} factor-components exceed the limit {max_components}")
    pairs = {(i, i) for i in range(len(comps))}
    for i, j in itertools.permutations(range(len(comps)), 2):
        others = [k for k in range(len(comps)) if k not in (i, j)]
        found = False
        for r in range(len(others) + 1):
            for extra in itertools.combinations(others, r):
                x = set(comps[i]) | comps[j]
                for k in extra:
                    x |= comps[k]
                sub = induced_subgraph(g, x)
                pos = {v: t for t, v in enumerate(sub.ids)}
                shrunk = contract(sub.graph, [pos[v] for v in comps[i]])
                if brute_is_factor_critical(shrunk.graph):
                    found = True
                    break
            if found:
                break
        if found:
            pairs.add((i, j))
    return comps, frozenset(pairs)


def brute_kl(g: Graph) -> list[frozenset[int]]:
    """Classes of the Kotzig-Lovasz relation over ``V - D(G)``.

    Raises if the pairwise relation fails to be transitive.
    """
    e = _Enumerator(g)
    nu = e.nu(e.full)
    d = frozenset(v for v in g.vertices if e.nu(e.without(v)) == nu)
    comp_of = {}
    for idx, c in enumerate(brute_factor_components(g)):
        for v in c:
            comp_of[v] = idx
    verts = [v for v in g.vertices if v not in d]
    rel = {v: {v} for v in verts}
    for u, v in itertools.combinations(verts, 2):
        # def(G-u-v) > def(G)  <=>  nu(G-u-v) < nu(G) - 1
        if comp_of[u] == comp_of[v] and e.nu(e.without(u, v)) < nu - 1:
            rel[u].add(v)
            rel[v].add(u)
    for v in verts:
        for w in rel[v]:
            if rel[w] != rel[v]:
                raise AssertionError(f"relation not transitive at {v}, {w}")
    return sorted({frozenset(s) for s in rel.values()}, key=min)


# -- alternating paths and ears -------------------------------------------------


def alternating_paths(g: Graph, m: Matching, s: int, within: Sequence[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Every simple path starting at ``s`` (inside ``within`` if given) that
    has no two consecutive non-matching edges, the single vertex included.

    Paths with two consecutive non-matching edges leave an internal vertex
    uncovered and are never alternating, so nothing relevant is pruned.
    """
    _guard(g, MAX_VERTICES)
    allowed = set(g.vertices if within is None else within)
    if s not in allowed:
        return
    path = [s]
    on = {s}

    def rec(last_in_m: bool | None) -> Iterator[tuple[int, ...]]:
        yield tuple(path)
        v = path[-1]
        for w in g.adj[v]:
            if w in on or w not in allowed:
                continue
            in_m = m.mate[v] == w
            if last_in_m is False and not in_m:
                continue
            path.append(w)
            on.add(w)
            yield from rec(in_m)
            path.pop()
            on.discard(w)

    yield from rec(None)


@dataclass(frozen=True)
class Reach:
    """Targets of alternating paths out of a fixed start vertex ``s``."""

    forwarding_from: frozenset[int]  # t with an M-forwarding path s -> t
    forwarding_to: frozenset[int]  # t with an M-forwarding path t -> s
    saturated: frozenset[int]
    exposed: frozenset[int]


def alternating_reach(g: Graph, m: Matching, s: int, within: Sequence[int] | None = None) -> Reach:
    fwd_from, fwd_to, sat, exp = set(), set(), set(), set()
    for p in alternating_paths(g, m, s, within):
        k = classify_path(g, m, p)
        if k.kind is PathKind.FORWARDING:
            if k.start == s:
                fwd_from.add(k.end)
            if k.end == s:
                fwd_to.add(k.start)
        elif k.kind is PathKind.SATURATED:
            sat.add(p[-1])
        elif k.kind is PathKind.EXPOSED:
            exp.add(p[-1])
    return Reach(frozenset(fwd_from), frozenset(fwd_to), frozenset(sat), frozenset(exp))


def alternating_path_exists(g: Graph, m: Matching, s: int, t: int, kind: PathKind) -> bool:
    """For ``FORWARDING`` the path must run from ``s`` to ``t``."""
    r = alternating_reach(g, m, s)
    if kind is PathKind.FORWARDING:
        return t in r.forwarding_from
    if kind is PathKind.SATURATED:
        return t in r.saturated
    if kind is PathKind.EXPOSED:
        return t in r.exposed
    raise ValueError(f"unsupported kind {kind}")


@dataclass(frozen=True)
class Ear:
    vertices: tuple[int, ...]  # path order; a circuit repeats its end last
    ends: frozenset[int]
    circuit: bool

    @property
    def has_internal(self) -> bool:
        return len(self.vertices) > (3 if self.circuit else 2)


def enumerate_m_ears(g: Graph, m: Matching, x: Sequence[int]) -> list[Ear]:
    """All M-ears relative to ``x``: single edges inside ``x`` and ears whose
    part outside ``x`` is an M-saturated path attached by non-matching edges."""
    _guard(g, MAX_EAR_VERTICES)
    xs = g.check_vertices(x)
    ears = [Ear((u, v), frozenset((u, v)), False) for u, v in g.edges if u in xs and v in xs]
    outside = [v for v in g.vertices if v not in xs]
    for a in outside:
        for q in alternating_paths(g, m, a, outside):
            if len(q) < 2 or q[0] > q[-1]:
                continue
            if classify_path(g, m, q).kind is not PathKind.SATURATED:
                continue
            b = q[-1]
            for u in g.adj[a]:
                if u not in xs or m.mate[a] == u:
                    continue
                for w in g.adj[b]:
                    if w not in xs or m.mate[b] == w:
                        continue
                    if u == w:
                        ears.append(Ear((u, *q, u), frozenset((u,)), True))
                    else:
                        ears.append(Ear((u, *q, w), frozenset((u, w)), False))
    return ears
