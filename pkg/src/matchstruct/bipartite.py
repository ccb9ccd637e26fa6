"""The classical Dulmage-Mendelsohn decomposition of bipartite graphs and
block triangular forms of sparse patterns.

For a side ``W`` the order over factor-components is generated by
``G1 <=_W G2`` whenever some edge joins ``W ∩ V(G2)`` to ``V(G1) - W``.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Literal

from .basilica import BasilicaDecomposition, basilica
from .dmposet import TfrPoset, _closure, _pairs, from_decomposition
from .graph import Graph, GraphError

Side = Literal["A", "B"]


class NotBipartiteError(GraphError):
    pass


class BtfError(ValueError):
    """Unusable matrix input."""


class BtfInvariantError(RuntimeError):
    """The computed permutation is not block upper triangular."""


@dataclass(frozen=True)
class Bipartition:
    a_set: frozenset[int]
    b_set: frozenset[int]

    def side(self, w: Side) -> frozenset[int]:
        if w == "A":
            return self.a_set
        if w == "B":
            return self.b_set
        raise ValueError(f"side must be 'A' or 'B', not {w!r}")


def bipartition(g: Graph) -> Bipartition:
    """Two-colouring by BFS; the smallest vertex of every connected
    component goes to ``A``."""
    colour = [-1] * g.n
    for s in g.vertices:
        if colour[s] != -1:
            continue
        colour[s] = 0
        dq = deque([s])
        while dq:
            v = dq.popleft()
            for w in g.adj[v]:
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    dq.append(w)
                elif colour[w] == colour[v]:
                    raise NotBipartiteError(f"odd cycle through edge ({v}, {w})")
    return Bipartition(
        frozenset(v for v in g.vertices if colour[v] == 0),
        frozenset(v for v in g.vertices if colour[v] == 1),
    )


def _check_bipartition(g: Graph, bp: Bipartition) -> None:
    if bp.a_set & bp.b_set or len(bp.a_set | bp.b_set) != g.n:
        raise GraphError("colour classes must partition the vertex set")
    for u, v in g.edges:
        if (u in bp.a_set) == (v in bp.a_set):
            raise NotBipartiteError(f"edge ({u}, {v}) lies inside one colour class")


@dataclass(frozen=True)
class BipartiteDmPoset:
    components: tuple[int, ...]
    order: frozenset[tuple[int, int]]  # reflexive
    w: Side
    up: tuple[int, ...] = field(repr=False)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)


def _immediate(b: BasilicaDecomposition, w_set: frozenset[int]) -> list[int]:
    # G1 <=_W G2 when an edge runs from W ∩ V(G2) to V(G1) - W
    comp_of = b.structure.comp_of
    succ = [1 << c.id for c in b.components]
    for u, v in b.graph.edges:
        for x, y in ((u, v), (v, u)):
            if x in w_set and y not in w_set:
                succ[comp_of[y]] |= 1 << comp_of[x]
    return succ


def _order(b: BasilicaDecomposition, bp: Bipartition, w: Side) -> BipartiteDmPoset:
    succ = _immediate(b, bp.side(w))
    up = _closure(succ)
    return BipartiteDmPoset(tuple(c.id for c in b.components), _pairs(up), w, tuple(up))


def dm_order_bipartite(g: Graph, w: Side, bp: Bipartition | None = None) -> BipartiteDmPoset:
    """The order ``<=_W`` over all factor-components (reflexive-transitive
    closure; a cycle raises, so the result is always a partial order)."""
    bp = bp or bipartition(g)
    _check_bipartition(g, bp)
    return _order(basilica(g), bp, w)


def ainconst(b: BasilicaDecomposition, bp: Bipartition, w: Side) -> list[int]:
    """Inconsistent factor-components with a vertex of ``D(G)`` off the ``W`` side."""
    ws = bp.side(w)
    d = b.ge.d_set
    return [c.id for c in b.components if any(v in d and v not in ws for v in c.vertices)]


@dataclass(frozen=True)
class FwReport:
    w: Side
    mapping: dict[int, int]  # factor-component id -> DM element id
    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems


def check_fw_correspondence(g: Graph, w: Side, bp: Bipartition | None = None) -> FwReport:
    """Check that ``C -> D(V(C) ∩ W)`` is an order isomorphism between the
    consistent and ``W``-side inconsistent components under ``<=_W`` and the
    matching DM components under the general order, together with the
    bipartite facts on inconsistent components and Kotzig-Lovasz classes."""
    bp = bp or bipartition(g)
    _check_bipartition(g, bp)
    b = basilica(g)
    poset = from_decomposition(b)
    return _fw_report(b, poset, bp, w)


def _fw_report(b: BasilicaDecomposition, poset: TfrPoset, bp: Bipartition, w: Side) -> FwReport:
    ws = bp.side(w)
    other: Side = "B" if w == "A" else "A"
    problems: list[str] = []
    order = _order(b, bp, w)
    dual = _order(b, bp, other)
    for i, j in order.order:
        if not dual.leq(j, i):
            problems.append(f"<=_{w} has ({i}, {j}) but <=_{other} lacks ({j}, {i})")
    for i, j in dual.order:
        if not order.leq(j, i):
            problems.append(f"<=_{other} has ({i}, {j}) but <=_{w} lacks ({j}, {i})")

    inc_w = set(ainconst(b, bp, w))
    inc_other = set(ainconst(b, bp, other))
    if inc_w & inc_other:
        problems.append(f"components {sorted(inc_w & inc_other)} lie on both inconsistent sides")
    # components whose off-side D vertices sit on the W side are minimal for <=_other
    for c in inc_w:
        below = [i for i in range(len(b.components)) if i != c and dual.leq(i, c)]
        if below:
            problems.append(f"component {c} is not minimal for <=_{other}: {below} lie below it")

    for h in b.components:
        bases = sorted(cl.base for cl in b.classes if cl.host == h.id)
        if h.consistent:
            want = sorted(t for t in (
                tuple(v for v in h.vertices if v in bp.a_set),
                tuple(v for v in h.vertices if v in bp.b_set),
            ))
        else:
            side = w if h.id in inc_w else other
            want = [tuple(v for v in h.vertices if v in bp.side(side))]
        if bases != want:
            problems.append(f"component {h.id} has classes {bases}, expected {want}")
    strict = [(i, j) for i, up in enumerate(b.order.uppers) for j in up]
    if strict:
        problems.append(f"factor-components are comparable in the basilica order: {strict}")

    domain = [h.id for h in b.components if h.consistent or h.id in inc_w]
    element_of = {(e.host, e.base): e.id for e in poset.elements}
    mapping: dict[int, int] = {}
    for h in domain:
        key = (h, tuple(v for v in b.components[h].vertices if v in ws))
        if key not in element_of:
            problems.append(f"no DM component with base {key[1]} in component {h}")
        else:
            mapping[h] = element_of[key]
    dset = set(domain)
    target = {e.id for e in poset.elements if e.host in dset and set(e.base) <= ws}
    if set(mapping.values()) != target or len(set(mapping.values())) != len(mapping):
        problems.append(f"map onto {sorted(set(mapping.values()))} is not a bijection onto {sorted(target)}")
    for c1 in mapping:
        for c2 in mapping:
            if order.leq(c1, c2) != poset.leq(mapping[c1], mapping[c2]):
                problems.append(f"order disagrees on components ({c1}, {c2})")
    return FwReport(w, mapping, tuple(problems))


# -- block triangular form ------------------------------------------------------


@dataclass(frozen=True)
class BtfReport:
    shape: tuple[int, int]
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    coarse: dict[str, tuple[tuple[int, ...], tuple[int, ...]]]
    fine_blocks: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def diagonal_blocks(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Horizontal block, fine square blocks, vertical block (empty ones dropped)."""
        h, v = self.coarse["horizontal"], self.coarse["vertical"]
        blocks = [h, *self.fine_blocks, v]
        return [blk for blk in blocks if blk[0] or blk[1]]


def pattern_graph(nrows: int, ncols: int, entries: Iterable[tuple[int, int]]) -> Graph:
    """Rows become vertices ``0..nrows-1`` and columns ``nrows..nrows+ncols-1``."""
    edges = set()
    for i, j in entries:
        if not (0 <= i < nrows and 0 <= j < ncols):
            raise BtfError(f"entry ({i}, {j}) outside a {nrows}x{ncols} matrix")
        edges.add((i, nrows + j))
    return Graph.from_edges(nrows + ncols, sorted(edges))


def btf_from_pattern(nrows: int, ncols: int, entries: Iterable[tuple[int, int]]) -> BtfReport:
    entries = list(entries)
    if nrows == 0 or ncols == 0 or not entries:
        raise BtfError("empty matrix")
    g = pattern_graph(nrows, ncols, entries)
    b = basilica(g)
    ge = b.ge

    def split(vs: Iterable[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        vs = sorted(vs)
        return tuple(v for v in vs if v < nrows), tuple(v - nrows for v in vs if v >= nrows)

    # wide block: rows in A(G) with exposable columns; tall block: the reverse
    horizontal = split([v for v in ge.a_set if v < nrows] + [v for v in ge.d_set if v >= nrows])
    vertical = split([v for v in ge.d_set if v < nrows] + [v for v in ge.a_set if v >= nrows])
    square = split(ge.c_set)

    comp_of = b.structure.comp_of
    consistent = [c.id for c in b.components if c.consistent]
    # G1 must precede G2 when a row of G1 has an entry in a column of G2
    succ: dict[int, set[int]] = {c: set() for c in consistent}
    for u, v in g.edges:
        cu, cv = comp_of[u], comp_of[v]
        if cu != cv and cu in succ and cv in succ:
            succ[cu].add(cv)
    indeg = {c: 0 for c in consistent}
    for c in consistent:
        for d in succ[c]:
            indeg[d] += 1

    def min_col(c: int) -> int:
        return min(v for v in b.components[c].vertices if v >= nrows)

    heap = [(min_col(c), c) for c in consistent if indeg[c] == 0]
    heapq.heapify(heap)
    ordered = []
    while heap:
        _, c = heapq.heappop(heap)
        ordered.append(c)
        for d in succ[c]:
            indeg[d] -= 1
            if indeg[d] == 0:
                heapq.heappush(heap, (min_col(d), d))
    if len(ordered) != len(consistent):
        raise BtfInvariantError("square part has cyclic block dependencies")
    fine = tuple(split(b.components[c].vertices) for c in ordered)
    row_perm = (*horizontal[0], *(r for blk in fine for r in blk[0]), *vertical[0])
    col_perm = (*horizontal[1], *(c for blk in fine for c in blk[1]), *vertical[1])
    report = BtfReport(
        shape=(nrows, ncols),
        row_perm=row_perm,
        col_perm=col_perm,
        coarse={"horizontal": horizontal, "square": square, "vertical": vertical},
        fine_blocks=fine,
    )
    bad = btf_violations(report, entries)
    if bad:
        raise BtfInvariantError(f"entries below the block diagonal: {bad[:5]}")
    return report


def btf_violations(report: BtfReport, entries: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Entries lying strictly below the diagonal blocks of ``report``."""
    row_blk: dict[int, int] = {}
    col_blk: dict[int, int] = {}
    for k, (rows, cols) in enumerate(report.diagonal_blocks()):
        for r in rows:
            row_blk[r] = k
        for c in cols:
            col_blk[c] = k
    return [(i, j) for i, j in entries if row_blk[i] > col_blk[j]]


def block_triangular_form(path: str) -> BtfReport:
    """Block triangular form of the pattern stored in a Matrix Market file."""
    from .io import read_matrix_market

    nrows, ncols, entries = read_matrix_market(path)
    return btf_from_pattern(nrows, ncols, entries)
