"""Shared fixture graphs and test corpora."""

from __future__ import annotations

import random
from functools import lru_cache

import networkx as nx
from hypothesis import strategies as st

from matchstruct.graph import Graph

TRI = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
STAR3 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
P4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
BIP = Graph.from_edges(4, [(0, 1), (2, 3), (0, 3)])


def from_nx(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h, ordering="sorted")
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def _named() -> dict[str, Graph]:
    two_tri = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    tri_pendant = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    # blossom hanging off a path, with a second odd cycle behind it
    mixed = Graph.from_edges(
        9, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 2), (4, 5), (5, 6), (6, 7), (7, 8), (8, 6)]
    )
    return {
        "tri": TRI,
        "star3": STAR3,
        "p4": P4,
        "bip": BIP,
        "k1": Graph.from_edges(1, []),
        "empty": Graph.from_edges(0, []),
        "isolated3": Graph.from_edges(3, []),
        "k4": from_nx(nx.complete_graph(4)),
        "k5": from_nx(nx.complete_graph(5)),
        "c5": from_nx(nx.cycle_graph(5)),
        "c6": from_nx(nx.cycle_graph(6)),
        "p7": from_nx(nx.path_graph(7)),
        "petersen": from_nx(nx.petersen_graph()),
        "k23": from_nx(nx.complete_bipartite_graph(2, 3)),
        "cube": from_nx(nx.hypercube_graph(3)),
        "grid3": from_nx(nx.grid_2d_graph(3, 3)),
        "wheel5": from_nx(nx.wheel_graph(6)),
        "two_triangles": two_tri,
        "triangle_pendant": tri_pendant,
        "mixed": mixed,
    }


NAMED = _named()


@lru_cache(maxsize=None)
def atlas() -> tuple[Graph, ...]:
    """Every graph on at most 7 vertices up to isomorphism (1253 graphs)."""
    return tuple(from_nx(h) for h in nx.graph_atlas_g())


@lru_cache(maxsize=None)
def connected_atlas() -> tuple[Graph, ...]:
    return tuple(g for g, h in zip(atlas(), nx.graph_atlas_g()) if g.n and nx.is_connected(h))


def random_graphs(count: int, max_n: int, seed: int, min_n: int = 1) -> tuple[Graph, ...]:
    """``count`` graphs with ``n`` uniform in ``[min_n, max_n]`` and a random
    edge density per graph."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.random()
        out.append(Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]))
    return tuple(out)


@lru_cache(maxsize=None)
def random_small() -> tuple[Graph, ...]:
    """1000 random graphs with at most 8 vertices."""
    return random_graphs(1000, 8, seed=20240501)


@lru_cache(maxsize=None)
def random_medium() -> tuple[Graph, ...]:
    """500 random graphs with at most 10 vertices."""
    return random_graphs(500, 10, seed=20240502)


@lru_cache(maxsize=None)
def corpus() -> tuple[Graph, ...]:
    """Connected atlas graphs plus the small random graphs."""
    return connected_atlas() + random_small()


@lru_cache(maxsize=None)
def full_corpus() -> tuple[Graph, ...]:
    """Every test graph: the whole atlas and both random families."""
    return atlas() + random_small() + random_medium()


@st.composite
def graphs(draw, max_n: int = 9) -> Graph:
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)
