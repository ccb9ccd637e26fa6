"""Canonical matching-theoretic decompositions of undirected graphs."""

from .barriers import (
    Barrier,
    BarrierKind,
    BarrierLimitExceeded,
    barrier_from_ideal,
    barrier_intersection,
    classify_barrier,
    decompose_barrier,
    enumerate_maximal_barriers,
    enumerate_odd_maximal_barriers,
    is_barrier,
)
from .basilica import BasilicaDecomposition, ComponentOrder, KLClass, basilica, component_order, coupled_and_up_sets, kl_partition
from .bipartite import Bipartition, bipartition, block_triangular_form, btf_from_pattern, check_fw_correspondence, dm_order_bipartite
from .dmposet import DmComponent, Ideal, TfrPoset, build_tfr_poset, dm_components, forbidden_relation, hasse, ideal_flags, order_relation, star_forbidden
from .factor import FactorComponent, factor_components
from .graph import Graph, GraphError, Matching, PathKind, classify_path, contract, delete_vertices, induced_subgraph, odd_components
from .io import parse_edge_list, read_matrix_market
from .matching import GallaiEdmondsPartition, allowed_edges, deficiency, exposable_vertices, gallai_edmonds, is_factor_critical, matching_number, maximum_matching

__all__ = [name for name in dir() if not name.startswith("_")]
