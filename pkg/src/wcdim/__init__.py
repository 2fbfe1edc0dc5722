"""Well-covered dimension of finite simple graphs over every field characteristic."""
from wcdim._backend import BACKEND
from wcdim.constructions import NamedGraph, g7, g8, g10, g_k2, gn_family, graph_for_prime, h_of
from wcdim.core import WcdimProfile, associated_matrix, wcdim, wcdim_profile, well_covered_space_basis
from wcdim.graph import (
    Graph,
    Graph6Error,
    canonical_form,
    closed_neighborhoods_equal,
    complement,
    contract_clique,
    induced_subgraph,
    inflate_vertex,
    parse_graph6,
    to_graph6,
)
from wcdim.linalg import GF, QQ, FieldSpec, IntMatrix, invariant_factors, nullspace_basis, rank
from wcdim.mis import MisList, brute_force_mis, is_maximal_independent, is_well_covered, maximal_independent_sets
from wcdim.search import ScanRecord, ScanSummary, generate_all_graphs, min_order_report, scan_stream

__version__ = "0.1.0"
