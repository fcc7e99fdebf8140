"""Distance matrices and reconstruction of unrooted binary phylogenetic networks."""

from .distances import (
    Adjacency,
    Chain,
    MultisetMatrix,
    ShortestMatrix,
    adjacency,
    chains,
    cherries,
    multiset_matrix,
    shortest_matrix,
)
from .errors import *  # noqa: F401,F403
from .formats import format_matrix, format_network, parse_matrix, parse_network, read_matrix, read_network
from .isomorphism import canonical_network, certificate, is_isomorphic
from .level1 import find_pendant_chain, reconstruct_l1
from .level2 import build_cag, match_cag_patterns, reconstruct_l2
from .multiset import DistanceMultiset, multiset_shift, multiset_sum, partition_shifted
from .network import (
    Blob,
    Network,
    attach_leaf,
    blobs,
    collapse_pendant_blob,
    cut_edge_partition,
    cut_edges,
    delete_leaf,
    network_level,
    validate,
)
from .oracle import CollisionReport, EnumSpec, collision_scan, enumerate_networks, fixtures
from .small import reconstruct_l2_small_shortest
from .templates import BlobForm, expand_leaf_to_blob
from .trace import ReductionTrace

__version__ = "0.1.0"
