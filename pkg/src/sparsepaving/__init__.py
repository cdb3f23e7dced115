"""Construction and census of sparse-paving matroids on {1, ..., n}."""

from .errors import AxiomError, DomainError, StarStarError
from .subsets import GroundSet, elements, enumerate_rsubsets, intersection_size, mask_of
from .matroid import (
    Matroid,
    RankRDecomposition,
    closure_of,
    decompose_rank_r,
    dual,
    is_paving,
    is_sparse_paving,
    matroid_from_bases,
    rank_of,
    sparse_from_circuits,
    uniform,
)
from .starstar import (
    StarStarReport,
    greedy_star_star,
    max_star_star_exact,
    satisfies_star_star,
    sparse_count_lower_bound,
    star_star_upper_bound,
)
from .partition import ShMatrix, StarPartition, build_matrix, build_partition, diagonal_class, gamma_count
from .maps import TaggedImage, gamma_map, iota, psi, psi_bar, zeta
from .census import CensusRow, enumerate_matroids, enumerate_sparse, verify_bounds

__version__ = "0.1.0"
