"""Spectral extremal toolkit for induced subgraphs of the hypercube."""

from .compress import (
    CompressionStep,
    WeightVector,
    binary_compression,
    compress_family_uv,
    compress_vector_uv,
    fully_compress,
    is_compressed,
    rayleigh,
)
from .core import (
    VertexFamily,
    binary_compare,
    degree_profile,
    hamming_ball,
    induced_edges,
    initial_segment,
    star_family,
    vertex_of,
    vertex_str,
)
from .search import (
    PartitionCertificate,
    SearchResult,
    build_partition,
    enumerate_compressed,
    max_lambda1,
    verify_partition,
    verify_star_regime,
)
from .spectral import (
    SpectralResult,
    classic_bounds,
    count_p2_c4,
    hamming_lambda1_exact,
    hamming_upper_bound,
    hamming_walk_lower_bound,
    lambda1,
    level_bound,
    limit_constant,
    star_value,
    walk_trace_bound,
)
from .subcubes import (
    count_subcubes,
    initial_count,
    subcube_bound_integer,
    subcube_bound_smooth,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
