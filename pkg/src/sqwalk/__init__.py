"""Staggered quantum walks on d x d lattices with glued boundaries.

The lattice can be closed into a torus, Klein bottle, real projective plane
or sphere.  Each walk step applies four matching Hamiltonians; the same
matchings drive a Trotterized continuous-time walk and a classical random
walk.
"""

from .evolution import (
    NormDriftError,
    StepParams,
    apply_matching,
    basis_state,
    block_unitary,
    run_ctqw,
    run_rw,
    run_sqw,
    rw_step,
    sqw_step,
    stochastic_block,
    suzuki_bound,
)
from .lattice import LatticeSpec, Scheme, Topology, adjacency, coords_of, site_of
from .metrics import (
    MetricRecord,
    MetricSeries,
    coherence_dense,
    coherence_pure,
    normalize_series,
    probability_distribution,
    shannon_entropy,
)
from .tessellation import (
    Matching,
    StaggeredSet,
    build_1d_even_odd,
    build_1d_odd_even,
    build_staggered_set,
    matching_to_dense,
    validate_set,
)

__version__ = "0.1.0"
