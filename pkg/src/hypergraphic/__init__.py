"""Constructive realizations of dense 3-uniform hypergraph degree sequences."""

from .bipartite import (
    almost_regular_bipartite,
    d_plus_almost_regular_bipartite,
    havel_hakimi_bipartite,
    havel_hakimi_simple,
)
from .core import (
    BipartiteGraph,
    Hypergraph,
    HypergraphError,
    InvariantViolation,
    NotGraphic,
    OutOfDomain,
    ShapeMismatch,
    TripartiteDegreeSequence,
    TripartiteHypergraph,
    Verification,
    VertexRef,
    complement_tripartite,
    degree_sequence,
    degree_sequence_of,
    degree_sequence_of_tripartite,
    verify_realization,
)
from .flips import (
    FlipError,
    FlipStep,
    FlipTrace,
    apply_balancing_flip,
    balancing_flip_sequence,
    transform_to_target,
)
from .formats import (
    ParseError,
    emit_hypergraph,
    gen_random_sequence,
    parse_degree_file,
    parse_degree_text,
    parse_hypergraph_text,
    read_hypergraph,
    write_hypergraph,
)
from .general import (
    PhasePlan,
    general_bounds,
    phase1_satisfy_extras,
    phase2_split_and_parity,
    phase3_equalize,
    phase4_tripartite,
    realize_hypergraph,
)
from .oracle import OracleResult, conjectured_constant, cubic_positive_roots, oracle_general, oracle_tripartite
from .regular import (
    AlmostRegularSpec,
    almost_regular_tripartite,
    clear_intermediate_vertices,
    regular_tripartite,
)
from .tripartite import (
    CaseTag,
    ExtremeSpec,
    extreme_spec_for,
    large_degree,
    realize_extreme,
    realize_tripartite,
    small_degree,
)

__version__ = "0.1.0"
