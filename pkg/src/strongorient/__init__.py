"""Random strong orientations of graphs at desk scale.

Exact Cheeger constants and normalized-Laplacian spectra, exhaustive
orientation censuses, seeded Monte Carlo orientation sampling, graph
generators including the clique-cluster tightness construction, exposure
sequence combinatorics, sink-event sieve sums, and the closed-form
probability bounds that tie them together.
"""

from .bounds import (
    BoundTable,
    HypothesisReport,
    build_bound_table,
    check_hypotheses,
    failure_bound,
)
from .errors import (
    DomainError,
    NumericError,
    ParseError,
    SamplingError,
    SizeLimitError,
    StrongOrientError,
)
from .exposure import (
    ExposureSequence,
    RootedTreeShape,
    catalan,
    enumerate_exposure_sequences,
    lemma_checks,
    sequence_to_dyck,
    sequence_to_shape,
    tree_to_sequence,
)
from .generators import (
    GenSpec,
    barbell,
    build_graph,
    complete,
    cycle,
    erdos_renyi,
    lollipop,
    parse_genspec,
    path,
    random_regular,
    standard,
    tight_example,
)
from .graph import (
    CheegerReport,
    Graph,
    VertexSubset,
    cheeger_constant_exact,
    cheeger_ratio,
    edge_boundary,
    is_two_edge_connected,
    load_graph,
    parse_graph,
    volume,
)
from .orientation import (
    MCEstimate,
    Orientation,
    OrientationCensus,
    SinkStats,
    cut_event_probability_exact,
    is_strongly_connected,
    mc_sink_statistics,
    mc_strong_probability,
    orientation_at,
    orientation_census,
    random_orientation,
    robbins_orientable,
    sink_count_expectation,
    strong_probability_exact,
    wilson_interval,
)
from .rng import OrientationStream, derive_seed, orientation_bit
from .sieve import (
    Example1Report,
    SieveReport,
    example1_experiment,
    sieve_sandwich,
    sieve_term,
    sink_probability,
)
from .spectral import (
    SpectrumReport,
    check_cheeger_inequality,
    edge_expansion_bound_check,
    normalized_laplacian,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "BoundTable",
    "CheegerReport",
    "DomainError",
    "Example1Report",
    "ExposureSequence",
    "GenSpec",
    "Graph",
    "HypothesisReport",
    "MCEstimate",
    "NumericError",
    "Orientation",
    "OrientationCensus",
    "OrientationStream",
    "ParseError",
    "RootedTreeShape",
    "SamplingError",
    "SieveReport",
    "SinkStats",
    "SizeLimitError",
    "SpectrumReport",
    "StrongOrientError",
    "VertexSubset",
    "barbell",
    "build_bound_table",
    "build_graph",
    "catalan",
    "check_cheeger_inequality",
    "check_hypotheses",
    "cheeger_constant_exact",
    "cheeger_ratio",
    "complete",
    "cut_event_probability_exact",
    "cycle",
    "derive_seed",
    "edge_boundary",
    "edge_expansion_bound_check",
    "enumerate_exposure_sequences",
    "erdos_renyi",
    "example1_experiment",
    "failure_bound",
    "is_strongly_connected",
    "is_two_edge_connected",
    "lemma_checks",
    "load_graph",
    "lollipop",
    "mc_sink_statistics",
    "mc_strong_probability",
    "normalized_laplacian",
    "orientation_at",
    "orientation_bit",
    "orientation_census",
    "parse_genspec",
    "parse_graph",
    "path",
    "random_orientation",
    "random_regular",
    "robbins_orientable",
    "sequence_to_dyck",
    "sequence_to_shape",
    "sieve_sandwich",
    "sieve_term",
    "sink_count_expectation",
    "sink_probability",
    "spectrum",
    "standard",
    "strong_probability_exact",
    "tight_example",
    "tree_to_sequence",
    "volume",
    "wilson_interval",
]
