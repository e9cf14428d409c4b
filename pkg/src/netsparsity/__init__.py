"""Degree-based sparsity analytics for network graphs.

Computes the Gini index of a degree distribution and its generalization,
the sparsity index, which measures inequality against a configurable
reference total and so captures how far a graph sits from its fully
connected potential. Ships with Lorenz curves, power-law degree-frequency
construction, Havel-Hakimi realizability checks and realization, exact
transform deltas, and a CLI.
"""

from .graph_core import (
    Graph,
    InputFormatError,
    OrderedDegreeVector,
    add_edge,
    degree_vector,
    degree_vector_from_sequence,
    parse_edge_list,
)
from .metrics import (
    LorenzCurve,
    MetricsReport,
    ReferencePolicy,
    ReferenceTotal,
    ReferenceTotalError,
    build_report,
    edge_density,
    gini_index,
    gini_mad_oracle,
    lorenz_curve,
    rank_weighted_sum,
    resolve_reference_total,
    sparsity_index,
)
from .sequences import (
    DegreeFrequencyTable,
    PowerLawSpec,
    RealizationError,
    build_frequency_table,
    frequency_to_sequence,
    havel_hakimi_check,
    havel_hakimi_realize,
    normalization_constant,
    parse_degree_sequence,
    parse_frequency_table,
)
from .transforms import (
    TransformOutcome,
    append_zeros,
    clone_concat,
    enrich_entry,
    rising_tide,
    robin_hood,
    scale,
)

__version__ = "0.1.0"

__all__ = [
    "DegreeFrequencyTable",
    "Graph",
    "InputFormatError",
    "LorenzCurve",
    "MetricsReport",
    "OrderedDegreeVector",
    "PowerLawSpec",
    "RealizationError",
    "ReferencePolicy",
    "ReferenceTotal",
    "ReferenceTotalError",
    "TransformOutcome",
    "add_edge",
    "append_zeros",
    "build_frequency_table",
    "build_report",
    "clone_concat",
    "degree_vector",
    "degree_vector_from_sequence",
    "edge_density",
    "enrich_entry",
    "frequency_to_sequence",
    "gini_index",
    "gini_mad_oracle",
    "havel_hakimi_check",
    "havel_hakimi_realize",
    "lorenz_curve",
    "normalization_constant",
    "parse_degree_sequence",
    "parse_edge_list",
    "parse_frequency_table",
    "rank_weighted_sum",
    "resolve_reference_total",
    "rising_tide",
    "robin_hood",
    "scale",
    "sparsity_index",
]
