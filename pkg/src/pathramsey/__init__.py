"""Exact (t-1)-chromatic Ramsey numbers for paths, with certificates."""
from .coloring import (
    ColorMergeMap,
    EdgeColoring,
    WitnessPath,
    build_coloring,
    induced_subgraph,
    merge_colors,
    validate_witness,
)
from .errors import CapabilityError, InternalInvariantError, PreconditionError
from .extractor import ExtractionStats, extract, max_degree_pivot
from .extremal import PartitionSpec, block_of, construct_extremal, partition_sizes
from .formula import Branch, BranchTrace, TargetLengths, p_value, r_value, s_value
from .oracle import (
    SearchReport,
    Verdict,
    exhaustive_verify_upper,
    is_valid_lower_witness,
    longest_avoiding_path,
    random_coloring,
)

__version__ = "0.1.0"
