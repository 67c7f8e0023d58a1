"""Balanced cuts and minimum bisections driven by tree decompositions."""

from .approxcut import ApproxCutResult, approximate_cut, compute_subtree_weights
from .engine import (
    CutReport,
    bound_value,
    doubling_step,
    exact_size_cut,
    exact_size_cut_linear,
    legible_bound,
    minimum_bisection,
    tricut_width,
)
from .graph import (
    Graph,
    Partition,
    cut_width,
    longest_path_in_tree,
    max_degree,
    relative_diameter,
)
from .labeling import (
    CircularIndex,
    PLabeling,
    build_plabeling,
    cluster_boundary_edges,
    decompose_by_node,
)
from .treedec import (
    TreeDecomposition,
    ValidityReport,
    WeightReport,
    heaviest_path,
    is_nonredundant_path,
    make_nonredundant,
    path_weight,
    restrict,
    tree_to_width1_td,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
