"""Gadget reductions and exact small-scale solvers for clustering hardness
constructions: min-max correlation clustering via flower/bouquet gadgets and
dissimilarity hierarchical clustering via a Gaussian-correlated product."""

from ._kernels import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .cc_engine import (
    DecodeFailure,
    FeasibleResult,
    LemmaReport,
    cc_opt_bruteforce,
    decode_coloring,
    disagreements,
    feasible_linf,
    find_two_coloring,
    is_two_colorable,
    lq_norm,
    verify_lemmas,
    yes_clustering,
)
from .cc_reduction import (
    Bouquet,
    Flower,
    GadgetLayout,
    RoleRecord,
    layout_role,
    parse_layout,
    reduce_cc,
    serialize_layout,
)
from .gaussian import gamma, gw_argmin, gw_curve, phi, phi_inv
from .generators import gen_h3, gen_lin2
from .hc_engine import (
    ExpansionReport,
    HardnessRatio,
    check_expansion,
    enumerate_trees,
    hardness_ratio,
    hc_opt_bruteforce,
    hc_value,
    no_case_single_bound,
    no_case_split_bound,
    yes_case_value_limit,
)
from .hc_reduction import (
    both_satisfied_probability,
    product_vertex_decode,
    product_vertex_id,
    reduce_hc_exact,
    sample_pairs,
    sat_fraction,
    yes_tree,
    yes_tree_level_bound,
)
from .instances import (
    Assignment,
    BinaryTree,
    Coloring,
    DisagreementsVector,
    Hypergraph3,
    Lin2Instance,
    ParseError,
    Partition,
    SignedGraph,
    ValidationError,
    WeightedGraph,
    parse_instance,
    serialize_instance,
)

__version__ = "0.1.0"
