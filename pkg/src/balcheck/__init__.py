"""balcheck: balanced 0/1 matrices, diamond-free graphs, multisuns,
sunwords and Dyck paths, with certified recognition and enumeration of
minimally unbalanced diamond-free graphs."""

from .graph_core import (
    Graph,
    Hole,
    canonical_form,
    are_isomorphic,
    cycle_graph,
    complete_graph,
    cycle_with_cliques,
    find_hole,
    induced_subgraph,
    is_diamond_free,
    maximal_cliques,
)
from .matrix import (
    OddCycleCertificate,
    ZeroOneMatrix,
    clique_matrix,
    intersection_graph,
    is_balanced,
    is_conformal,
    is_linear,
    min_odd_cycle_order,
    up_matrix,
    verify_odd_cycle_certificate,
)
from .multisun import (
    Multisun,
    NConditionReport,
    PathReport,
    check_n_conditions,
    decompose_hole,
    even_contract,
    even_subdivide,
    is_hoh_free,
    recognize_multisun,
    rim_segments,
    standardize,
    sub_multisun,
    why_not_multisun,
)
from .words import (
    CyclicWord,
    LinearWord,
    canonicalize,
    check_parity,
    cyclic_equal,
    find_jump,
    induced_order,
    is_s_word,
    is_sunword,
    opposite,
    pattern,
    project,
    standard_multisun,
    word_of_multisun,
)
from .dyck import (
    DyckPath,
    DyckWord,
    WeightedDyckPath,
    catalan,
    dyck_to_sunword,
    enumerate_dyck,
    enumerate_sunwords,
    path_to_word,
    sunword_to_dyck,
    word_to_path,
)
from .recognition import (
    CliquePerfReport,
    DiamondError,
    DisagreementError,
    Verdict,
    alpha_c,
    balanced_df,
    balanced_linear,
    enumerate_min_unbalanced,
    find_unbalanced_witness,
    is_clique_perfect,
    is_minimally_unbalanced_df,
    is_minimally_unbalanced_oracle,
    tau_c,
)

__version__ = "0.1.0"
