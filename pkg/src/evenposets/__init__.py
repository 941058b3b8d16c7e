"""Even posets of multigraphs with parallel edge bundles: shellability
machinery, simplicial homology, classification of the shellable graphs,
and Betti numbers of the associated real toric spaces.
"""

from .classify import (
    FamilyTag,
    InconclusiveSearch,
    family_of,
    family_structure,
    in_g_star,
    non_shellable_witness,
    p_tilde,
    p_tilde_prime,
    s_tilde,
    s_tilde_prime,
    t_tilde,
    t_tilde_prime,
)
from .evenposet import (
    NULL_POSET,
    EvenPoset,
    canonical_labeling,
    chain_length_spectrum,
    cover_type,
    even_poset,
    expected_spectrum,
    odd_poset,
)
from .homology import (
    HomologySummary,
    SimplicialComplex,
    SizeBudgetExceeded,
    integral_reduced_homology,
    wedge_summary,
)
from .multigraph import (
    Bundle,
    Multigraph,
    PiGraph,
    format_graph,
    parse_graph,
)
from .poset import (
    BoundedPoset,
    Poset,
    from_subsets,
    interval,
    mobius_invariant,
    order_complex,
    product,
)
from .shellability import (
    AtomOrdering,
    ExplicitChainLabeling,
    FacetBudgetExceeded,
    RaoLabeling,
    SearchBudgetExceeded,
    ShellingOrder,
    atom_ordering,
    cl_labeling_from_rao,
    even_poset_labeling,
    expected_falling_profile,
    falling_chains,
    falling_counts_by_length,
    falling_step_signature,
    find_recursive_atom_ordering,
    is_shellable_bruteforce,
    is_shelling_order,
    lex_order,
    threshold_falling_test,
    verify_cl_labeling,
    verify_recursive_atom_ordering,
)
from .toric import (
    CohomologySummary,
    TubingComplex,
    betti_general,
    betti_simple_path,
    betti_tilde_path2,
    catalan,
    falling_count_tilde_path2,
    h_vector,
    integral_cohomology,
    odd_betti_tilde_path2,
    table4,
    tubing_complex,
)

__version__ = "0.1.0"
