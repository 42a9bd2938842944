"""Exact universal irredundance on small graphs.

Enumerates blocking families (forts, neighborhoods, edges), evaluates the
five closure operators, computes the four-parameter chain
xir <= X <= X_upper <= XIR for standard, PSD, and skew forcing, domination,
and vertex cover, builds token addition/removal reconfiguration graphs,
and ships exhaustive verification suites.
"""

from .blocking import (
    BlockingFamily,
    Provenance,
    designated_family,
    enumerate_family,
    is_connected_psd_fort,
    is_psd_fort,
    is_skew_fort,
    is_standard_fort,
    minimal_closed_neighborhoods,
    minimal_members,
)
from .closures import (
    ClosureRule,
    close,
    derived_blocking_family,
    generators,
    is_x_set,
)
from .graphs import (
    Graph,
    all_labeled_graphs,
    build,
    closed_nbhd,
    closed_nbhd_set,
    comb,
    complete,
    complete_bipartite,
    complete_multipartite,
    components,
    cycle,
    disjoint_union,
    empty,
    family,
    induced,
    isomorphism,
    join,
    mask_from,
    min_degree,
    parse_graph6,
    path,
    star,
    to_graph6,
    vertex_list,
)
from .irredundance import (
    ChainReport,
    ParameterReport,
    aux_domination,
    domination_chain,
    enumerate_maximal_xir_sets,
    is_maximal_xir_set,
    is_xir_set,
    private_set,
    report,
    vcir_to_cover,
)
from .tar import (
    KIND_X_SETS,
    KIND_XIR_SETS,
    TarGraph,
    build_tar,
    export_dot,
    independence_tar,
    tar_isomorphic,
)
from .verify import (
    SUITE_NAMES,
    SuiteResult,
    generate_trees,
    run_suite,
    verify_family_tables,
    verify_figures,
)

__version__ = "0.1.0"
