"""parhom: parity homomorphism counting to cactus graphs.

Decides, for a simple graph whose edges each lie on at most one cycle,
whether counting homomorphisms into it modulo 2 is polynomial-time or
ParityP-complete, and constructs and machine-verifies the objects behind the
hard side: involution-free reductions, hardness gadgets, mosaics, and the
spliced reduction instances with their orbit pinnings.
"""

from .classify import Classification, classify
from .errors import (
    BudgetError,
    InputFormatError,
    InternalContradictionError,
    ParhomError,
    PreconditionError,
)
from .gadgets import (
    HardnessGadget,
    PartialHardnessGadget,
    check_distance_requirements,
    parse_gadget,
    serialize_gadget,
    verify_hardness_gadget,
    verify_partial_gadget,
)
from .gadgetfind import (
    brute_force_gadget_search,
    find_hardness_gadget,
    find_structure_rooted,
    gadget_cycles,
    gadget_from_shortcut,
    gadget_mosaic_mosaic,
    gadget_mosaic_oddroot,
    gadget_phg_23path,
    gadget_phg_phg,
    partial_gadget_tree,
)
from .graphs import (
    NOT_UNIQUE,
    UNREACHABLE,
    BlockDecomposition,
    Graph,
    Path,
    RootedGraph,
    Split,
    blocks,
    cactus_cycles,
    components,
    cut_vertices,
    distance,
    distance_to_set,
    induced_subgraph,
    is_cactus,
    is_connected,
    parse_graph,
    serialize_graph,
    split_at,
    to_dot,
    unique_shortest_path,
)
from .automorphisms import (
    CenterStructure,
    ReductionTrace,
    are_isomorphic,
    aut_parity,
    automorphisms,
    center_structure,
    find_involution,
    fixed_cycle,
    fixed_subgraph,
    involution_free_reduction,
    isomorphism,
    orbit_preserving_endomorphisms,
    orbits,
)
from .homcount import (
    TreeDecomposition,
    count_homs,
    count_homs_mod2,
    count_independent_sets,
    count_pinned_homs,
    count_pinned_homs_mod2,
    independent_set_parity,
    parse_pin_file,
    serialize_pin,
    tree_decomposition,
    z_general_is,
)
from .mosaics import (
    MosaicCertificate,
    Shortcut,
    TwoThreePath,
    TWalkPartition,
    classify_mosaic,
    find_23path,
    find_shortcut,
    t_walk_partition,
)
from .reduction import (
    ReductionInstance,
    ReductionReport,
    aut_factor_check,
    build_g_gamma,
    verify_reduction,
)
from .walks import GF2Matrix, degree_parity, walk_count, walk_parity

__version__ = "0.1.0"
