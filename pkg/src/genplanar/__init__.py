"""Generating graphs of finite groups, exact generation statistics, and
planarity testing with certificates."""

__version__ = "0.1.0"

from .groups import (
    FiniteGroup,
    Subgroup,
    are_isomorphic,
    center,
    centralizer,
    commutator,
    from_cayley_table,
    generated_closure,
    is_two_generated,
    totient,
)
from .structure import (
    ChiefSeries,
    chief_series,
    count_complements,
    enumerate_subgroups,
    has_order2_quotient,
    minimal_normal_subgroups,
    normal_closure,
    quotient,
)
from .genstats import (
    AlphaRecord,
    abelian_factor_check,
    alpha,
    alpha_profile,
    gaschutz_fiber_count,
    generation_probability,
    ordered_generating_pairs,
    relative_generation_probability,
)
from .graphs import (
    SimpleGraph,
    complete_graph,
    generating_graph,
    induced_subgraph,
    pruned_graph,
    to_dot,
    to_edge_list_text,
)
from .planarity import (
    KuratowskiWitness,
    PlanarityVerdict,
    RotationEmbedding,
    euler_bound,
    faces_from_rotation,
    is_planar,
    kuratowski_witness,
    verify_kuratowski,
)
from .minors import planar_oracle
from .catalog import (
    build_group,
    corpus_up_to_15,
    parse_group_spec,
    read_cayley_file,
    verify_theorem,
)
