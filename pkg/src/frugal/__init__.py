"""Frugal graph colouring toolkit.

A colouring is k-frugal when it is proper and no colour appears more than k
times in any vertex's neighbourhood; the edge variant caps the incidences of
a colour at each vertex instead (and drops properness).  This package bundles
exact small-instance oracles, constructive colouring algorithms for planar
and outerplanar graphs and for multigraph edges, validators for every notion
involved, tight-family generators, and a CLI.
"""

from .edgecolour import (
    BipartiteLift,
    Orientation,
    bipartite_lift,
    colour_edges_even_k,
    colour_edges_odd_k,
    euler_orientation,
    galvin_list_edge_colour,
    perfect_matching_decomposition,
    regularize_to_degree,
    two_factor_decomposition,
)
from .errors import FrugalError
from .exact import (
    ExactResult,
    exact_frugal_chromatic,
    exact_frugal_chromatic_index,
    exact_lambda,
    exact_list_frugal_decision,
    exact_rainbow_face_chromatic,
)
from .cyclic import (
    ClassConstraintGraph,
    build_class_constraint_graph,
    colour_square_via_classes,
)
from .generators import (
    GeneratedInstance,
    gen_Gm,
    gen_named,
    gen_random_maximal_outerplanar,
    gen_random_multigraph,
    gen_Tm,
)
from .graphs import (
    MultiGraph,
    RotationSystem,
    build_multigraph,
    contract_edge_simplify,
    faces,
    line_graph,
    metrics,
    square,
)
from .outerplanar import (
    colour_outerplanar,
    colour_outerplanar_2connected,
    find_reducible_vertex,
)
from .planar import (
    BoundSpec,
    bound_value,
    colour_planar_frugal,
    extend_colour_at_vertex,
    find_light_vertex,
    greedy_L_k1,
    label_to_frugal,
)
from .validate import (
    Violation,
    validate_face_rainbow,
    validate_frugal_edge,
    validate_frugal_vertex,
    validate_lists,
    validate_Lpq,
)

__all__ = [name for name in dir() if not name.startswith("_")]
