"""Exact k-rainbow domination on middle graphs."""
from .errors import CapacityError, DomainError, ParseError, RainbowError
from .graph import (
    Edge,
    Graph,
    MiddleGraph,
    Vertex,
    complement,
    elements,
    generate,
    matching_number,
    maximum_matching,
    middle_graph,
    parse_graph,
    serialize_graph,
)
from .rainbow import (
    RainbowAssignment,
    VerificationReport,
    format_assignment,
    middle_assignment,
    middle_neighborhood,
    parse_assignment,
    plain_assignment,
    verify_krdf,
    verify_mkrdf,
    weight,
)
from .solver import (
    SolveResult,
    brute_force_krdf,
    brute_force_middle,
    enumerate_optimal,
    enumerate_optimal_middle,
    solve_krdf,
    solve_middle,
)
from .dp import dp_middle
from .certify import FormulaFamily, construct_m3rdf, construct_tree_matching, formula_gamma_star_r3
from .laws import (
    LawReport,
    characterize_weight_three,
    check_edge_perturbation,
    check_observation_lower,
    check_pendant_path_lemma,
    check_tree_bounds,
    check_vertex_deletion,
)
from .domatic import (
    DomaticBounds,
    RainbowFamily,
    construct_family,
    domatic_bounds,
    domatic_exact_tiny,
    verify_family,
)

__version__ = "0.1.0"
