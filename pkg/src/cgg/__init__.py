"""Matchings, blockers, and minimum-transversal enumeration for the complete
convex geometric graph on 2m vertices."""

from .blockers import (
    BlockerSpec,
    build_blocker,
    enumerate_blockers,
    star_blocker,
    validate_blocker,
    witness_missed_blocker,
)
from .counting import (
    CountReport,
    blocker_count,
    catalan,
    coblocker_bounds,
    coblocker_count,
    count_report,
    count_table,
    generate_lower_bound_family,
)
from .errors import BudgetExceededError, CGGError, DomainError
from .geometry import (
    Edge,
    EdgeSet,
    GraphContext,
    are_neighbors,
    are_parallel,
    edge_direction,
    edge_order,
    edges_cross,
    is_boundary,
)
from .matchings import (
    Family,
    Matching,
    check_halfplane_property,
    check_quadrant_property,
    enumerate_odd_matchings,
    enumerate_perfect_matchings,
    enumerate_semi_simple,
    enumerate_spms,
    is_semi_simple,
    is_simple,
)
from .render import RenderSpec, render_count_figure, render_svg, write_svg
from .serialize import family_to_csv, family_to_json, parse_family
from .transversal import (
    TransversalProblem,
    TransversalSolution,
    derive_sequence,
    enumerate_min_transversals,
    hits_all,
    min_transversal_size,
    solve_min_transversals,
)

__version__ = "0.1.0"

__all__ = [
    "BlockerSpec",
    "BudgetExceededError",
    "CGGError",
    "CountReport",
    "DomainError",
    "Edge",
    "EdgeSet",
    "Family",
    "GraphContext",
    "Matching",
    "RenderSpec",
    "TransversalProblem",
    "TransversalSolution",
    "are_neighbors",
    "are_parallel",
    "blocker_count",
    "build_blocker",
    "catalan",
    "check_halfplane_property",
    "check_quadrant_property",
    "coblocker_bounds",
    "coblocker_count",
    "count_report",
    "count_table",
    "derive_sequence",
    "edge_direction",
    "edge_order",
    "edges_cross",
    "enumerate_blockers",
    "enumerate_min_transversals",
    "enumerate_odd_matchings",
    "enumerate_perfect_matchings",
    "enumerate_semi_simple",
    "enumerate_spms",
    "family_to_csv",
    "family_to_json",
    "generate_lower_bound_family",
    "hits_all",
    "is_boundary",
    "is_semi_simple",
    "is_simple",
    "min_transversal_size",
    "parse_family",
    "render_count_figure",
    "render_svg",
    "solve_min_transversals",
    "star_blocker",
    "validate_blocker",
    "witness_missed_blocker",
    "write_svg",
]
