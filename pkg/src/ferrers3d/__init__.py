"""Toric rings of three-dimensional Ferrers diagrams: exact dimension,
Castelnuovo-Mumford regularity, multiplicity and reduction number, computed
by a vertex-shedding recursion and cross-validated by brute-force oracles.
"""

from .diagram import (
    Diagram,
    OrderedPointList,
    Point,
    ZoneMap,
    alpha_beta_gamma,
    box,
    diagram_from_json,
    diagram_to_json,
    essential_dims,
    essential_reduce,
    from_generators,
    from_points,
    has_projection_property,
    has_strong_projection_property,
    induction_order,
    lex_order,
    profile,
    validate,
    zones,
)
from .minors import (
    Binomial2Minor,
    PairGraph,
    classify_point,
    leading_pair_graph,
    monomial_generators,
    two_minors,
)
from .engine import (
    PAST_LAYER_1,
    Engine,
    SuffixState,
    canonical_key,
    invariants,
    link_state,
    suffix_invariants,
)
from .oracle import (
    ComplexSummary,
    GBCheckReport,
    HilbertTable,
    InvariantsReport,
    facets,
    hilbert_function,
    hilbert_invariants,
    oracle_invariants,
    toric_gb_check,
)
from .closed_forms import (
    Ambiguous,
    ProfileBounds,
    SegreFactor,
    ferrers2d_multiplicity,
    ferrers2d_regularity,
    mu_bound,
    profile_bounds,
    rect_multiplicity,
    rect_regularity,
    reduction_number,
    segre_combine,
)
from . import errors

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
