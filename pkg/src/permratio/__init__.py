"""Exact Laplacian permanents, Laplacian ratios of trees, and the broom extremal bound."""

from .enumeration import enumerate_trees, extremal_search, permanent_extremal_search
from .exact import Sqrt2, as_rational, conjugate, format_rational, sqrt2_mul, sqrt2_pow
from .families import (
    Broom,
    Caterpillar,
    DoubleStar,
    Path,
    Star,
    broom_pd,
    broom_permanent,
    build,
    parse_family,
    pell_q,
    theorem_bound,
)
from .graph import (
    Graph,
    Tree,
    canonical_code,
    degrees,
    diameter,
    laplacian,
    parse_edge_list,
    product_of_degrees,
    strike,
)
from .permanent import permanent_naive, permanent_ryser
from .treedp import laplacian_ratio, matching_number, matching_weights, tree_permanent

__version__ = "0.1.0"
