"""Integer triple dynamics and the lozenge number tilings they generate.

The package splits along the natural seams of the system: ops (the
operator algebra), lattice (the geometric weight function and its
queries), reduction (descent, classification, shortest words, census),
modular (residue densities), render (SVG and delimited exports),
report (matplotlib figure bundles) and cli.
"""

from .errors import InputError, InternalCheckError, ResourceLimitError
from .ops import (
    H1,
    H2,
    H3,
    OPERATORS,
    IdentityReport,
    Triple,
    Word,
    apply_operator,
    apply_word,
    expand_step,
    iterate_word_component,
    parse_triple,
    parse_word,
    verify_identities,
)
from .lattice import (
    ANCHOR_NODES,
    NodeCoord,
    TrianglePlacement,
    WeightGrid,
    closed_region,
    closed_weight,
    count_occurrences,
    generate_region,
    hex_distance,
    hex_patch,
    is_loeschian,
    is_loeschian_by_form,
    is_represented,
    line_weight,
    minimum_weight,
    node_role,
    represented_below,
    unit_triangles,
)
from .reduction import (
    GERM_TRIPLES,
    ZIGZAG_WORD,
    CensusReport,
    TowerClassification,
    center_path,
    classify,
    length_of,
    negative_census,
    zigzag_apply,
)
from .modular import (
    DensityTable,
    count_form_residues,
    empirical_tiling_density,
    form_value,
    is_prime,
    legendre,
    primes_upto,
    special_index,
    theoretical_density,
)
from .render import (
    RenderSpec,
    dumps_canonical,
    grid_to_json,
    patch_grid,
    to_csv,
    to_svg,
)

__version__ = "0.1.0"

__all__ = [
    "ANCHOR_NODES",
    "CensusReport",
    "DensityTable",
    "GERM_TRIPLES",
    "H1",
    "H2",
    "H3",
    "IdentityReport",
    "InputError",
    "InternalCheckError",
    "NodeCoord",
    "OPERATORS",
    "RenderSpec",
    "ResourceLimitError",
    "TowerClassification",
    "TrianglePlacement",
    "Triple",
    "WeightGrid",
    "Word",
    "ZIGZAG_WORD",
    "apply_operator",
    "apply_word",
    "center_path",
    "classify",
    "closed_region",
    "closed_weight",
    "count_form_residues",
    "count_occurrences",
    "dumps_canonical",
    "empirical_tiling_density",
    "expand_step",
    "form_value",
    "generate_region",
    "grid_to_json",
    "hex_distance",
    "hex_patch",
    "is_loeschian",
    "is_loeschian_by_form",
    "is_prime",
    "is_represented",
    "iterate_word_component",
    "legendre",
    "length_of",
    "line_weight",
    "minimum_weight",
    "negative_census",
    "node_role",
    "parse_triple",
    "parse_word",
    "patch_grid",
    "primes_upto",
    "represented_below",
    "special_index",
    "theoretical_density",
    "to_csv",
    "to_svg",
    "unit_triangles",
    "verify_identities",
    "zigzag_apply",
]
