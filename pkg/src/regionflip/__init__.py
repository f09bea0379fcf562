"""Region crossing changes on link diagrams.

A region crossing change flips over/under at every crossing on the boundary
of one face of a link diagram.  This package parses diagram codes, builds the
combinatorial planar map, decides which crossing selections are realizable by
region crossing changes (and produces explicit and minimal region sets),
unknots proper links through descending diagrams, and computes the Arf
invariant of proper links both by a determinant oracle and by the
region-weight route, with exhaustive oracles backing every law at desk scale.
"""

from .arf import (
    RegionSignData,
    arf_delta,
    arf_knot,
    arf_link,
    arf_via_regions,
    knot_determinant,
    region_signs,
)
from .catalog import CATALOG_NAMES, bundled_catalog, bundled_codes, bundled_diagrams
from .codec import (
    CatalogDiagnostic,
    CatalogLoad,
    OrientedPDCode,
    load_catalog,
    make_code,
    parse_pd,
    serialize_pd,
)
from .construct import NAMED_BRAIDS, add_curl, braid_closure
from .diagram import (
    BLACK,
    WHITE,
    Crossing,
    Diagram,
    LinkingMatrix,
    Region,
    build_diagram,
    checkerboard,
    crossing_sign,
    flip_crossings,
    is_proper,
    linking_matrix,
    mirror_diagram,
    smooth_crossing,
)
from .errors import (
    DegenerateError,
    LabelError,
    MultiComponentError,
    NonPlanarError,
    NotProperError,
    NotUnknottingError,
    PDSyntaxError,
    RegionflipError,
    SelfCrossingError,
    SplitError,
    TooLargeError,
)
from .gf2 import BitMatrix, rank, solve
from .regions import (
    AdmissibilityGraph,
    IncidenceMatrix,
    admissibility_graph,
    admissible_by_parity,
    brute_force_regions,
    incidence_matrix,
    minimal_regions,
    solve_regions,
)
from .unknot import (
    BasePointOrdering,
    default_ordering,
    descending_selection,
    is_descending,
    unknot_regions,
)
from .verify import CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityGraph", "BLACK", "BasePointOrdering", "BitMatrix",
    "CATALOG_NAMES", "CatalogDiagnostic", "CatalogLoad", "CheckResult",
    "Crossing", "DegenerateError", "Diagram", "IncidenceMatrix", "LabelError",
    "LinkingMatrix", "MultiComponentError", "NAMED_BRAIDS", "NonPlanarError",
    "NotProperError", "NotUnknottingError", "OrientedPDCode", "PDSyntaxError",
    "Region", "RegionSignData", "RegionflipError", "SelfCrossingError",
    "SplitError", "TooLargeError", "WHITE", "add_curl", "admissibility_graph",
    "admissible_by_parity", "arf_delta", "arf_knot", "arf_link",
    "arf_via_regions", "braid_closure", "brute_force_regions",
    "build_diagram", "bundled_catalog", "bundled_codes", "bundled_diagrams",
    "checkerboard", "crossing_sign", "default_ordering",
    "descending_selection", "flip_crossings", "incidence_matrix",
    "is_descending", "is_proper", "knot_determinant", "linking_matrix",
    "load_catalog", "make_code", "minimal_regions", "mirror_diagram",
    "parse_pd", "rank", "region_signs", "run_verification", "serialize_pd",
    "smooth_crossing", "solve", "solve_regions", "unknot_regions",
]
