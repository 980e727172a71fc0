"""Interval edge colorings of bipartite cylinder and torus grids."""

from .bounds import BoundsRow, bounds_table, bounds_table_csv, lower_bound, theorem1_upper
from .colorings import (
    EdgeColoring,
    SpectrumReport,
    VertexSpectrum,
    coloring_from_json_dict,
    coloring_to_json_dict,
    is_proper,
    is_surjective,
    normalize_colors,
    spectrum,
    verify_interval,
)
from .constructions import (
    CYLINDER_RULES,
    TORUS_RULES,
    ConstructionResult,
    cylinder_coloring,
    spectrum_sweep,
    step_down,
    torus_coloring,
)
from .grids import (
    Edge,
    Family,
    GridVertex,
    MeshGraph,
    build_cylinder,
    build_even_cycle,
    build_path,
    build_torus,
    cartesian_product,
    diameter,
    graph_from_json_dict,
    graph_to_json_dict,
    is_bipartite,
    is_regular,
    max_degree,
)
from .search import (
    Outcome,
    SearchBudget,
    SearchResult,
    exact_W,
    exact_w,
    find_interval_coloring,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "CYLINDER_RULES",
    "TORUS_RULES",
    "BoundsRow",
    "ConstructionResult",
    "Edge",
    "EdgeColoring",
    "Family",
    "GridVertex",
    "MeshGraph",
    "Outcome",
    "SearchBudget",
    "SearchResult",
    "SpectrumReport",
    "VertexSpectrum",
    "bounds_table",
    "bounds_table_csv",
    "build_cylinder",
    "build_even_cycle",
    "build_path",
    "build_torus",
    "cartesian_product",
    "coloring_from_json_dict",
    "coloring_to_json_dict",
    "cylinder_coloring",
    "diameter",
    "exact_W",
    "exact_w",
    "find_interval_coloring",
    "graph_from_json_dict",
    "graph_to_json_dict",
    "is_bipartite",
    "is_proper",
    "is_regular",
    "is_surjective",
    "lower_bound",
    "max_degree",
    "normalize_colors",
    "spectrum",
    "spectrum_sweep",
    "step_down",
    "theorem1_upper",
    "verify_interval",
]
