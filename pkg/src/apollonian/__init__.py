"""Exact-arithmetic Apollonian disk packings with unbounded curvature chains.

The packings live over the quartic number field generated by the square
root of the golden ratio, which makes every tangency, curvature and
limit point checkable by exact algebra rather than floating point.
"""

from .field import (
    ComplexFieldElement,
    FieldElement,
    OMEGA,
    PHI,
    RHO,
    RHO_BAR,
    SQRT5,
    SQRT_PHI,
    SQRT_TAU,
    TAU,
    decimal_str,
    fibonacci,
    golden_power,
    interval,
    sqrt_in_field,
)
from .disks import (
    DiskSymbol,
    EuclideanDisk,
    HalfPlane,
    from_center_radius,
    from_line,
    inner,
    invert_unit_circle,
    norm_ok,
    reflect_in_disk,
    tangent,
    to_euclidean,
)
from .descartes import (
    Quadruple,
    NotRepresentable,
    NotTangentEnough,
    InvalidQuadruple,
    descartes_scalar_ok,
    extended_ok,
    extended_residual,
    fourth_curvatures,
    reflect_fourth,
    solve_fourth_float,
)
from .packing import (
    BUILTIN_SEEDS,
    InvalidSeed,
    Packing,
    PackingConfig,
    PackingType,
    UnknownSeed,
    builtin_seed,
    classify,
    curvature_spectrum,
    generate,
    verify_packing,
)
from .jsonio import FORMAT_VERSION, ParseError, export_json, import_json
from .render import EmptyPacking, RenderOptions, render_svg

__version__ = "0.1.0"

__all__ = [
    "ComplexFieldElement",
    "FieldElement",
    "OMEGA",
    "PHI",
    "RHO",
    "RHO_BAR",
    "SQRT5",
    "SQRT_PHI",
    "SQRT_TAU",
    "TAU",
    "decimal_str",
    "fibonacci",
    "golden_power",
    "interval",
    "sqrt_in_field",
    "DiskSymbol",
    "EuclideanDisk",
    "HalfPlane",
    "from_center_radius",
    "from_line",
    "inner",
    "invert_unit_circle",
    "norm_ok",
    "reflect_in_disk",
    "tangent",
    "to_euclidean",
    "Quadruple",
    "NotRepresentable",
    "NotTangentEnough",
    "InvalidQuadruple",
    "descartes_scalar_ok",
    "extended_ok",
    "extended_residual",
    "fourth_curvatures",
    "reflect_fourth",
    "solve_fourth_float",
    "BUILTIN_SEEDS",
    "InvalidSeed",
    "Packing",
    "PackingConfig",
    "PackingType",
    "UnknownSeed",
    "builtin_seed",
    "classify",
    "curvature_spectrum",
    "generate",
    "verify_packing",
    "FORMAT_VERSION",
    "ParseError",
    "export_json",
    "import_json",
    "EmptyPacking",
    "RenderOptions",
    "render_svg",
    "__version__",
]
