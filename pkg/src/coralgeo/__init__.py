"""coralgeo: curvature toolkit for ruffled saddle surfaces.

Evaluates a family of polar saddle surfaces (and their cut-open strip form)
with exact derivative jets, computes fundamental forms, shape operator and
Gaussian/mean/principal curvatures, plans crochet rows that realize the
sinh-circumference growth of the hyperbolic plane, exports curvature-colored
triangle meshes, and cross-checks every closed form against independent
numerical oracles.

All operations are pure functions of their arguments and safe to call
concurrently.  Batch grid evaluation runs on a compiled kernel when the
extension is built, with a numpy fallback selected at import (see
``kernel_backend``).
"""

from ._kernels import backend_name as kernel_backend
from .crochet import (BLOCK, EVEN, MagicCircle, Row, RowPlan, StitchPattern,
                      circle_length, distribute_multipliers, plan_rows,
                      render_pattern, rows_to_csv)
from .diffgeo import (CurvatureReport, CurvatureTable, DeviationReport,
                      FundamentalForms, WeingartenMatrix, aux_scalar,
                      coral_apex_curvature, coral_curvature_paper,
                      curvature_report, curvature_table, deviation_report,
                      first_form, fundamental_forms,
                      gaussian_curvature_from_forms, second_form,
                      table_to_csv, unit_normal, weingarten)
from .errors import CoralGeoError, ParameterError, SingularPointError
from .mesh import Mesh, curvature_colors, tessellate, write_obj, write_ply
from .surfaces import (CANONICAL_U, CANONICAL_V, CORAL, LETTUCE, PARABOLOID,
                       DomainPoint, Jet2, SurfaceFamily, Vec3, coral,
                       eval_jet, eval_position, in_canonical_domain, lettuce,
                       paraboloid)
from .verify import (FiniteDifferenceConfig, ValidationReport, fd_jet,
                     monge_curvature, validate_all)

__version__ = "0.1.0"

__all__ = [
    "BLOCK",
    "CANONICAL_U",
    "CANONICAL_V",
    "CORAL",
    "CoralGeoError",
    "CurvatureReport",
    "CurvatureTable",
    "DeviationReport",
    "DomainPoint",
    "EVEN",
    "FiniteDifferenceConfig",
    "FundamentalForms",
    "Jet2",
    "LETTUCE",
    "MagicCircle",
    "Mesh",
    "PARABOLOID",
    "ParameterError",
    "Row",
    "RowPlan",
    "SingularPointError",
    "StitchPattern",
    "SurfaceFamily",
    "ValidationReport",
    "Vec3",
    "WeingartenMatrix",
    "aux_scalar",
    "circle_length",
    "coral",
    "coral_apex_curvature",
    "coral_curvature_paper",
    "curvature_colors",
    "curvature_report",
    "curvature_table",
    "deviation_report",
    "distribute_multipliers",
    "eval_jet",
    "eval_position",
    "fd_jet",
    "first_form",
    "fundamental_forms",
    "gaussian_curvature_from_forms",
    "in_canonical_domain",
    "kernel_backend",
    "lettuce",
    "monge_curvature",
    "paraboloid",
    "plan_rows",
    "render_pattern",
    "rows_to_csv",
    "second_form",
    "table_to_csv",
    "tessellate",
    "unit_normal",
    "validate_all",
    "weingarten",
    "write_obj",
    "write_ply",
]
