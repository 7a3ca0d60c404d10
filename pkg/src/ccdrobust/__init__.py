"""Central composite designs: estimation/prediction criteria and their
degradation under missing observations."""

from .design import (
    Design,
    DesignPoint,
    PointClass,
    canonical_probe_points,
    design_from_csv,
    design_to_csv,
    gen_ccd,
)
from .model import expand_point, model_matrix, num_params
from .linalg import SingularMatrixError
from .criteria import (
    CriteriaReport,
    Region,
    RegionShape,
    criteria_report,
    g_efficiency,
    g_max,
    region_moments,
    rotatability_index,
    spv,
    v_avg,
)
from .missing import (
    LossReport,
    MissingScenario,
    delete_rows,
    increase_in_variance,
    loss_precision,
    relative_g_efficiency,
    relative_v_efficiency,
    scenario_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "Design", "DesignPoint", "PointClass", "gen_ccd",
    "canonical_probe_points", "design_to_csv", "design_from_csv",
    "expand_point", "model_matrix", "num_params",
    "SingularMatrixError",
    "CriteriaReport", "Region", "RegionShape", "criteria_report",
    "g_efficiency", "g_max", "region_moments", "rotatability_index",
    "spv", "v_avg",
    "LossReport", "MissingScenario", "delete_rows", "increase_in_variance",
    "loss_precision", "relative_g_efficiency", "relative_v_efficiency",
    "scenario_sweep",
]
