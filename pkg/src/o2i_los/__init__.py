"""LoS and coverage probability for an outdoor base station serving indoor
users through a window, with built-in grid and Monte Carlo oracles."""

__version__ = "0.1.0"

from .coverage import (
    CoverageResult,
    FadingModel,
    LinkBudget,
    coverage_mc_oracle,
    coverage_probability,
    mean_snr,
    nakagami_ccdf,
    p_los_at_distance,
    reg_lower_gamma,
    reg_upper_gamma,
)
from .diffraction import (
    SPEED_OF_LIGHT,
    FresnelValue,
    diffraction_parameter,
    free_space_path_loss_db,
    fresnel_integrals,
    fresnel_radius,
    ked_excess_loss_db,
    total_path_loss_db,
    wavelength,
)
from .geometry import (
    CORNER_RAY_ANGLE,
    PathDecomposition,
    Point2D,
    SceneGeometry,
    bs_position,
    bs_to_window_distance,
    intrusion_distance,
    path_decomposition,
    window_edges,
    window_to_far_wall_distance,
)
from .los import (
    LOS_CLEARANCE_RATIO,
    GridSpec,
    LosEvaluation,
    critical_frequency,
    evaluate,
    is_los,
    los_half_angle,
    p_los_closed,
    p_los_grid,
    p_los_optical,
)
from .sweep import (
    ConfigError,
    RunRecord,
    SweepRuntimeError,
    SweepSpec,
    config_echo,
    emit_csv,
    parse_config,
    run_sweep,
)

__all__ = [
    "SPEED_OF_LIGHT",
    "CORNER_RAY_ANGLE",
    "LOS_CLEARANCE_RATIO",
    "Point2D",
    "SceneGeometry",
    "PathDecomposition",
    "FresnelValue",
    "GridSpec",
    "LosEvaluation",
    "FadingModel",
    "LinkBudget",
    "CoverageResult",
    "SweepSpec",
    "RunRecord",
    "ConfigError",
    "SweepRuntimeError",
    "bs_position",
    "bs_to_window_distance",
    "window_to_far_wall_distance",
    "window_edges",
    "intrusion_distance",
    "path_decomposition",
    "wavelength",
    "fresnel_integrals",
    "diffraction_parameter",
    "ked_excess_loss_db",
    "free_space_path_loss_db",
    "fresnel_radius",
    "total_path_loss_db",
    "los_half_angle",
    "p_los_closed",
    "p_los_optical",
    "critical_frequency",
    "is_los",
    "p_los_grid",
    "evaluate",
    "mean_snr",
    "p_los_at_distance",
    "reg_lower_gamma",
    "reg_upper_gamma",
    "nakagami_ccdf",
    "coverage_probability",
    "coverage_mc_oracle",
    "parse_config",
    "run_sweep",
    "config_echo",
    "emit_csv",
]
