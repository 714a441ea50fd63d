"""Publication-bias selection models and the file-drawer arithmetic around them.

Step and piecewise-constant selection functions, the unpublished/published
ratio r and its contour geometry, fail-safe-number style estimators, and a
seeded Monte Carlo oracle that checks the analytic results empirically.
"""

from .core import (
    LARGE_THRESHOLD,
    VERY_LARGE_THRESHOLD,
    OffContourError,
    PublicationStats,
    RatioLabel,
    StepSelectionModel,
    classify_ratio,
    contour_alpha,
    contour_beta,
    publication_probability_step,
    ratio_step,
    unpublished_fraction,
)
from .failsafe import (
    DEFAULT_Z_CRIT,
    FsnReport,
    StudySet,
    UnpublishedEstimate,
    ZScoreFileError,
    darlington_total,
    fail_safe_number,
    implied_ratio,
    load_study_set,
    model_unpublished,
    stouffer_z,
)
from .gaussian import (
    DensitySpec,
    TailConvention,
    alpha_to_z0,
    discretize_density,
    phi_cdf,
    phi_quantile,
    z0_to_alpha,
)
from .piecewise import (
    MASS_SUM_TOLERANCE,
    PiecewiseSelectionModel,
    diagonal_model,
    diagonal_ratio_closed_form,
    publication_probability_piecewise,
    ratio_piecewise,
    step_as_piecewise,
)
from .simulate import (
    CSV_COLUMNS,
    SimulationConfig,
    SimulationOutcome,
    SweepPoint,
    active_backend,
    analytic_p,
    convergence_sweep,
    run_simulation,
)

__version__ = "0.1.0"

__all__ = [
    "LARGE_THRESHOLD",
    "VERY_LARGE_THRESHOLD",
    "OffContourError",
    "PublicationStats",
    "RatioLabel",
    "StepSelectionModel",
    "classify_ratio",
    "contour_alpha",
    "contour_beta",
    "publication_probability_step",
    "ratio_step",
    "unpublished_fraction",
    "MASS_SUM_TOLERANCE",
    "PiecewiseSelectionModel",
    "diagonal_model",
    "diagonal_ratio_closed_form",
    "publication_probability_piecewise",
    "ratio_piecewise",
    "step_as_piecewise",
    "DensitySpec",
    "TailConvention",
    "alpha_to_z0",
    "discretize_density",
    "phi_cdf",
    "phi_quantile",
    "z0_to_alpha",
    "DEFAULT_Z_CRIT",
    "FsnReport",
    "StudySet",
    "UnpublishedEstimate",
    "ZScoreFileError",
    "darlington_total",
    "fail_safe_number",
    "implied_ratio",
    "load_study_set",
    "model_unpublished",
    "stouffer_z",
    "CSV_COLUMNS",
    "SimulationConfig",
    "SimulationOutcome",
    "SweepPoint",
    "active_backend",
    "analytic_p",
    "convergence_sweep",
    "run_simulation",
    "__version__",
]
