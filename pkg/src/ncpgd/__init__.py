"""Projected gradient descent on nonconvex closed sets.

A library and CLI for minimizing differentiable functions over closed,
possibly nonconvex feasible sets by projected gradient descent with a
nonmonotone backtracking line search, together with the tangent/normal-cone
calculus needed to certify the stationarity of the points it returns.
"""

from .analysis import (
    ApocalypseFlag,
    StationarityReport,
    classify_stationarity,
    detect_apocalypse,
    lipschitz_probe,
    stationarity_measure_series,
)
from .core import (
    Objective,
    Point,
    ShapeError,
    check_gradient,
    constant,
    inner,
    least_squares,
    norm,
    quartic,
)
from .sets import (
    WITNESS_ALPHA_GRID,
    CurveSet,
    EpigraphSet,
    FeasibleSet,
    InfeasiblePointError,
    LowRankSet,
    NonnegSparseSet,
    PsdLowRankSet,
    SparseSet,
    from_spec,
    in_proximal_normal_witness,
    projected_translation_check,
    proximal_normal_witness,
)
from .solver import (
    AverageRule,
    BacktrackError,
    MaxRule,
    SolverConfig,
    StepResult,
    Termination,
    Trace,
    mu_update_average,
    mu_update_max,
    p2gd,
    pgd,
    pgd_map,
)

__version__ = "0.1.0"

__all__ = [
    "ApocalypseFlag",
    "AverageRule",
    "BacktrackError",
    "CurveSet",
    "EpigraphSet",
    "FeasibleSet",
    "InfeasiblePointError",
    "LowRankSet",
    "MaxRule",
    "NonnegSparseSet",
    "Objective",
    "Point",
    "PsdLowRankSet",
    "ShapeError",
    "SolverConfig",
    "SparseSet",
    "StationarityReport",
    "StepResult",
    "Termination",
    "Trace",
    "WITNESS_ALPHA_GRID",
    "check_gradient",
    "classify_stationarity",
    "constant",
    "detect_apocalypse",
    "from_spec",
    "in_proximal_normal_witness",
    "inner",
    "least_squares",
    "lipschitz_probe",
    "mu_update_average",
    "mu_update_max",
    "norm",
    "p2gd",
    "pgd",
    "pgd_map",
    "projected_translation_check",
    "proximal_normal_witness",
    "quartic",
    "stationarity_measure_series",
]
