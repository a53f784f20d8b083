"""Projected gradient descent with nonmonotone backtracking line search.

The driver accepts a "max" rule (Armijo reference = max of f over a trailing
window) or an "average" rule (exponential average of past values); both reduce
to the monotone method for window 0 / weight 1. A tangent-space variant that
first projects the negative gradient onto the tangent cone is included as a
comparison baseline; unlike the plain method it can converge to limits whose
negative gradient is far from the regular normal cone.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum

from .core import Objective, Point, inner, norm
from .sets.base import FeasibleSet, InfeasiblePointError, proximal_normal_witness

_log = logging.getLogger(__name__)

__all__ = [
    "MaxRule",
    "AverageRule",
    "Termination",
    "SolverConfig",
    "StepResult",
    "Trace",
    "BacktrackError",
    "mu_update_max",
    "mu_update_average",
    "pgd_map",
    "pgd",
    "p2gd",
]


@dataclass(frozen=True)
class MaxRule:
    """Armijo reference = max of f over the last window+1 iterates."""

    window: int = 0

    def __post_init__(self):
        if self.window < 0:
            raise ValueError(f"window must be >= 0, got {self.window}")


@dataclass(frozen=True)
class AverageRule:
    """Armijo reference = exponential average with weight in (0, 1]."""

    weight: float = 1.0

    def __post_init__(self):
        if not 0.0 < self.weight <= 1.0:
            raise ValueError(f"weight must be in (0, 1], got {self.weight}")


class Termination(Enum):
    STATIONARY_AT_TOL = "stationary-at-tol"
    MAX_ITERS = "max-iters"
    BACKTRACK_FAILURE = "backtrack-failure"


@dataclass(frozen=True)
class SolverConfig:
    """Step-size bounds, backtracking factor, Armijo constant, and stopping rules.

    ``initial_step=None`` starts every line search at ``alpha_max``; a float
    fixes the initial step (it must lie in [alpha_min, alpha_max]).
    """

    alpha_min: float = 1e-4
    alpha_max: float = 1.0
    beta: float = 0.5
    c: float = 1e-4
    rule: MaxRule | AverageRule = field(default_factory=MaxRule)
    stat_tol: float = 1e-8
    max_iters: int = 1000
    max_backtracks: int = 60
    initial_step: float | None = None

    def __post_init__(self):
        if not 0.0 < self.alpha_min <= self.alpha_max < math.inf:
            raise ValueError(f"need 0 < alpha_min <= alpha_max < inf, got "
                             f"[{self.alpha_min}, {self.alpha_max}]")
        if not 0.0 < self.beta < 1.0:
            raise ValueError(f"beta must be in (0, 1), got {self.beta}")
        if not 0.0 < self.c < 1.0:
            raise ValueError(f"c must be in (0, 1), got {self.c}")
        if not isinstance(self.rule, (MaxRule, AverageRule)):
            raise TypeError(f"rule must be MaxRule or AverageRule, got {self.rule!r}")
        if self.stat_tol <= 0.0:
            raise ValueError(f"stat_tol must be positive, got {self.stat_tol}")
        if self.max_iters < 1:
            raise ValueError(f"max_iters must be positive, got {self.max_iters}")
        if self.max_backtracks < 1:
            raise ValueError(f"max_backtracks must be positive, got {self.max_backtracks}")
        if self.initial_step is not None and not (
                self.alpha_min <= self.initial_step <= self.alpha_max):
            raise ValueError(f"initial_step {self.initial_step} outside "
                             f"[{self.alpha_min}, {self.alpha_max}]")

    def start_alpha(self) -> float:
        return self.alpha_max if self.initial_step is None else self.initial_step


@dataclass(frozen=True)
class StepResult:
    """Outcome of one backtracking projected line search."""

    y: Point
    alpha_accepted: float
    backtracks: int
    armijo_lhs: float
    armijo_rhs: float


class BacktrackError(RuntimeError):
    """The line search exhausted its backtracking budget.

    Signals that the base point is numerically stationary or that the supplied
    gradients are wrong; termination of the loop is only guaranteed away from
    stationary points.
    """

    def __init__(self, backtracks: int, last_alpha: float):
        super().__init__(f"no Armijo step after {backtracks} backtracks (alpha={last_alpha:.3e})")
        self.backtracks = backtracks
        self.last_alpha = last_alpha


@dataclass
class Trace:
    """Per-iterate record of a solver run.

    All lists share one length. Row 0 describes the initial point; its alpha
    is NaN and its backtrack count 0 because no step produced it. The mu of
    the final row is the Armijo reference that a further step would have used.
    """

    iterates: list[Point]
    f_values: list[float]
    mu_values: list[float]
    alphas: list[float]
    backtrack_counts: list[int]
    stat_measures: list[float]
    termination: Termination

    def __len__(self) -> int:
        return len(self.iterates)

    def final(self) -> Point:
        return self.iterates[-1]


def mu_update_max(f_history, i: int, window: int) -> float:
    """Max of f over the trailing window {max(0, i-window), ..., i}."""
    if window < 0:
        raise ValueError(f"window must be >= 0, got {window}")
    if i < 0 or i >= len(f_history):
        raise ValueError(f"index {i} outside history of length {len(f_history)}")
    return max(f_history[max(0, i - window):i + 1])


def mu_update_average(mu_prev: float, f_xi: float, weight: float) -> float:
    """Convex combination (1 - weight) * mu_prev + weight * f_xi."""
    if not 0.0 < weight <= 1.0:
        raise ValueError(f"weight must be in (0, 1], got {weight}")
    return (1.0 - weight) * mu_prev + weight * f_xi


def pgd_map(set_: FeasibleSet, obj: Objective, x: Point, mu: float,
            cfg: SolverConfig) -> StepResult:
    """One backtracking projected line search along the negative gradient.

    Starting from the configured initial step, projects x - alpha*grad(x)
    onto the set and shrinks alpha by beta until the Armijo condition
    f(y) <= mu + c * <grad(x), y - x> holds. Requires x feasible and
    mu >= f(x); raises BacktrackError past the backtracking budget.
    """
    fx = obj.eval(x)
    if mu < fx - 1e-9 * max(1.0, abs(fx)):
        raise ValueError(f"Armijo reference mu={mu} below f(x)={fx}")
    g = obj.grad(x)
    alpha = cfg.start_alpha()
    y = set_.project(x - alpha * g)
    backtracks = 0
    while True:
        lhs = obj.eval(y)
        rhs = mu + cfg.c * inner(g, y - x)
        if lhs <= rhs:
            return StepResult(y, alpha, backtracks, lhs, rhs)
        if backtracks >= cfg.max_backtracks:
            raise BacktrackError(backtracks, alpha)
        alpha *= cfg.beta
        backtracks += 1
        y = set_.project(x - alpha * g)


def _check_start(set_: FeasibleSet, x0: Point):
    if not set_.contains(x0):
        raise InfeasiblePointError(f"starting point is not on {set_!r}: {x0!r}")


def pgd(set_: FeasibleSet, obj: Objective, x0: Point, cfg: SolverConfig,
        stationarity: str = "regular") -> Trace:
    """Projected gradient descent with a nonmonotone Armijo reference.

    The loop stops once the stationarity test at the current iterate passes:
    by default when the distance from -grad(x) to the regular normal cone is
    at most ``cfg.stat_tol``; with ``stationarity="proximal"`` when the
    sampling-based proximal-normal certificate succeeds (the right test when
    the gradient is locally Lipschitz). Exact cone membership is not
    numerically decidable, hence the tolerance.
    """
    if stationarity not in ("regular", "proximal"):
        raise ValueError(f"stationarity must be 'regular' or 'proximal', got {stationarity!r}")
    _check_start(set_, x0)

    iterates = [x0]
    f_values = [obj.eval(x0)]
    mu_values: list[float] = []
    alphas = [math.nan]
    backtracks = [0]
    stats: list[float] = []
    mu_prev = f_values[0]

    i = 0
    while True:
        x = iterates[i]
        v = -obj.grad(x)
        if stationarity == "regular":
            stat = set_.dist_regular_normal(x, v)
            stop = stat <= cfg.stat_tol
        else:
            stat = set_.dist_proximal_normal(x, v)
            stop = proximal_normal_witness(set_, x, v, tol=cfg.stat_tol) is not None
        stats.append(stat)

        if isinstance(cfg.rule, MaxRule):
            mu = mu_update_max(f_values, i, cfg.rule.window)
        else:
            mu = mu_update_average(mu_prev, f_values[i], cfg.rule.weight)
        mu_values.append(mu)
        mu_prev = mu

        if stop:
            term = Termination.STATIONARY_AT_TOL
            break
        if i >= cfg.max_iters:
            term = Termination.MAX_ITERS
            break
        try:
            step = pgd_map(set_, obj, x, mu, cfg)
        except BacktrackError as err:
            _log.warning("backtracking stalled at iteration %d: %s", i, err)
            term = Termination.BACKTRACK_FAILURE
            break
        iterates.append(step.y)
        f_values.append(step.armijo_lhs)
        alphas.append(step.alpha_accepted)
        backtracks.append(step.backtracks)
        _log.debug("iter %d: f=%.6e alpha=%.3e backtracks=%d stat=%.3e",
                   i + 1, step.armijo_lhs, step.alpha_accepted, step.backtracks, stat)
        i += 1

    return Trace(iterates, f_values, mu_values, alphas, backtracks, stats, term)


def p2gd(set_: FeasibleSet, obj: Objective, x0: Point, cfg: SolverConfig) -> Trace:
    """Tangent-projected variant: line search along a projection of -grad.

    Each step projects -grad(x) onto the tangent cone, then backtracks over
    y = project(x + alpha * g) against the monotone Armijo condition
    f(y) <= f(x) + c * <grad(x), y - x>. Stops when the tangent-projected
    gradient norm drops to ``cfg.stat_tol`` or on the iteration budget. The
    recorded stationarity measures are regular-normal distances; they are
    reported, not used to stop, because they can vanish along runs whose
    limit is not stationary in that sense. Requires a set with tangent
    projections.
    """
    _check_start(set_, x0)

    iterates = [x0]
    f_values = [obj.eval(x0)]
    mu_values: list[float] = []
    alphas = [math.nan]
    backtracks = [0]
    stats: list[float] = []

    i = 0
    while True:
        x = iterates[i]
        fx = f_values[i]
        grad = obj.grad(x)
        direction = set_.project_tangent(x, -grad)
        stats.append(set_.dist_regular_normal(x, -grad))
        mu_values.append(fx)

        if norm(direction) <= cfg.stat_tol:
            term = Termination.STATIONARY_AT_TOL
            break
        if i >= cfg.max_iters:
            term = Termination.MAX_ITERS
            break

        alpha = cfg.start_alpha()
        y = set_.project(x + alpha * direction)
        k = 0
        failed = False
        while True:
            lhs = obj.eval(y)
            rhs = fx + cfg.c * inner(grad, y - x)
            if lhs <= rhs:
                break
            if k >= cfg.max_backtracks:
                failed = True
                break
            alpha *= cfg.beta
            k += 1
            y = set_.project(x + alpha * direction)
        if failed:
            _log.warning("tangent-space backtracking stalled at iteration %d", i)
            term = Termination.BACKTRACK_FAILURE
            break
        iterates.append(y)
        f_values.append(lhs)
        alphas.append(alpha)
        backtracks.append(k)
        i += 1

    return Trace(iterates, f_values, mu_values, alphas, backtracks, stats, term)
