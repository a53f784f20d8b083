"""Stationarity certification, apocalypse detection, and smoothness probes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Objective, Point, norm
from .sets.base import (
    WITNESS_ALPHA_GRID,
    FeasibleSet,
    InfeasiblePointError,
    proximal_normal_witness,
)
from .solver import Trace

__all__ = [
    "StationarityReport",
    "ApocalypseFlag",
    "classify_stationarity",
    "stationarity_measure_series",
    "detect_apocalypse",
    "lipschitz_probe",
]

# Classification tolerance defaults to ten times the solver's stopping
# tolerance so a converged run always classifies.
DEFAULT_CLASSIFY_TOL = 1e-7


@dataclass(frozen=True)
class StationarityReport:
    """How -grad(f) at a feasible point sits relative to the three normal cones.

    The classification is consistent with the nesting of the cones:
    proximal implies regular implies general.
    """

    point: Point
    f_value: float
    d_regular: float
    d_general_member: bool
    proximal_member: bool
    proximal_witness: bool
    witness_alpha: float | None
    classification: str


@dataclass(frozen=True)
class ApocalypseFlag:
    """Vanishing stationarity measure along a run vs. the measure at its limit."""

    limit_point: Point
    measure_along_sequence: list[float]
    measure_at_limit: float
    flagged: bool
    note: str = ""


def classify_stationarity(set_: FeasibleSet, obj: Objective, x: Point,
                          tol: float = DEFAULT_CLASSIFY_TOL) -> StationarityReport:
    """Evaluate -grad(x) against the proximal, regular, and general normal cones."""
    if not set_.contains(x, tol):
        raise InfeasiblePointError(f"cannot classify: point not on {set_!r}")
    v = -obj.grad(x)
    d_regular = set_.dist_regular_normal(x, v, tol)
    general = set_.in_general_normal(x, v, tol)
    proximal = set_.in_proximal_normal(x, v, tol)
    alpha = proximal_normal_witness(set_, x, v, WITNESS_ALPHA_GRID, tol)
    if proximal:
        label = "P-stationary"
    elif d_regular <= tol:
        label = "B-stationary"
    elif general:
        label = "M-stationary-only"
    else:
        label = "non-stationary"
    return StationarityReport(
        point=x,
        f_value=obj.eval(x),
        d_regular=d_regular,
        d_general_member=general,
        proximal_member=proximal,
        proximal_witness=alpha is not None,
        witness_alpha=alpha,
        classification=label,
    )


def stationarity_measure_series(set_: FeasibleSet, obj: Objective, trace: Trace,
                                kind: str = "regular") -> list[float]:
    """Per-iterate distance from -grad to the chosen normal cone along a trace."""
    if kind not in ("regular", "proximal"):
        raise ValueError(f"kind must be 'regular' or 'proximal', got {kind!r}")
    if len(trace) == 0:
        raise ValueError("trace is empty")
    out = []
    for x in trace.iterates:
        v = -obj.grad(x)
        if kind == "regular":
            out.append(set_.dist_regular_normal(x, v))
        else:
            out.append(set_.dist_proximal_normal(x, v))
    return out


def detect_apocalypse(set_: FeasibleSet, obj: Objective, trace: Trace,
                      tol: float = DEFAULT_CLASSIFY_TOL) -> ApocalypseFlag:
    """Flag runs whose stationarity measure vanishes but whose limit is not stationary.

    The limit point is estimated as the projected mean of the last five
    iterates; the flag is raised when the regular-normal measure series ends
    below tol while the measure at the limit exceeds 10*tol. A trace whose
    tail has not settled (diameter >= tol) is never flagged.
    """
    tail = trace.iterates[-5:]
    diameter = 0.0
    for i in range(len(tail)):
        for j in range(i + 1, len(tail)):
            diameter = max(diameter, norm(tail[i] - tail[j]))
    mean = Point(np.mean([p.data for p in tail], axis=0), tail[0].shape)
    limit = set_.project(mean)
    series = stationarity_measure_series(set_, obj, trace, kind="regular")
    measure_at_limit = set_.dist_regular_normal(limit, -obj.grad(limit), tol)
    if diameter >= tol:
        return ApocalypseFlag(limit, series, measure_at_limit, False,
                              note=f"trace tail not converged (diameter {diameter:.3e} >= {tol:.3e})")
    flagged = series[-1] <= tol and measure_at_limit > 10.0 * tol
    return ApocalypseFlag(limit, series, measure_at_limit, flagged)


def lipschitz_probe(obj: Objective, region_center: Point, radius: float,
                    samples: int, seed: int = 0) -> float:
    """Monte-Carlo lower estimate of the gradient's Lipschitz constant on a ball.

    Draws points in the closed ball around region_center and records gradient
    difference quotients over short, long, and radial pairs; ratios never
    exceed the true modulus, so the estimate approaches it from below.
    """
    radius = float(radius)
    if radius <= 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    if samples < 1:
        raise ValueError(f"samples must be positive, got {samples}")
    rng = np.random.default_rng(seed)
    dim = region_center.data.size
    shape = region_center.shape
    eps = 1e-3 * radius

    def ball_point() -> Point:
        u = rng.standard_normal(dim)
        u /= np.linalg.norm(u)
        rad = radius * rng.uniform() ** (1.0 / dim)
        return Point(region_center.data + rad * u, shape)

    def ratio(a: Point, b: Point) -> float:
        gap = norm(a - b)
        if gap < 1e-12 * radius:
            return 0.0
        return norm(obj.grad(a) - obj.grad(b)) / gap

    best = 0.0
    for _ in range(samples):
        x = ball_point()
        # Short pair along a random direction, clipped into the ball.
        u = rng.standard_normal(dim)
        u /= np.linalg.norm(u)
        y = Point(x.data + eps * u, shape)
        off = y - region_center
        if norm(off) > radius:
            y = Point(region_center.data + radius * off.data / norm(off), shape)
        best = max(best, ratio(x, y))
        # Long pair.
        best = max(best, ratio(x, ball_point()))
        # Radial pair out to the boundary, where curvature-driven moduli peak.
        d = x - region_center
        nd = norm(d)
        if nd > 1e-12 * radius:
            boundary = Point(region_center.data + radius * d.data / nd, shape)
            best = max(best, ratio(x, boundary))
    return best
