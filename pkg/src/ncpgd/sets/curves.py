"""Two planar example sets built on the kinked graph y = max(0, t^(3/5)).

Both sets fail to be smooth at the origin; their cones there have closed
forms, including a proximal normal cone that is a strict, non-closed subset
of the regular normal cone.
"""

from __future__ import annotations

import numpy as np
from scipy.optimize import minimize_scalar

from ..core import Point, norm
from .base import DEFAULT_TOL, FeasibleSet

_GRID_SIZE = 2049  # odd so the kink parameter 0 is always on the scan grid


def _graph_height(t: float) -> float:
    return t ** 0.6 if t > 0.0 else 0.0


def _graph_point(t: float) -> Point:
    return Point([t, _graph_height(t)], (2,))


def _nearest_parameter(p: np.ndarray) -> float:
    """Parameter of a closest graph point to p: grid scan plus bounded refinement."""
    radius = 2.0 * float(np.hypot(p[0], p[1])) + 1.0
    ts = np.linspace(-radius, radius, _GRID_SIZE)
    heights = np.where(ts > 0.0, np.power(np.maximum(ts, 0.0), 0.6), 0.0)
    d2 = (ts - p[0]) ** 2 + (heights - p[1]) ** 2
    i = int(np.argmin(d2))

    def objective(t: float) -> float:
        return (t - p[0]) ** 2 + (_graph_height(t) - p[1]) ** 2

    lo = ts[max(0, i - 1)]
    hi = ts[min(_GRID_SIZE - 1, i + 1)]
    res = minimize_scalar(objective, bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-13})
    best = float(res.x)
    # The kink is a candidate of its own: bounded refinement can stall next to it.
    if lo <= 0.0 <= hi and objective(0.0) <= objective(best):
        best = 0.0
    return best


def _clamp_fourth_quadrant(v: np.ndarray) -> np.ndarray:
    return np.array([max(v[0], 0.0), min(v[1], 0.0)])


class CurveSet(FeasibleSet):
    """The curve {(t, max(0, t^(3/5))) : t real}.

    Stratum 0 is the kink at the origin, stratum 1 the open left ray,
    stratum 2 the open right branch.
    """

    def __init__(self, tol: float = DEFAULT_TOL):
        super().__init__((2,), tol)

    def __repr__(self):
        return "curve"

    @property
    def stratum_ids(self):
        return (0, 1, 2)

    def _param(self, x: Point, tol: float | None) -> float:
        self._require_shape(x)
        t = float(x.data[0])
        if abs(float(x.data[1]) - _graph_height(t)) > self._tol(tol):
            self._infeasible(x, "not on the graph")
        return t

    def contains(self, x: Point, tol: float | None = None) -> bool:
        self._require_shape(x)
        t = float(x.data[0])
        return abs(float(x.data[1]) - _graph_height(t)) <= self._tol(tol)

    def project(self, x: Point) -> Point:
        self._require_shape(x)
        t = float(x.data[0])
        if abs(float(x.data[1]) - _graph_height(t)) <= 1e-12 * max(1.0, abs(t)):
            return _graph_point(t)
        return _graph_point(_nearest_parameter(np.asarray(x.data)))

    def stratum_id(self, x: Point, tol: float | None = None) -> int:
        t = self._param(x, tol)
        if abs(t) <= self._tol(tol):
            return 0
        return 1 if t < 0.0 else 2

    def _unit_tangent(self, t: float) -> np.ndarray:
        if t < 0.0:
            return np.array([1.0, 0.0])
        d = np.array([1.0, 0.6 * t ** -0.4])
        return d / np.linalg.norm(d)

    def dist_regular_normal(self, x: Point, v: Point, tol: float | None = None) -> float:
        self._require_shape(v)
        t = self._param(x, tol)
        if abs(t) <= self._tol(tol):
            q = _clamp_fourth_quadrant(v.data)
            return float(np.linalg.norm(v.data - q))
        # Smooth point: the normal cone is the line orthogonal to the tangent.
        tau = self._unit_tangent(t)
        return abs(float(np.dot(v.data, tau)))

    def in_proximal_normal(self, x: Point, v: Point, tol: float | None = None) -> bool:
        t = self._param(x, tol)
        tl = self._tol(tol)
        if abs(t) > tl:
            return self.dist_regular_normal(x, v, tol) <= tl
        # At the kink the proximal cone is the fourth quadrant minus the open
        # positive horizontal ray.
        if self.dist_regular_normal(x, v, tol) > tl:
            return False
        return not (float(v.data[0]) > tl and abs(float(v.data[1])) <= tl)

    def _dist_tangent(self, v: np.ndarray) -> float:
        up = np.array([0.0, max(v[1], 0.0)])
        left = np.array([min(v[0], 0.0), 0.0])
        return min(float(np.linalg.norm(v - up)), float(np.linalg.norm(v - left)))

    def in_general_normal(self, x: Point, v: Point, tol: float | None = None) -> bool:
        t = self._param(x, tol)
        tl = self._tol(tol)
        if abs(t) <= tl:
            # Union of the regular normal cone and the tangent cone.
            if self.dist_regular_normal(x, v, tol) <= tl:
                return True
            return self._dist_tangent(np.asarray(v.data)) <= tl
        return self.dist_regular_normal(x, v, tol) <= tl

    def project_tangent(self, x: Point, v: Point, tol: float | None = None) -> Point:
        self._require_shape(v)
        t = self._param(x, tol)
        if abs(t) <= self._tol(tol):
            up = np.array([0.0, max(float(v.data[1]), 0.0)])
            left = np.array([min(float(v.data[0]), 0.0), 0.0])
            if np.linalg.norm(v.data - up) <= np.linalg.norm(v.data - left):
                return Point(up, (2,))
            return Point(left, (2,))
        tau = self._unit_tangent(t)
        return Point(float(np.dot(v.data, tau)) * tau, (2,))

    def random_point(self, rng: np.random.Generator, stratum: int | None = None) -> Point:
        k = int(rng.integers(0, 3)) if stratum is None else int(stratum)
        if k == 0:
            return Point.zeros((2,))
        t = float(rng.uniform(0.2, 2.0))
        return _graph_point(-t if k == 1 else t)

    def sample_regular_normal(self, x: Point, v_rng: np.random.Generator,
                              tol: float | None = None) -> Point:
        t = self._param(x, tol)
        if abs(t) <= self._tol(tol):
            g = v_rng.standard_normal(2)
            return Point([abs(g[0]), -abs(g[1])], (2,))
        tau = self._unit_tangent(t)
        normal = np.array([-tau[1], tau[0]])
        return Point(float(v_rng.standard_normal()) * normal, (2,))


class EpigraphSet(FeasibleSet):
    """The region {(x1, x2) : x2 >= max(0, x1^(3/5))}.

    Stratum 0 is the origin, strata 1 and 2 the open left and right boundary
    pieces, stratum 3 the interior.
    """

    def __init__(self, tol: float = DEFAULT_TOL):
        super().__init__((2,), tol)

    def __repr__(self):
        return "epigraph"

    @property
    def stratum_ids(self):
        return (0, 1, 2, 3)

    def contains(self, x: Point, tol: float | None = None) -> bool:
        self._require_shape(x)
        return float(x.data[1]) >= _graph_height(float(x.data[0])) - self._tol(tol)

    def project(self, x: Point) -> Point:
        self._require_shape(x)
        if float(x.data[1]) >= _graph_height(float(x.data[0])):
            return x
        # Outside points project onto the boundary graph.
        return _graph_point(_nearest_parameter(np.asarray(x.data)))

    def stratum_id(self, x: Point, tol: float | None = None) -> int:
        self._require_shape(x)
        tl = self._tol(tol)
        t = float(x.data[0])
        slack = float(x.data[1]) - _graph_height(t)
        if slack < -tl:
            self._infeasible(x, "below the boundary graph")
        if slack > tl:
            return 3
        if abs(t) <= tl:
            return 0
        return 1 if t < 0.0 else 2

    def _outward_normal(self, t: float) -> np.ndarray:
        if t < 0.0:
            return np.array([0.0, -1.0])
        d = np.array([0.6 * t ** -0.4, -1.0])
        return d / np.linalg.norm(d)

    def dist_regular_normal(self, x: Point, v: Point, tol: float | None = None) -> float:
        self._require_shape(v)
        stratum = self.stratum_id(x, tol)
        if stratum == 3:
            return norm(v)
        if stratum == 0:
            q = _clamp_fourth_quadrant(v.data)
            return float(np.linalg.norm(v.data - q))
        nhat = self._outward_normal(float(x.data[0]))
        s = float(np.dot(v.data, nhat))
        if s <= 0.0:
            return norm(v)
        return float(np.linalg.norm(v.data - s * nhat))

    def in_proximal_normal(self, x: Point, v: Point, tol: float | None = None) -> bool:
        tl = self._tol(tol)
        if self.stratum_id(x, tol) != 0:
            return self.dist_regular_normal(x, v, tol) <= tl
        if self.dist_regular_normal(x, v, tol) > tl:
            return False
        return not (float(v.data[0]) > tl and abs(float(v.data[1])) <= tl)

    def in_general_normal(self, x: Point, v: Point, tol: float | None = None) -> bool:
        # Limits of regular normals at nearby points land inside the regular
        # normal cone, even at the kink, so the general cone adds nothing.
        return self.dist_regular_normal(x, v, tol) <= self._tol(tol)

    def project_tangent(self, x: Point, v: Point, tol: float | None = None) -> Point:
        self._require_shape(v)
        stratum = self.stratum_id(x, tol)
        if stratum == 3:
            return v
        if stratum == 0:
            # Tangent cone at the kink is the second quadrant.
            return Point([min(float(v.data[0]), 0.0), max(float(v.data[1]), 0.0)], (2,))
        nhat = self._outward_normal(float(x.data[0]))
        s = float(np.dot(v.data, nhat))
        if s <= 0.0:
            return v
        return Point(v.data - s * nhat, (2,))

    def random_point(self, rng: np.random.Generator, stratum: int | None = None) -> Point:
        k = int(rng.integers(0, 4)) if stratum is None else int(stratum)
        if k == 0:
            return Point.zeros((2,))
        if k in (1, 2):
            t = float(rng.uniform(0.2, 2.0))
            return _graph_point(-t if k == 1 else t)
        t = float(rng.uniform(-2.0, 2.0))
        return Point([t, _graph_height(t) + float(rng.uniform(0.1, 2.0))], (2,))

    def sample_regular_normal(self, x: Point, v_rng: np.random.Generator,
                              tol: float | None = None) -> Point:
        stratum = self.stratum_id(x, tol)
        if stratum == 3:
            return Point.zeros((2,))
        if stratum == 0:
            g = v_rng.standard_normal(2)
            return Point([abs(g[0]), -abs(g[1])], (2,))
        nhat = self._outward_normal(float(x.data[0]))
        return Point(abs(float(v_rng.standard_normal())) * nhat, (2,))
