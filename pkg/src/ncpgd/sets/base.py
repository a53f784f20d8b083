"""Feasible-set interface and set-generic cone utilities."""

from __future__ import annotations

from abc import ABC, abstractmethod

import numpy as np

from ..core import Point, ShapeError, inner, norm

DEFAULT_TOL = 1e-9

# Step-length grid used by the sampling-based proximal-normal certificate.
WITNESS_ALPHA_GRID = tuple(2.0 ** -k for k in range(21))


class InfeasiblePointError(ValueError):
    """A cone query was issued at a point that is not on the set."""


class FeasibleSet(ABC):
    """Closed subset of a Euclidean space with projection and cone queries.

    Every implementation provides an exact (up to the stated tolerance)
    metric projection, membership testing, stratum identification, and
    closed-form distance/membership queries against the tangent, regular
    normal, proximal normal, and general normal cones where those forms are
    known. Set objects are immutable and all queries are pure, so one object
    can serve any number of concurrent solver runs.
    """

    def __init__(self, ambient_shape: tuple[int, ...], tol: float = DEFAULT_TOL):
        self.ambient_shape = tuple(int(m) for m in ambient_shape)
        self.tol = float(tol)
        if self.tol <= 0.0:
            raise ValueError("tolerance must be positive")

    # -- helpers ------------------------------------------------------------

    def _tol(self, tol: float | None) -> float:
        return self.tol if tol is None else float(tol)

    def _require_shape(self, x: Point):
        if x.shape != self.ambient_shape:
            raise ShapeError(f"{self!r} lives in shape {self.ambient_shape}, got {x.shape}")

    def _infeasible(self, x: Point, why: str):
        raise InfeasiblePointError(f"point not on {self!r}: {why} (x={x!r})")

    # -- interface ----------------------------------------------------------

    @abstractmethod
    def project(self, x: Point) -> Point:
        """One deterministic element of the metric projection of x."""

    def contains(self, x: Point, tol: float | None = None) -> bool:
        self._require_shape(x)
        return norm(x - self.project(x)) <= self._tol(tol)

    @abstractmethod
    def stratum_id(self, x: Point, tol: float | None = None) -> int:
        """Index of the smooth stratum the feasible point x lies on."""

    @property
    @abstractmethod
    def stratum_ids(self) -> tuple[int, ...]:
        """All stratum indices, lowest-dimensional first."""

    @abstractmethod
    def dist_regular_normal(self, x: Point, v: Point, tol: float | None = None) -> float:
        """Distance from v to the regular normal cone at the feasible point x."""

    def dist_proximal_normal(self, x: Point, v: Point, tol: float | None = None) -> float:
        """Infimum distance from v to the proximal normal cone at x.

        For every shipped set this equals the regular-normal distance: either
        the two cones coincide, or (2-D example sets at their kink) the
        proximal cone is dense in the regular one, so the infimum is
        unchanged. Membership can still differ; see in_proximal_normal.
        """
        return self.dist_regular_normal(x, v, tol)

    def in_proximal_normal(self, x: Point, v: Point, tol: float | None = None) -> bool:
        """Closed-form proximal-normal membership (exact, unlike the witness)."""
        return self.dist_regular_normal(x, v, tol) <= self._tol(tol)

    @abstractmethod
    def in_general_normal(self, x: Point, v: Point, tol: float | None = None) -> bool:
        """Membership of v in the general (limiting) normal cone at x."""

    def project_tangent(self, x: Point, v: Point, tol: float | None = None) -> Point:
        """One element of the metric projection of v onto the tangent cone at x."""
        raise NotImplementedError(f"tangent projection is not available for {self!r}")

    @abstractmethod
    def random_point(self, rng: np.random.Generator, stratum: int | None = None) -> Point:
        """Random feasible point, optionally on a prescribed stratum."""

    @abstractmethod
    def sample_regular_normal(self, x: Point, v_rng: np.random.Generator,
                              tol: float | None = None) -> Point:
        """Random element of the regular normal cone at the feasible point x."""


def proximal_normal_witness(set_: FeasibleSet, x: Point, v: Point,
                            alphas=WITNESS_ALPHA_GRID, tol: float | None = None) -> float | None:
    """First trial step length certifying v as a proximal normal at x.

    Checks x in P_C(x + a*v) by comparing a*||v|| with the achieved distance
    d(x + a*v, C); the comparison is relative, so the certificate does not
    become vacuous at small a. Returns the first successful a, else None.
    This is a sufficient certificate usable on any set; directions that sit
    on a removed boundary ray of a non-closed proximal cone can defeat it at
    very small step lengths, which is why the 2-D example sets also carry a
    closed-form in_proximal_normal.
    """
    tol = set_.tol if tol is None else float(tol)
    nv = norm(v)
    alphas = tuple(float(a) for a in alphas)
    if not alphas:
        return None
    if nv == 0.0:
        return alphas[0]
    for a in alphas:
        if a <= 0.0:
            raise ValueError("witness step lengths must be positive")
        z = x + a * v
        y = set_.project(z)
        gap = a * nv - norm(z - y)
        if gap <= tol * a * max(1.0, nv):
            return a
    return None


def in_proximal_normal_witness(set_: FeasibleSet, x: Point, v: Point,
                               alphas=WITNESS_ALPHA_GRID, tol: float | None = None) -> bool:
    return proximal_normal_witness(set_, x, v, alphas, tol) is not None


def projected_translation_check(set_: FeasibleSet, x: Point, v: Point,
                                slack: float = 1e-9) -> tuple[bool, bool]:
    """Check the two projected-translation inequalities at (x, v).

    With y = project(x - v), tests ||y - x|| <= 2||v|| and
    2<v, y - x> <= -||y - x||^2, each with a small numerical slack. Used as a
    property-test oracle; both must hold for every feasible x and ambient v.
    """
    y = set_.project(x - v)
    d = norm(y - x)
    nv = norm(v)
    ok_dist = d <= 2.0 * nv + slack * max(1.0, nv)
    ok_ip = 2.0 * inner(v, y - x) <= -d * d + slack * max(1.0, nv * nv)
    return ok_dist, ok_ip
