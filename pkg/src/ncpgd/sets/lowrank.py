"""Bounded-rank matrix sets."""

from __future__ import annotations

import numpy as np

from ..core import Point, norm
from .base import DEFAULT_TOL, FeasibleSet


def _fix_gauge(U: np.ndarray, Vt: np.ndarray | None = None):
    """Sign convention: first sizable entry of each left vector positive."""
    U = U.copy()
    Vt = None if Vt is None else Vt.copy()
    for j in range(U.shape[1]):
        col = U[:, j]
        top = np.abs(col).max(initial=0.0)
        big = np.flatnonzero(np.abs(col) > 1e-12 * top)
        if big.size and col[big[0]] < 0.0:
            U[:, j] = -col
            if Vt is not None:
                Vt[j, :] = -Vt[j, :]
    return U, Vt


def _sym(M: np.ndarray) -> np.ndarray:
    return 0.5 * (M + M.T)


class LowRankSet(FeasibleSet):
    """Matrices of R^{m x n} with rank at most r (0 < r < min(m, n)).

    Strata are indexed by rank. Projection is rank-r truncation of the
    singular value decomposition.
    """

    def __init__(self, m: int, n: int, r: int, tol: float = DEFAULT_TOL):
        m, n, r = int(m), int(n), int(r)
        if not 0 < r < min(m, n):
            raise ValueError(f"need 0 < r < min(m, n), got m={m}, n={n}, r={r}")
        super().__init__((m, n), tol)
        self.m = m
        self.n = n
        self.r = r

    def __repr__(self):
        return f"lowrank:m={self.m},n={self.n},r={self.r}"

    @property
    def stratum_ids(self):
        return tuple(range(self.r + 1))

    def _svd(self, x: Point):
        U, s, Vt = np.linalg.svd(x.as_array(), full_matrices=True)
        U, Vt = _fix_gauge(U, Vt)
        return U, s, Vt

    def _factors(self, x: Point, tol: float | None):
        self._require_shape(x)
        t = self._tol(tol)
        U, s, Vt = self._svd(x)
        k = int(np.count_nonzero(s > t))
        if k > self.r:
            self._infeasible(x, f"numerical rank {k} exceeds {self.r}")
        return U, s, Vt, k

    def project(self, x: Point) -> Point:
        self._require_shape(x)
        U, s, Vt = np.linalg.svd(x.as_array(), full_matrices=False)
        U, Vt = _fix_gauge(U, Vt)
        Y = (U[:, :self.r] * s[:self.r]) @ Vt[:self.r]
        return Point(Y, (self.m, self.n))

    def stratum_id(self, x: Point, tol: float | None = None) -> int:
        return self._factors(x, tol)[3]

    def _ortho_block(self, W: np.ndarray, U: np.ndarray, Vt: np.ndarray, k: int) -> np.ndarray:
        # P_{U^perp} W P_{V^perp} in the singular basis of x.
        U2 = U[:, k:]
        V2 = Vt[k:].T
        return U2 @ (U2.T @ W @ V2) @ V2.T

    def dist_regular_normal(self, x: Point, v: Point, tol: float | None = None) -> float:
        self._require_shape(v)
        U, _, Vt, k = self._factors(x, tol)
        W = v.as_array()
        if k < self.r:
            return norm(v)
        B = self._ortho_block(W, U, Vt, k)
        return float(np.linalg.norm(W - B))

    def in_general_normal(self, x: Point, v: Point, tol: float | None = None) -> bool:
        self._require_shape(v)
        t = self._tol(tol)
        U, _, Vt, k = self._factors(x, tol)
        W = v.as_array()
        scale = max(1.0, float(np.linalg.norm(W)))
        if k:
            if np.linalg.norm(U[:, :k].T @ W) > t * scale:
                return False
            if np.linalg.norm(W @ Vt[:k].T) > t * scale:
                return False
        sw = np.linalg.svd(W, compute_uv=False)
        rank_w = int(np.count_nonzero(sw > t * scale))
        return rank_w <= min(self.m, self.n) - self.r

    def project_tangent(self, x: Point, v: Point, tol: float | None = None) -> Point:
        self._require_shape(v)
        U, _, Vt, k = self._factors(x, tol)
        W = v.as_array()
        B = self._ortho_block(W, U, Vt, k)
        out = W - B
        free = self.r - k
        if free > 0:
            Ub, sb, Vbt = np.linalg.svd(B, full_matrices=False)
            Ub, Vbt = _fix_gauge(Ub, Vbt)
            out = out + (Ub[:, :free] * sb[:free]) @ Vbt[:free]
        return Point(out, (self.m, self.n))

    def random_point(self, rng: np.random.Generator, stratum: int | None = None) -> Point:
        k = int(rng.integers(0, self.r + 1)) if stratum is None else int(stratum)
        if not 0 <= k <= self.r:
            raise ValueError(f"stratum must be in 0..{self.r}, got {k}")
        if k == 0:
            return Point.zeros((self.m, self.n))
        Qu, _ = np.linalg.qr(rng.standard_normal((self.m, k)))
        Qv, _ = np.linalg.qr(rng.standard_normal((self.n, k)))
        sigma = rng.uniform(0.5, 1.5, size=k)
        return Point((Qu * sigma) @ Qv.T, (self.m, self.n))

    def sample_regular_normal(self, x: Point, v_rng: np.random.Generator,
                              tol: float | None = None) -> Point:
        U, _, Vt, k = self._factors(x, tol)
        if k < self.r:
            return Point.zeros((self.m, self.n))
        G = v_rng.standard_normal((self.m, self.n))
        return Point(self._ortho_block(G, U, Vt, k), (self.m, self.n))


class PsdLowRankSet(FeasibleSet):
    """Symmetric positive-semidefinite order-n matrices with rank at most r.

    The ambient space is all of R^{n x n}; projection first symmetrizes, then
    keeps the r largest eigenvalues clamped at zero. Strata are indexed by
    rank.
    """

    def __init__(self, n: int, r: int, tol: float = DEFAULT_TOL):
        n, r = int(n), int(r)
        if not 0 < r < n:
            raise ValueError(f"need 0 < r < n, got n={n}, r={r}")
        super().__init__((n, n), tol)
        self.n = n
        self.r = r

    def __repr__(self):
        return f"psd:n={self.n},r={self.r}"

    @property
    def stratum_ids(self):
        return tuple(range(self.r + 1))

    def project(self, x: Point) -> Point:
        self._require_shape(x)
        S = _sym(x.as_array())
        w, Q = np.linalg.eigh(S)
        Q, _ = _fix_gauge(Q)
        lam = np.maximum(w[self.n - self.r:], 0.0)
        Qr = Q[:, self.n - self.r:]
        return Point((Qr * lam) @ Qr.T, (self.n, self.n))

    def _eig(self, x: Point, tol: float | None):
        self._require_shape(x)
        t = self._tol(tol)
        M = x.as_array()
        skew = 0.5 * (M - M.T)
        if np.linalg.norm(skew) > t * max(1.0, float(np.linalg.norm(M))):
            self._infeasible(x, "not symmetric")
        w, Q = np.linalg.eigh(_sym(M))
        Q, _ = _fix_gauge(Q)
        if w[0] < -t:
            self._infeasible(x, f"negative eigenvalue {w[0]:.3e}")
        k = int(np.count_nonzero(w > t))
        if k > self.r:
            self._infeasible(x, f"numerical rank {k} exceeds {self.r}")
        return w, Q, k

    def stratum_id(self, x: Point, tol: float | None = None) -> int:
        return self._eig(x, tol)[2]

    def dist_regular_normal(self, x: Point, v: Point, tol: float | None = None) -> float:
        self._require_shape(v)
        _, Q, k = self._eig(x, tol)
        W = _sym(v.as_array())
        # Range basis = eigenvectors of the k positive eigenvalues (last k
        # columns of the ascending eigendecomposition); the rest span the kernel.
        U_perp = Q[:, :self.n - k]
        B = U_perp.T @ W @ U_perp
        if k == self.r:
            nearest = U_perp @ B @ U_perp.T
        else:
            wb, Qb = np.linalg.eigh(B)
            Bm = (Qb * np.minimum(wb, 0.0)) @ Qb.T
            nearest = U_perp @ Bm @ U_perp.T
        return float(np.linalg.norm(W - nearest))

    def in_general_normal(self, x: Point, v: Point, tol: float | None = None) -> bool:
        self._require_shape(v)
        t = self._tol(tol)
        _, Q, k = self._eig(x, tol)
        W = _sym(v.as_array())
        scale = max(1.0, float(np.linalg.norm(v.as_array())))
        U = Q[:, self.n - k:]
        if k and np.linalg.norm(W @ U) > t * scale:
            return False
        U_perp = Q[:, :self.n - k]
        wb = np.linalg.eigvalsh(U_perp.T @ W @ U_perp)
        rank_b = int(np.count_nonzero(np.abs(wb) > t * scale))
        if rank_b <= self.n - self.r:
            return True
        return bool(np.max(wb, initial=0.0) <= t * scale)

    def random_point(self, rng: np.random.Generator, stratum: int | None = None) -> Point:
        k = int(rng.integers(0, self.r + 1)) if stratum is None else int(stratum)
        if not 0 <= k <= self.r:
            raise ValueError(f"stratum must be in 0..{self.r}, got {k}")
        if k == 0:
            return Point.zeros((self.n, self.n))
        Q, _ = np.linalg.qr(rng.standard_normal((self.n, k)))
        lam = rng.uniform(0.5, 1.5, size=k)
        return Point((Q * lam) @ Q.T, (self.n, self.n))

    def sample_regular_normal(self, x: Point, v_rng: np.random.Generator,
                              tol: float | None = None) -> Point:
        _, Q, k = self._eig(x, tol)
        A = v_rng.standard_normal((self.n, self.n))
        skew = 0.5 * (A - A.T)
        U_perp = Q[:, :self.n - k]
        G = v_rng.standard_normal((self.n - k, self.n - k))
        if k == self.r:
            B = _sym(G)
        else:
            B = -(G @ G.T) / np.sqrt(self.n - k)
        return Point(skew + U_perp @ B @ U_perp.T, (self.n, self.n))
