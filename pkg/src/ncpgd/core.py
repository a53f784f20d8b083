"""Points, objectives, and gradient checking for the ambient Euclidean space."""

from __future__ import annotations

import numpy as np

__all__ = [
    "ShapeError",
    "Point",
    "Objective",
    "inner",
    "norm",
    "check_gradient",
    "least_squares",
    "constant",
    "quartic",
]


class ShapeError(ValueError):
    """Two points with incompatible shapes were combined."""


class Point:
    """Immutable point of a Euclidean space.

    Coordinates are stored flat (row-major for matrices) together with the
    declared shape, so vectors in R^n and matrices in R^{m x n} share one type
    and matrices automatically carry the Frobenius inner product.
    """

    __slots__ = ("data", "shape")

    def __init__(self, data, shape: tuple[int, ...] | None = None):
        arr = np.asarray(data, dtype=float)
        if shape is None:
            shape = arr.shape
        shape = tuple(int(m) for m in shape)
        if len(shape) not in (1, 2) or any(m <= 0 for m in shape):
            raise ShapeError(f"shape must be (n,) or (m, n) with positive sizes, got {shape}")
        flat = np.ascontiguousarray(arr, dtype=float).reshape(-1)
        size = 1
        for m in shape:
            size *= m
        if flat.size != size:
            raise ShapeError(f"{flat.size} coordinates do not fill shape {shape}")
        if not np.all(np.isfinite(flat)):
            raise ValueError("point has non-finite coordinates")
        flat = flat.copy()
        flat.flags.writeable = False
        object.__setattr__(self, "data", flat)
        object.__setattr__(self, "shape", shape)

    def __setattr__(self, name, value):
        raise AttributeError("Point is immutable")

    @classmethod
    def vector(cls, coords) -> "Point":
        arr = np.asarray(coords, dtype=float).reshape(-1)
        return cls(arr, (arr.size,))

    @classmethod
    def matrix(cls, rows) -> "Point":
        arr = np.asarray(rows, dtype=float)
        if arr.ndim != 2:
            raise ShapeError(f"matrix constructor needs a 2-D array, got ndim={arr.ndim}")
        return cls(arr, arr.shape)

    @classmethod
    def zeros(cls, shape) -> "Point":
        shape = tuple(int(m) for m in shape)
        n = 1
        for m in shape:
            n *= m
        return cls(np.zeros(n), shape)

    def as_array(self) -> np.ndarray:
        """Read-only view of the coordinates in the declared shape."""
        return self.data.reshape(self.shape)

    def _check_same_shape(self, other: "Point"):
        if not isinstance(other, Point):
            raise TypeError(f"expected Point, got {type(other).__name__}")
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "Point") -> "Point":
        self._check_same_shape(other)
        return Point(self.data + other.data, self.shape)

    def __sub__(self, other: "Point") -> "Point":
        self._check_same_shape(other)
        return Point(self.data - other.data, self.shape)

    def __neg__(self) -> "Point":
        return Point(-self.data, self.shape)

    def __mul__(self, scalar) -> "Point":
        return Point(self.data * float(scalar), self.shape)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Point({self.as_array().tolist()!r})"


def inner(a: Point, b: Point) -> float:
    """Euclidean (Frobenius) inner product of two same-shape points."""
    a._check_same_shape(b)
    return float(np.dot(a.data, b.data))


def norm(a: Point) -> float:
    """Euclidean (Frobenius) norm."""
    return float(np.linalg.norm(a.data))


class Objective:
    """Objective with exact value and gradient callables.

    Both callables must be deterministic; the gradient must return a point of
    the same shape as its argument.
    """

    __slots__ = ("_eval", "_grad", "name")

    def __init__(self, eval_fn, grad_fn, name: str = "objective"):
        object.__setattr__(self, "_eval", eval_fn)
        object.__setattr__(self, "_grad", grad_fn)
        object.__setattr__(self, "name", name)

    def __setattr__(self, name, value):
        raise AttributeError("Objective is immutable")

    def eval(self, x: Point) -> float:
        return float(self._eval(x))

    def grad(self, x: Point) -> Point:
        g = self._grad(x)
        if not isinstance(g, Point):
            g = Point(g, x.shape)
        if g.shape != x.shape:
            raise ShapeError(f"gradient shape {g.shape} differs from point shape {x.shape}")
        return g

    def __repr__(self):
        return f"Objective({self.name!r})"


def least_squares(target: Point) -> Objective:
    """f(x) = 0.5 * ||x - target||^2 with gradient x - target."""

    def ev(x: Point) -> float:
        d = x - target
        return 0.5 * float(np.dot(d.data, d.data))

    def gr(x: Point) -> Point:
        return x - target

    return Objective(ev, gr, name="least-squares")


def constant(value: float = 0.0) -> Objective:
    """Constant objective; its gradient vanishes everywhere."""
    value = float(value)
    return Objective(lambda x: value, lambda x: Point(np.zeros(x.data.size), x.shape), name="constant")


def quartic() -> Objective:
    """f(x) = 0.25 * ||x||^4 with gradient ||x||^2 * x."""

    def ev(x: Point) -> float:
        s = float(np.dot(x.data, x.data))
        return 0.25 * s * s

    def gr(x: Point) -> Point:
        s = float(np.dot(x.data, x.data))
        return Point(s * x.data, x.shape)

    return Objective(ev, gr, name="quartic")


def check_gradient(obj: Objective, x: Point, h: float = 1e-6) -> float:
    """Max relative error between obj.grad and central differences at x.

    Per coordinate the error is |cd_i - g_i| / (1 + |g_i|); the maximum over
    coordinates is returned. Raises if h <= 0 or f evaluates non-finite.
    """
    h = float(h)
    if h <= 0.0:
        raise ValueError(f"step h must be positive, got {h}")
    g = obj.grad(x)
    base = x.data
    worst = 0.0
    for i in range(base.size):
        e = np.zeros(base.size)
        e[i] = h
        fp = obj.eval(Point(base + e, x.shape))
        fm = obj.eval(Point(base - e, x.shape))
        if not (np.isfinite(fp) and np.isfinite(fm)):
            raise ValueError(f"objective {obj.name!r} evaluated non-finite near coordinate {i}")
        cd = (fp - fm) / (2.0 * h)
        err = abs(cd - g.data[i]) / (1.0 + abs(g.data[i]))
        if err > worst:
            worst = err
    return worst
