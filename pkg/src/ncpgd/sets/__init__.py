"""Closed feasible sets with exact projections and closed-form cone queries."""

from __future__ import annotations

from .base import (
    DEFAULT_TOL,
    WITNESS_ALPHA_GRID,
    FeasibleSet,
    InfeasiblePointError,
    in_proximal_normal_witness,
    projected_translation_check,
    proximal_normal_witness,
)
from .curves import CurveSet, EpigraphSet
from .lowrank import LowRankSet, PsdLowRankSet
from .sparse import NonnegSparseSet, SparseSet

__all__ = [
    "DEFAULT_TOL",
    "WITNESS_ALPHA_GRID",
    "FeasibleSet",
    "InfeasiblePointError",
    "SparseSet",
    "NonnegSparseSet",
    "LowRankSet",
    "PsdLowRankSet",
    "CurveSet",
    "EpigraphSet",
    "from_spec",
    "proximal_normal_witness",
    "in_proximal_normal_witness",
    "projected_translation_check",
]


def _parse_params(kind: str, text: str, required: tuple[str, ...]) -> dict[str, int]:
    params: dict[str, int] = {}
    if text:
        for item in text.split(","):
            key, sep, value = item.partition("=")
            key = key.strip()
            if not sep or not key:
                raise ValueError(f"set spec {kind!r}: expected key=value, got {item!r}")
            try:
                params[key] = int(value)
            except ValueError:
                raise ValueError(f"set spec {kind!r}: field {key!r} must be an integer, got {value!r}") from None
    missing = [k for k in required if k not in params]
    if missing:
        raise ValueError(f"set spec {kind!r}: missing field(s) {', '.join(missing)}")
    extra = [k for k in params if k not in required]
    if extra:
        raise ValueError(f"set spec {kind!r}: unknown field(s) {', '.join(extra)}")
    return params


def from_spec(spec: str) -> FeasibleSet:
    """Build a feasible set from a string spec.

    Recognized forms: ``sparse:n=10,s=3``, ``nonneg-sparse:n=10,s=3``,
    ``lowrank:m=8,n=8,r=2``, ``psd:n=6,r=2``, ``curve``, ``epigraph``.
    """
    kind, _, rest = spec.strip().partition(":")
    kind = kind.strip()
    if kind == "sparse":
        p = _parse_params(kind, rest, ("n", "s"))
        return SparseSet(p["n"], p["s"])
    if kind == "nonneg-sparse":
        p = _parse_params(kind, rest, ("n", "s"))
        return NonnegSparseSet(p["n"], p["s"])
    if kind == "lowrank":
        p = _parse_params(kind, rest, ("m", "n", "r"))
        return LowRankSet(p["m"], p["n"], p["r"])
    if kind == "psd":
        p = _parse_params(kind, rest, ("n", "r"))
        return PsdLowRankSet(p["n"], p["r"])
    if kind in ("curve", "epigraph"):
        if rest:
            raise ValueError(f"set spec {kind!r} takes no parameters, got {rest!r}")
        return CurveSet() if kind == "curve" else EpigraphSet()
    raise ValueError(
        f"unknown set kind {kind!r}; expected one of sparse, nonneg-sparse, lowrank, psd, curve, epigraph"
    )
