"""Compact subsets of the real line and their Hausdorff distance.

A :class:`RealSet` is a finite union of closed intervals. Finite point sets
are unions of degenerate intervals, convex hulls are single intervals, so
both the values of a set-valued function and its convexified integral live
in one type and the Hausdorff distance between them is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

MAX_POINTS = 64


class SetTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class RealSet:
    components: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("RealSet must be non-empty")

    @classmethod
    def points(cls, pts: Iterable[float]) -> "RealSet":
        vals = sorted({float(p) for p in pts})
        if len(vals) > MAX_POINTS:
            raise SetTooLarge(f"{len(vals)} points exceeds cap {MAX_POINTS}")
        return cls(tuple((v, v) for v in vals))

    @classmethod
    def interval(cls, lo: float, hi: float) -> "RealSet":
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        return cls(((float(lo), float(hi)),))

    @classmethod
    def union(cls, parts: Iterable[tuple[float, float]]) -> "RealSet":
        merged: list[list[float]] = []
        for lo, hi in sorted(parts):
            if merged and lo <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        return cls(tuple((float(a), float(b)) for a, b in merged))

    @property
    def lo(self) -> float:
        return self.components[0][0]

    @property
    def hi(self) -> float:
        return self.components[-1][1]

    @property
    def is_finite(self) -> bool:
        return all(a == b for a, b in self.components)

    @property
    def is_convex(self) -> bool:
        return len(self.components) == 1

    def hull(self) -> "RealSet":
        return RealSet.interval(self.lo, self.hi)

    def scale(self, c: float) -> "RealSet":
        if c < 0:
            raise ValueError("only non-negative scaling is supported")
        return RealSet(tuple((c * a, c * b) for a, b in self.components))

    def __add__(self, other: "RealSet") -> "RealSet":
        """Minkowski sum."""
        return RealSet.union(
            (a + c, b + d) for a, b in self.components for c, d in other.components
        )

    def distance_to(self, x: float) -> float:
        return min(0.0 if a <= x <= b else min(abs(x - a), abs(x - b)) for a, b in self.components)

    def __repr__(self) -> str:
        if self.is_finite:
            return "{" + ", ".join(repr(a) for a, _ in self.components) + "}"
        return " u ".join(f"[{a!r}, {b!r}]" for a, b in self.components)


def _directed(a: RealSet, b: RealSet) -> float:
    # dist(., b) is piecewise linear on each component of a; its maxima sit at
    # component endpoints or at midpoints of gaps of b.
    gaps = [
        0.5 * (b.components[i][1] + b.components[i + 1][0]) for i in range(len(b.components) - 1)
    ]
    best = 0.0
    for lo, hi in a.components:
        cands = [lo, hi] + [g for g in gaps if lo < g < hi]
        best = max(best, max(b.distance_to(x) for x in cands))
    return best


def hausdorff(a: RealSet, b: RealSet) -> float:
    if a.is_finite and b.is_finite:
        return hausdorff_points(
            np.array([p for p, _ in a.components]), np.array([p for p, _ in b.components])
        )
    return max(_directed(a, b), _directed(b, a))


def hausdorff_points(a: np.ndarray, b: np.ndarray) -> float:
    """Brute-force max-min Hausdorff distance between finite point sets.

    Rows are points; 1-D arrays are treated as points on the line.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.ndim == 1:
        a = a[:, None]
    if b.ndim == 1:
        b = b[:, None]
    diff = a[:, None, :] - b[None, :, :]
    d = np.sqrt(np.sum(diff * diff, axis=-1)) if a.shape[1] > 1 else np.abs(diff[..., 0])
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def random_finite_set(rng: np.random.Generator, max_points: int = 8, denom: int = 8) -> RealSet:
    k = int(rng.integers(1, max_points + 1))
    return RealSet.points(rng.integers(-8 * denom, 8 * denom + 1, size=k) / denom)
