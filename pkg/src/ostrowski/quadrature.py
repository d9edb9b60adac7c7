"""Grids on an interval and composite trapezoid quadrature.

Trapezoid sums are exact (to rounding) for piecewise-linear integrands whose
breakpoints are grid nodes, which is why every grid registers its breakpoints.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

SNAP = 1e-12


@dataclass(frozen=True, eq=False)
class Grid:
    nodes: np.ndarray

    def __post_init__(self):
        n = np.asarray(self.nodes, dtype=float)
        if n.ndim != 1 or len(n) < 2:
            raise ValueError("grid needs at least two nodes")
        if np.any(np.diff(n) <= 0):
            raise ValueError("grid nodes must be strictly increasing")
        object.__setattr__(self, "nodes", n)

    @classmethod
    def uniform(
        cls, n: int, a: float = -1.0, b: float = 1.0, breakpoints: Iterable[float] = ()
    ) -> "Grid":
        """``n`` equispaced nodes on [a, b] with ``breakpoints`` inserted exactly.

        A breakpoint within 1e-12 of an existing node replaces that node.
        """
        if n < 2:
            raise ValueError("need at least two nodes")
        nodes = np.linspace(a, b, n)
        extra = []
        for p in breakpoints:
            p = float(p)
            if not a <= p <= b:
                raise ValueError(f"breakpoint {p} outside [{a}, {b}]")
            i = int(np.argmin(np.abs(nodes - p)))
            if abs(nodes[i] - p) <= SNAP:
                nodes[i] = p
            else:
                extra.append(p)
        return cls(np.unique(np.concatenate([nodes, extra])))

    @property
    def a(self) -> float:
        return float(self.nodes[0])

    @property
    def b(self) -> float:
        return float(self.nodes[-1])

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, t) -> bool:
        return bool(np.any(self.nodes == t))


def trapezoid_integral(values, nodes) -> float | np.ndarray:
    """Composite trapezoid rule along the first axis of ``values``."""
    return np.trapezoid(np.asarray(values, dtype=float), np.asarray(nodes, dtype=float), axis=0)
