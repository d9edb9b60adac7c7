"""Moduli of continuity, Lipschitz classes H^omega(T, X) and their closure properties."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Sequence

import numpy as np

from .distances import DistanceSpace, Tier
from .order import DEFAULT_LIMIT, REALS_PLUS, AxiomReport, OrderedMonoid, Sample

MAX_MEMBERSHIP_NODES = 512
KNOTS = 33


@dataclass(frozen=True)
class ModulusOfContinuity:
    omega: Callable[[Any], Any]
    monoid: OrderedMonoid
    hm: DistanceSpace
    name: str = "omega"

    def __call__(self, m):
        return self.omega(m)


def identity_modulus(mon: OrderedMonoid, hm: DistanceSpace) -> ModulusOfContinuity:
    return ModulusOfContinuity(lambda m: m, mon, hm, "id")


def power_modulus(alpha: float, hm: DistanceSpace, name: str | None = None) -> ModulusOfContinuity:
    """omega(m) = m**alpha on R+; a modulus of continuity for 0 < alpha <= 1."""
    if alpha == 1:
        return ModulusOfContinuity(lambda m: m, REALS_PLUS, hm, name or "id")
    return ModulusOfContinuity(lambda m: m**alpha, REALS_PLUS, hm, name or f"t^{alpha:g}")


def check_modulus_axioms(w: ModulusOfContinuity, s: Sample, limit: int = DEFAULT_LIMIT) -> AxiomReport:
    mon, hm = w.monoid, w.hm
    rep = AxiomReport(f"modulus {w.name}")
    zero = rep.axiom("omega(theta)=theta")
    v = w(mon.theta)
    zero.record(v == mon.theta, mon.theta, lhs=v, rhs=mon.theta)
    mono = rep.axiom("non-decreasing")
    semi = rep.axiom("semi-additive")
    for m1, m2 in s.tuples(2, limit):
        if mon.leq(m1, m2):
            lhs, rhs = w(m1), w(m2)
            mono.record(mon.leq(lhs, rhs), m1, m2, lhs=lhs, rhs=rhs)
        else:
            mono.checked += 1
        lhs, rhs = hm(w(m1), w(m2)), w(hm(m1, m2))
        semi.record(mon.leq(lhs, rhs), m1, m2, lhs=lhs, rhs=rhs)
    return rep


# ---------------------------------------------------------------------------
# sampled functions


def _stack(vals: list):
    try:
        arr = np.asarray(vals, dtype=float)
    except (TypeError, ValueError):
        return vals
    return arr


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """A map T -> X given pointwise, verified and integrated on ``grid``.

    ``vfn`` is an optional vectorised evaluator over the whole grid.
    """

    fn: Callable[[Any], Any]
    grid: np.ndarray
    vfn: Callable[[np.ndarray], Any] | None = None

    def __post_init__(self):
        if len(self.grid) == 0:
            raise ValueError("grid must be non-empty")

    def __call__(self, t):
        return self.fn(t)

    @cached_property
    def values(self):
        """Grid values: an ndarray for numeric codomains, else a list."""
        if self.vfn is not None:
            return self.vfn(self.grid)
        return _stack([self.fn(t) for t in self.points])

    @cached_property
    def points(self) -> list:
        return self.grid.tolist() if isinstance(self.grid, np.ndarray) else list(self.grid)

    @cached_property
    def point_values(self) -> list:
        vals = self.values
        return vals.tolist() if isinstance(vals, np.ndarray) else list(vals)

    def at(self, t):
        """Value at a grid node, looked up rather than re-evaluated."""
        return self.point_values[self.points.index(t)]

    @classmethod
    def constant(cls, grid, value) -> "SampledFunction":
        n = len(grid)
        if isinstance(value, (int, float, tuple, list, np.ndarray)):
            vfn = lambda g: np.broadcast_to(np.asarray(value, dtype=float), (n,) + np.shape(value)).copy()
        else:
            vfn = lambda g: [value] * n
        return cls(lambda t: value, grid, vfn)

    @classmethod
    def piecewise_linear(cls, knots: np.ndarray, knot_values: np.ndarray, grid) -> "SampledFunction":
        """Linear interpolant through (knots, knot_values); columns are coordinates."""
        knots = np.asarray(knots, dtype=float)
        kv = np.asarray(knot_values, dtype=float)
        if kv.ndim == 1:
            return cls(lambda t: float(np.interp(t, knots, kv)), grid, lambda g: np.interp(g, knots, kv))

        def vfn(g):
            return np.stack([np.interp(g, knots, kv[:, j]) for j in range(kv.shape[1])], axis=-1)

        return cls(lambda t: vfn(np.asarray([t]))[0].tolist(), grid, vfn)


def check_class_membership(
    f: SampledFunction,
    dT: DistanceSpace,
    dX: DistanceSpace,
    w: ModulusOfContinuity | None = None,
    tol: float = 0.0,
) -> AxiomReport:
    """h_X(f(t1), f(t2)) <= omega(h_T(t1, t2)) on every grid pair; omega=None is Id.

    ``tol`` > 0 adds slack for values produced by floating-point scaling.
    """
    pts = f.points
    if len(pts) > MAX_MEMBERSHIP_NODES:
        raise ValueError(f"membership grid has {len(pts)} nodes, cap is {MAX_MEMBERSHIP_NODES}")
    omega = w.omega if w is not None else (lambda m: m)
    vals = f.point_values
    mon = dX.monoid
    leq = mon.leq if tol == 0 else (lambda a, b: mon.leq(a, mon.plus(b, mon.embed(tol))))
    rep = AxiomReport(f"H^{w.name if w else 'id'} membership")
    res = rep.axiom("membership")
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            lhs = dX.h(vals[i], vals[j])
            rhs = omega(dT.h(pts[i], pts[j]))
            res.record(leq(lhs, rhs), pts[i], pts[j], lhs=lhs, rhs=rhs)
    return rep


def compose(f: SampledFunction, g: SampledFunction | Callable) -> SampledFunction:
    """g o f on f's grid."""
    gf = g.fn if isinstance(g, SampledFunction) else g
    return SampledFunction(lambda t: gf(f.fn(t)), f.grid)


def distance_section(f: SampledFunction, dX: DistanceSpace, t) -> SampledFunction:
    """tau -> h_X(f(tau), f(t)); needs a declared pseudo-metric h_X."""
    dX.require(Tier.PSEUDO_METRIC)
    ft = f.at(t)
    return SampledFunction(lambda tau: dX.h(f.fn(tau), ft), f.grid)


def transform_distance(dT: DistanceSpace, w: ModulusOfContinuity) -> DistanceSpace:
    h, omega = dT.h, w.omega
    return DistanceSpace(lambda a, b: omega(h(a, b)), dT.monoid, dT.tier, f"{w.name}({dT.name})")


# ---------------------------------------------------------------------------
# random members


def random_lipschitz(
    rng: np.random.Generator,
    grid,
    dim: int | None = None,
    coordinatewise: bool = False,
    lo: float = -1.0,
    hi: float = 1.0,
    knots: int = KNOTS,
) -> SampledFunction:
    """Random piecewise-linear 1-Lipschitz map [lo, hi] -> R or R^dim.

    Scalar slopes are drawn in [-1, 1]. For ``dim`` set, each segment velocity
    has Euclidean norm <= 1, or each coordinate slope lies in [-1, 1] when
    ``coordinatewise``.
    """
    kn = np.linspace(lo, hi, knots)
    dt = np.diff(kn)
    if dim is None:
        slopes = rng.uniform(-1.0, 1.0, size=knots - 1)
        start = rng.uniform(-1.0, 1.0)
        kv = np.concatenate([[start], start + np.cumsum(slopes * dt)])
        return SampledFunction.piecewise_linear(kn, kv, grid)
    if coordinatewise:
        vel = rng.uniform(-1.0, 1.0, size=(knots - 1, dim))
    else:
        vel = rng.normal(size=(knots - 1, dim))
        vel /= np.linalg.norm(vel, axis=1, keepdims=True)
        vel *= rng.uniform(0.0, 1.0, size=(knots - 1, 1))
    start = rng.uniform(-1.0, 1.0, size=dim)
    kv = np.vstack([start, start + np.cumsum(vel * dt[:, None], axis=0)])
    return SampledFunction.piecewise_linear(kn, kv, grid)


def random_holder(rng: np.random.Generator, grid, alpha: float, terms: int = 4) -> SampledFunction:
    """Random scalar member of H^omega([-1, 1], R) for omega(t) = t**alpha.

    A convex combination of +-|tau - s|**alpha bumps and a Lipschitz part
    scaled by 2**(alpha - 1), plus a constant; each summand is in the class
    and the class is convex.
    """
    if alpha == 1:
        return random_lipschitz(rng, grid)
    g = np.asarray(grid, dtype=float)
    weights = rng.dirichlet(np.ones(terms + 1))
    centers = rng.uniform(-1.0, 1.0, size=terms)
    signs = rng.choice([-1.0, 1.0], size=terms)
    lip = random_lipschitz(rng, grid)
    scale = 2.0 ** (alpha - 1)
    shift = rng.uniform(-1.0, 1.0)

    def vfn(x):
        x = np.asarray(x, dtype=float)
        out = weights[-1] * scale * lip.vfn(x)
        for w, c, s in zip(weights, centers, signs):
            out = out + w * s * np.abs(x - c) ** alpha
        return out + shift

    return SampledFunction(lambda t: float(vfn(np.asarray([t]))[0]), g, vfn)
