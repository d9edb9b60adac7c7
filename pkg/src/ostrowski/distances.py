"""M-valued distances, the agreement condition, and the e-function metric.

A :class:`DistanceSpace` only *declares* its strength; nothing is verified at
construction. The ``check_*`` functions audit a declared tier on a sample.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Generic, TypeVar

import numpy as np

from .order import (
    DEFAULT_LIMIT,
    REALS_PLUS,
    AxiomReport,
    OrderedMonoid,
    Sample,
    orthant,
)
from .sets import hausdorff

P = TypeVar("P")
M = TypeVar("M")


class Tier(enum.Flag):
    DISTANCE = 0
    PSEUDO_METRIC = enum.auto()
    METRIC = enum.auto()


class TierViolation(ValueError):
    pass


@dataclass(frozen=True)
class DistanceSpace(Generic[P, M]):
    h: Callable[[P, P], M]
    monoid: OrderedMonoid[M]
    tier: Tier = Tier.DISTANCE
    name: str = ""

    def __call__(self, x: P, y: P) -> M:
        return self.h(x, y)

    def require(self, tier: Tier) -> None:
        if tier not in self.tier:
            raise TierViolation(f"{self.name or 'space'} is not declared {tier.name}")


@dataclass(frozen=True)
class EFunction(Generic[M]):
    e: Callable[[M, M], M]
    name: str = ""

    def __call__(self, x: M, y: M) -> M:
        return self.e(x, y)


# ---------------------------------------------------------------------------
# audits


def check_distance_axioms(d: DistanceSpace, s: Sample, limit: int = DEFAULT_LIMIT) -> AxiomReport:
    theta = d.monoid.theta
    rep = AxiomReport(f"distance {d.name}")
    zero = rep.axiom("h(x,x)=theta")
    for x in s:
        v = d.h(x, x)
        zero.record(v == theta, x, lhs=v, rhs=theta)
    sym = rep.axiom("symmetric")
    for x, y in s.tuples(2, limit):
        a, b = d.h(x, y), d.h(y, x)
        sym.record(a == b, x, y, lhs=a, rhs=b)
    return rep


def check_metric_axioms(d: DistanceSpace, s: Sample, limit: int = DEFAULT_LIMIT) -> AxiomReport:
    mon = d.monoid
    rep = check_distance_axioms(d, s, limit)
    rep.subject = f"metric {d.name}"
    ident = rep.axiom("h(x,y)=theta iff x=y")
    for x, y in s.tuples(2, limit):
        v = d.h(x, y)
        ident.record((v == mon.theta) == (x == y), x, y, lhs=v)
    tri = rep.axiom("triangle")
    for x, y, z in s.tuples(3, limit):
        lhs = d.h(x, y)
        rhs = mon.plus(d.h(x, z), d.h(z, y))
        tri.record(mon.leq(lhs, rhs), x, y, z, lhs=lhs, rhs=rhs)
    return rep


def check_agreement(
    d: DistanceSpace, hm: DistanceSpace, s: Sample, limit: int = DEFAULT_LIMIT
) -> AxiomReport:
    """h_M(h(x,x1), h(x,x2)) <= h(x1,x2) over sampled triples (x, x1, x2)."""
    mon = d.monoid
    rep = AxiomReport(f"agreement {d.name} with {hm.name}")
    agree = rep.axiom("agreement")
    for x, x1, x2 in s.tuples(3, limit):
        lhs = hm.h(d.h(x, x1), d.h(x, x2))
        rhs = d.h(x1, x2)
        agree.record(mon.leq(lhs, rhs), x, x1, x2, lhs=lhs, rhs=rhs)
    return rep


def check_declared(
    d: DistanceSpace, s: Sample, hm: DistanceSpace | None = None, limit: int = DEFAULT_LIMIT
) -> AxiomReport:
    """Audit everything the declared tier promises."""
    rep = check_metric_axioms(d, s, limit) if Tier.METRIC in d.tier else check_distance_axioms(d, s, limit)
    if Tier.PSEUDO_METRIC in d.tier:
        if hm is None:
            raise ValueError("pseudo-metric audit needs the ambient distance on M")
        rep.extend(check_agreement(d, hm, s, limit))
    rep.subject = f"{d.tier} {d.name}"
    return rep


def check_e_axioms(e: EFunction, mon: OrderedMonoid, s: Sample, limit: int = DEFAULT_LIMIT) -> AxiomReport:
    leq, plus, theta = mon.leq, mon.plus, mon.theta
    rep = AxiomReport(f"e-function {e.name} on {mon.name}")
    order = rep.axiom("x<=y iff e(x,y)=theta")
    for x, y in s.tuples(2, limit):
        v = e(x, y)
        order.record(leq(x, y) == (v == theta), x, y, lhs=v)
    bound = rep.axiom("e(x,theta)<=x")
    for x in s:
        v = e(x, theta)
        bound.record(leq(v, x), x, lhs=v, rhs=x)
    tri = rep.axiom("e triangle")
    shift = rep.axiom("e shift")
    mono = rep.axiom("monotone in first argument")
    for x, y, z in s.tuples(3, limit):
        lhs, rhs = e(x, y), plus(e(x, z), e(z, y))
        tri.record(leq(lhs, rhs), x, y, z, lhs=lhs, rhs=rhs)
        lhs, rhs = e(plus(z, x), plus(z, y)), e(x, y)
        shift.record(leq(lhs, rhs), x, y, z, lhs=lhs, rhs=rhs)
        if leq(x, y):
            lhs, rhs = e(x, z), e(y, z)
            mono.record(leq(lhs, rhs), x, y, z, lhs=lhs, rhs=rhs)
        else:
            mono.checked += 1
    return rep


def construct_metric_from_e(e: EFunction, mon: OrderedMonoid) -> DistanceSpace:
    """h_M(x, y) = sup{e(x, y), e(y, x)}; NoSupremum propagates on evaluation."""

    def h(x, y):
        return mon.sup(e(x, y), e(y, x))

    return DistanceSpace(h, mon, Tier.METRIC | Tier.PSEUDO_METRIC, name=f"sup-e {mon.name}")


# ---------------------------------------------------------------------------
# fixtures


def positive_part(k: int | None = None) -> EFunction:
    """e(x, y) = max{x - y, 0}, componentwise for tuples when ``k`` is given."""
    if k is None:
        return EFunction(lambda x, y: max(x - y, 0.0), "max(x-y,0)")
    return EFunction(
        lambda x, y: tuple(max(a - b, 0.0) for a, b in zip(x, y)), f"max(x-y,0)^{k}"
    )


ABS = construct_metric_from_e(positive_part(), REALS_PLUS)


def ambient(mon: OrderedMonoid) -> DistanceSpace:
    """The e-constructed metric on a built-in monoid."""
    if mon is REALS_PLUS:
        return ABS
    k = len(mon.theta)
    return construct_metric_from_e(positive_part(k), mon)


def absolute(name: str = "|x-y|") -> DistanceSpace:
    return DistanceSpace(lambda x, y: abs(x - y), REALS_PLUS, Tier.METRIC | Tier.PSEUDO_METRIC, name)


def euclidean() -> DistanceSpace:
    def h(x, y):
        return float(np.linalg.norm(np.subtract(x, y)))

    return DistanceSpace(h, REALS_PLUS, Tier.METRIC | Tier.PSEUDO_METRIC, "euclidean")


def hausdorff_space() -> DistanceSpace:
    return DistanceSpace(hausdorff, REALS_PLUS, Tier.METRIC | Tier.PSEUDO_METRIC, "hausdorff")


def coordinate_distance(k: int) -> DistanceSpace:
    """Tuple-valued distance (|x_1-y_1|, ..., |x_k-y_k|) on R^k, valued in R+^k."""
    return DistanceSpace(
        lambda x, y: tuple(abs(a - b) for a, b in zip(x, y)),
        orthant(k),
        Tier.METRIC | Tier.PSEUDO_METRIC,
        f"coordinate |.|^{k}",
    )


def discrete_metric() -> DistanceSpace:
    """0 on the diagonal, 1 elsewhere; a metric on R+ that breaks agreement."""
    return DistanceSpace(
        lambda a, b: 0.0 if a == b else 1.0, REALS_PLUS, Tier.METRIC, "discrete"
    )


def log_metric() -> DistanceSpace:
    """Scale-invariant metric on R+ that does not agree with itself.

    0 when both arguments are 0, 3/4 when exactly one is, otherwise
    min{1, |ln a - ln b|}.
    """

    def h(a: float, b: float) -> float:
        if a == 0 and b == 0:
            return 0.0
        if a == 0 or b == 0:
            return 0.75
        return min(1.0, abs(math.log(a) - math.log(b)))

    return DistanceSpace(h, REALS_PLUS, Tier.METRIC, "log")


def squared() -> DistanceSpace:
    return DistanceSpace(lambda x, y: (x - y) ** 2, REALS_PLUS, Tier.METRIC, "(x-y)^2")


def constant_one() -> DistanceSpace:
    return DistanceSpace(lambda x, y: 1.0, REALS_PLUS, Tier.DISTANCE, "constant 1")


def random_points(rng: np.random.Generator, dim: int = 3) -> tuple:
    return tuple(rng.uniform(-1.0, 1.0, size=dim).tolist())


def log_ladder(seed: int = 42, lo: int = -10, hi: int = 10) -> list[float]:
    """Points 0 and 2^k * u_k with u_k in [1, 1.1), u_0 = u_1 = 1.

    Consecutive ratios stay below e while every two-step ratio exceeds it,
    so the log-metric triangle has no exact ties for rounding to break.
    """
    rng = np.random.default_rng(seed)
    pts = [0.0]
    for k in range(lo, hi + 1):
        u = 1.0 if k in (0, 1) else float(rng.uniform(1.0, 1.1))
        pts.append(math.ldexp(u, k))
    return pts
