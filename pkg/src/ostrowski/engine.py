"""Operator bundles, their audits, and the sharp deviation bound with its extremals.

Convention: ``Lambda f(t)`` means ``Lambda`` applied to the constant function
``tau -> f(t)`` materialised on the bundle's grid, never ``f(t)`` itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from .distances import DistanceSpace, Tier
from .lipschitz import (
    ModulusOfContinuity,
    SampledFunction,
    check_class_membership,
    transform_distance,
)
from .order import AxiomReport, OrderedMonoid, Sample


class SharpnessFailure(RuntimeError):
    def __init__(self, report: "BoundReport"):
        super().__init__(f"bound not attained at t={report.t}: gap {report.gap!r} > {report.tolerance}")
        self.report = report


class PConditionViolation(RuntimeError):
    def __init__(self, report: AxiomReport):
        super().__init__("; ".join(r.line() for r in report.failed()))
        self.report = report


@dataclass(frozen=True)
class OperatorQuadruple:
    """The operators of one concrete setting.

    Lambda: H(T,X) -> Y, lam: H(T,M) -> M (monotone), phi_x: H(T,M) -> H(T,X),
    phi_y: M -> Y, and an optional convexifying map P: X -> X. ``hm`` is the
    ambient distance on M used to compare values of ``lam``.
    """

    Lambda: Callable[[SampledFunction], Any]
    lam: Callable[[SampledFunction], Any]
    phi_x: Callable[[SampledFunction], SampledFunction]
    phi_y: Callable[[Any], Any]
    monoid: OrderedMonoid
    hm: DistanceSpace
    grid: np.ndarray
    P: Callable[[Any], Any] | None = None
    name: str = ""

    def constant(self, value) -> SampledFunction:
        return SampledFunction.constant(self.grid, value)

    def Lambda_at(self, f: SampledFunction, t):
        """Lambda on the constant function tau -> f(t)."""
        return self.Lambda(self.constant(f.fn(t)))

    def within(self, gap, tol: float) -> bool:
        return self.monoid.leq(gap, self.monoid.embed(tol))

    def leq_tol(self, a, b, tol: float) -> bool:
        return self.monoid.leq(a, self.monoid.plus(b, self.monoid.embed(tol)))


@dataclass(frozen=True)
class BoundReport:
    t: Any
    bound: Any
    deviation: Any
    gap: Any
    tolerance: float
    sharp: bool
    dominated: bool | None = None
    member_deviation: Any = None


def section(dT: DistanceSpace, t, grid) -> SampledFunction:
    """tau -> h_T(tau, t) on ``grid``."""
    h = dT.h
    return SampledFunction(lambda tau: h(tau, t), grid)


# ---------------------------------------------------------------------------
# audits


def check_monotone(q: OperatorQuadruple, pairs: Iterable[tuple[SampledFunction, SampledFunction]]) -> AxiomReport:
    leq = q.monoid.leq
    rep = AxiomReport(f"monotone lambda {q.name}")
    res = rep.axiom("monotone")
    for k, (u, v) in enumerate(pairs):
        uv, vv = u.point_values, v.point_values
        if not all(leq(a, b) for a, b in zip(uv, vv)):
            raise ValueError(f"pair {k} is not dominated on the grid")
        lu, lv = q.lam(u), q.lam(v)
        res.record(leq(lu, lv), k, lhs=lu, rhs=lv)
    return rep


def check_operator_agreement(
    q: OperatorQuadruple, f: SampledFunction, dX: DistanceSpace, dY: DistanceSpace, t, tol: float = 0.0
) -> AxiomReport:
    """h_Y(Lambda f, Lambda f(t)) <= lam(h_X(f(.), f(t))) up to ``tol``."""
    rep = AxiomReport(f"operator agreement {q.name}")
    ft = f.fn(t)
    lhs = dY.h(q.Lambda(f), q.Lambda_at(f, t))
    rhs = q.lam(SampledFunction(lambda tau: dX.h(f.fn(tau), ft), f.grid))
    rep.axiom("agreement").record(q.leq_tol(lhs, rhs, tol), t, lhs=lhs, rhs=rhs)
    return rep


def check_diagram(
    q: OperatorQuadruple, g: SampledFunction, dY: DistanceSpace, dT: DistanceSpace, t, tol: float = 0.0
) -> AxiomReport:
    """Lambda(phi_x g) = phi_y(lam g), lam(theta) = theta, and
    h_Y(phi_y(m), phi_y(theta)) = m at m = lam(h_T(., t))."""
    theta, hm = q.monoid.theta, q.hm
    rep = AxiomReport(f"diagram {q.name}")
    lhs, rhs = q.Lambda(q.phi_x(g)), q.phi_y(q.lam(g))
    residual = dY.h(lhs, rhs)
    rep.axiom("commutes").record(q.within(residual, tol), t, lhs=lhs, rhs=rhs)
    lt = q.lam(q.constant(theta))
    rep.axiom("lambda(theta)=theta").record(q.within(hm(lt, theta), tol), t, lhs=lt, rhs=theta)
    m = ostrowski_bound(q, dT, t)
    v = dY.h(q.phi_y(m), q.phi_y(theta))
    rep.axiom("phi_y isometry at bound").record(q.within(hm(v, m), tol), t, lhs=v, rhs=m)
    return rep


def check_phi(
    q: OperatorQuadruple,
    dT: DistanceSpace,
    dX: DistanceSpace,
    dY: DistanceSpace,
    s: Sample,
    sections: Sequence[SampledFunction] = (),
    tol: float = 0.0,
) -> AxiomReport:
    """phi_y in H(M, Y) on sampled pairs and phi_x(g) in H(T, X) for given g."""
    hm = q.hm
    rep = AxiomReport(f"phi maps {q.name}")
    lip = rep.axiom("phi_y Lipschitz")
    for m1, m2 in s.tuples(2):
        lhs, rhs = dY.h(q.phi_y(m1), q.phi_y(m2)), hm(m1, m2)
        lip.record(q.leq_tol(lhs, rhs, tol), m1, m2, lhs=lhs, rhs=rhs)
    into = rep.axiom("phi_x into H(T,X)")
    for k, g in enumerate(sections):
        ok = check_class_membership(q.phi_x(g), dT, dX, tol=tol).passed
        into.record(ok, k)
    return rep


def check_P_conditions(
    q: OperatorQuadruple, f: SampledFunction, dX: DistanceSpace, t, tol: float
) -> AxiomReport:
    """Lambda f = Lambda(P o f) = P(Lambda f) and Lambda f(t) = Lambda(P f(t)) = P f(t)."""
    if q.P is None:
        raise ValueError("bundle has no P")
    P, h = q.P, dX.h
    rep = AxiomReport(f"P conditions {q.name}")
    Lf = q.Lambda(f)
    LPf = q.Lambda(SampledFunction(lambda tau: P(f.fn(tau)), f.grid))
    rep.axiom("Lambda f = Lambda(P f)").record(q.within(h(Lf, LPf), tol), t, lhs=Lf, rhs=LPf)
    PLf = P(Lf)
    rep.axiom("Lambda f = P(Lambda f)").record(q.within(h(Lf, PLf), tol), t, lhs=Lf, rhs=PLf)
    ft = f.fn(t)
    Lft = q.Lambda(q.constant(ft))
    LPft = q.Lambda(q.constant(P(ft)))
    rep.axiom("Lambda f(t) = Lambda(P f(t))").record(q.within(h(Lft, LPft), tol), t, lhs=Lft, rhs=LPft)
    Pft = P(ft)
    rep.axiom("Lambda f(t) = P f(t)").record(q.within(h(Lft, Pft), tol), t, lhs=Lft, rhs=Pft)
    return rep


# ---------------------------------------------------------------------------
# the bound


def ostrowski_bound(q: OperatorQuadruple, dT: DistanceSpace, t):
    """lam(h_T(., t))."""
    dT.require(Tier.PSEUDO_METRIC)
    return q.lam(section(dT, t, q.grid))


def deviation(q: OperatorQuadruple, f: SampledFunction, dY: DistanceSpace, t):
    """h_Y(Lambda f, Lambda f(t))."""
    return dY.h(q.Lambda(f), q.Lambda_at(f, t))


def extremal_function(q: OperatorQuadruple, dT: DistanceSpace, t) -> SampledFunction:
    """f_t = phi_x(h_T(., t))."""
    return q.phi_x(section(dT, t, q.grid))


def verify_sharpness(
    q: OperatorQuadruple, dT: DistanceSpace, dY: DistanceSpace, t, tol: float, strict: bool = True
) -> BoundReport:
    bound = ostrowski_bound(q, dT, t)
    dev = deviation(q, extremal_function(q, dT, t), dY, t)
    gap = q.hm(bound, dev)
    rep = BoundReport(t, bound, dev, gap, tol, q.within(gap, tol))
    if strict and not rep.sharp:
        raise SharpnessFailure(rep)
    return rep


def corollary_bound_with_P(
    q: OperatorQuadruple,
    dT: DistanceSpace,
    dX: DistanceSpace,
    t,
    tol: float,
    f: SampledFunction | None = None,
    strict: bool = True,
) -> BoundReport:
    """h_X(Lambda f, P f(t)) <= lam(h_T(., t)), attained by (P o phi_x)(h_T(., t)).

    With ``f`` omitted only the extremal is evaluated. Raises
    PConditionViolation when the hypotheses on P fail for ``f`` or the extremal.
    """
    if q.P is None:
        raise ValueError("bundle has no P")
    P, hm, theta = q.P, q.hm, q.monoid.theta
    bound = ostrowski_bound(q, dT, t)
    g = q.phi_x(section(dT, t, q.grid))
    ext = SampledFunction(lambda tau: P(g.fn(tau)), q.grid)

    audit = check_P_conditions(q, ext, dX, t, tol)
    if f is not None:
        audit.extend(check_P_conditions(q, f, dX, t, tol), prefix="member: ")
    lift = lambda m: P(q.phi_x(q.constant(m)).fn(t))
    v = dX.h(lift(bound), lift(theta))
    audit.axiom("P phi_x isometry at bound").record(q.within(hm(v, bound), tol), t, lhs=v, rhs=bound)
    if not audit.passed:
        raise PConditionViolation(audit)

    dev = dX.h(q.Lambda(ext), P(ext.fn(t)))
    gap = hm(bound, dev)
    dominated = member = None
    if f is not None:
        member = dX.h(q.Lambda(f), P(f.fn(t)))
        dominated = q.leq_tol(member, bound, tol)
    rep = BoundReport(t, bound, dev, gap, tol, q.within(gap, tol), dominated, member)
    if strict and not rep.sharp:
        raise SharpnessFailure(rep)
    return rep


def homega_bound(
    q: OperatorQuadruple,
    dT: DistanceSpace,
    w: ModulusOfContinuity,
    dY: DistanceSpace,
    t,
    tol: float,
    strict: bool = True,
) -> BoundReport:
    """Bound lam(omega(h_T(., t))) with extremal phi_x(omega(h_T(., t))).

    ``w`` is assumed to have passed its modulus audit.
    """
    return verify_sharpness(q, transform_distance(dT, w), dY, t, tol, strict)


def dominated(q: OperatorQuadruple, f: SampledFunction, dY: DistanceSpace, t, bound, tol: float) -> tuple[bool, Any]:
    dev = deviation(q, f, dY, t)
    return q.leq_tol(dev, bound, tol), dev
