"""Fully wired settings on T = [-1, 1]: scalar, vector, pair-valued M, and set-valued.

Every builder returns an :class:`Instance` holding the operator bundle, the
three distance spaces, and generators of random class members.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import engine
from .distances import (
    ABS,
    DistanceSpace,
    Tier,
    absolute,
    ambient,
    check_declared,
    coordinate_distance,
    euclidean,
    hausdorff_space,
    random_points,
)
from .engine import OperatorQuadruple
from .lipschitz import SampledFunction, random_lipschitz
from .order import REALS_PLUS, AxiomReport, Sample, orthant, stream
from .quadrature import Grid, trapezoid_integral
from .sets import RealSet, SetTooLarge, random_finite_set

MAX_SET_GRID = 129
TOL_EXACT = 1e-9
TOL_APPROX = 1e-6


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Instance:
    name: str
    grid: Grid
    q: OperatorQuadruple
    dT: DistanceSpace
    dX: DistanceSpace
    dY: DistanceSpace
    member: Callable[[np.random.Generator], SampledFunction]
    section: Callable[[np.random.Generator], SampledFunction]
    x_point: Callable[[np.random.Generator], object]
    tolerance: float

    @property
    def nodes(self) -> np.ndarray:
        return self.grid.nodes


def _mean(grid: Grid) -> Callable[[np.ndarray], np.ndarray]:
    scale = 1.0 / (grid.b - grid.a)
    nodes = grid.nodes
    return lambda values: scale * trapezoid_integral(values, nodes)


def _tuple(a) -> tuple:
    return tuple(float(v) for v in a)


def _abs_section(rng, grid, dim=None) -> SampledFunction:
    f = random_lipschitz(rng, grid, dim=dim, coordinatewise=True)
    vfn = lambda g: np.abs(f.vfn(g))
    if dim is None:
        return SampledFunction(lambda t: abs(f.fn(t)), grid, vfn)
    return SampledFunction(lambda t: tuple(abs(v) for v in f.fn(t)), grid, vfn)


def _time_distance(k: int | None = None) -> DistanceSpace:
    if k is None:
        return absolute("h_T")
    mon = orthant(k)
    return DistanceSpace(
        lambda a, b: (abs(a - b),) * k, mon, Tier.METRIC | Tier.PSEUDO_METRIC, f"h_T^{k}"
    )


def build_scalar_instance(grid: Grid) -> Instance:
    """Real-valued functions, mean value operator, identity embeddings."""
    mean = _mean(grid)
    nodes = grid.nodes

    def Lambda(f: SampledFunction) -> float:
        return float(mean(f.values))

    q = OperatorQuadruple(
        Lambda=Lambda,
        lam=Lambda,
        phi_x=lambda g: g,
        phi_y=lambda m: m,
        monoid=REALS_PLUS,
        hm=ABS,
        grid=nodes,
        P=lambda x: x,
        name="scalar",
    )
    d = absolute()
    return Instance(
        "scalar",
        grid,
        q,
        _time_distance(),
        d,
        d,
        member=lambda rng: random_lipschitz(rng, nodes),
        section=lambda rng: _abs_section(rng, nodes),
        x_point=lambda rng: float(rng.uniform(-2, 2)),
        tolerance=TOL_EXACT,
    )


def build_vector_instance(grid: Grid, dim: int = 2, direction: Sequence[float] | None = None) -> Instance:
    """R^dim-valued functions; the embeddings multiply by a fixed ``direction``."""
    if direction is None:
        direction = np.eye(dim)[0]
    x = np.asarray(direction, dtype=float)
    if x.shape != (dim,):
        raise DimensionMismatch(f"direction has shape {x.shape}, expected ({dim},)")
    mean = _mean(grid)
    nodes = grid.nodes

    def Lambda(f: SampledFunction) -> tuple:
        return _tuple(mean(f.values))

    def phi_x(g: SampledFunction) -> SampledFunction:
        return SampledFunction(
            lambda t: _tuple(g.fn(t) * x), g.grid, lambda _: np.asarray(g.values)[:, None] * x
        )

    q = OperatorQuadruple(
        Lambda=Lambda,
        lam=lambda g: float(mean(g.values)),
        phi_x=phi_x,
        phi_y=lambda m: _tuple(m * x),
        monoid=REALS_PLUS,
        hm=ABS,
        grid=nodes,
        P=lambda v: v,
        name=f"vector R^{dim}",
    )
    d = euclidean()
    return Instance(
        "vector",
        grid,
        q,
        _time_distance(),
        d,
        d,
        member=lambda rng: random_lipschitz(rng, nodes, dim=dim),
        section=lambda rng: _abs_section(rng, nodes),
        x_point=lambda rng: random_points(rng, dim),
        tolerance=TOL_EXACT,
    )


def build_pair_instance(grid: Grid) -> Instance:
    """R^2-valued functions with distances valued in R+^2, compared componentwise."""
    mon = orthant(2)
    mean = _mean(grid)
    nodes = grid.nodes

    def Lambda(f: SampledFunction) -> tuple:
        return _tuple(mean(f.values))

    q = OperatorQuadruple(
        Lambda=Lambda,
        lam=Lambda,
        phi_x=lambda g: g,
        phi_y=lambda m: m,
        monoid=mon,
        hm=ambient(mon),
        grid=nodes,
        P=lambda v: v,
        name="pair R+^2",
    )
    d = coordinate_distance(2)
    return Instance(
        "pair",
        grid,
        q,
        _time_distance(2),
        d,
        d,
        member=lambda rng: random_lipschitz(rng, nodes, dim=2, coordinatewise=True),
        section=lambda rng: _abs_section(rng, nodes, dim=2),
        x_point=lambda rng: tuple(rng.uniform(-2, 2, size=2).tolist()),
        tolerance=TOL_EXACT,
    )


# ---------------------------------------------------------------------------
# set-valued


def minkowski_riemann_integral(F: SampledFunction, grid: Grid) -> RealSet:
    """Mean of a set-valued F as a normalised trapezoid sum of Minkowski sums.

    Each summand is collapsed to its convex hull, so the accumulated sum stays
    an interval: conv(A + B) = conv A + conv B.
    """
    if len(grid) > MAX_SET_GRID:
        raise SetTooLarge(f"grid has {len(grid)} nodes, cap is {MAX_SET_GRID}")
    vals = F.values
    lo = np.array([v.lo for v in vals])
    hi = np.array([v.hi for v in vals])
    mean = _mean(grid)
    return RealSet.interval(float(mean(lo)), float(mean(hi)))


def random_set_member(rng: np.random.Generator, grid: Grid, max_branches: int = 8, attempts: int = 20) -> SampledFunction:
    """Random Hausdorff-1-Lipschitz F: [-1, 1] -> finite sets.

    F(t) collects up to ``max_branches`` 1-Lipschitz selections; candidates
    failing the pairwise Hausdorff check on the grid are rejected.
    """
    nodes = grid.nodes
    for _ in range(attempts):
        k = int(rng.integers(1, max_branches + 1))
        branches = [random_lipschitz(rng, nodes) for _ in range(k)]
        V = np.stack([b.values for b in branches], axis=1)
        D = np.abs(V[:, None, :, None] - V[None, :, None, :])
        haus = np.maximum(D.min(axis=3).max(axis=2), D.min(axis=2).max(axis=2))
        if np.all(haus <= np.abs(nodes[:, None] - nodes[None, :])):
            return SampledFunction(
                lambda t, bs=branches: RealSet.points([b.fn(t) for b in bs]),
                nodes,
                lambda g, V=V: [RealSet.points(row) for row in V],
            )
    raise RuntimeError("could not generate a Lipschitz set-valued member")


def build_setvalued_instance(grid: Grid) -> Instance:
    """Finite-set-valued functions under Hausdorff distance, P = convex hull."""
    if len(grid) > MAX_SET_GRID:
        raise SetTooLarge(f"grid has {len(grid)} nodes, cap is {MAX_SET_GRID}")
    mean = _mean(grid)
    nodes = grid.nodes

    def phi_x(g: SampledFunction) -> SampledFunction:
        return SampledFunction(lambda t: RealSet.points([g.fn(t)]), g.grid)

    q = OperatorQuadruple(
        Lambda=lambda F: minkowski_riemann_integral(F, grid),
        lam=lambda g: float(mean(g.values)),
        phi_x=phi_x,
        phi_y=lambda m: RealSet.points([m]),
        monoid=REALS_PLUS,
        hm=ABS,
        grid=nodes,
        P=RealSet.hull,
        name="set-valued",
    )
    d = hausdorff_space()
    return Instance(
        "setvalued",
        grid,
        q,
        _time_distance(),
        d,
        d,
        member=lambda rng: random_set_member(rng, grid),
        section=lambda rng: _abs_section(rng, nodes),
        x_point=random_finite_set,
        tolerance=TOL_APPROX,
    )


BUILDERS = {
    "scalar": build_scalar_instance,
    "vector": build_vector_instance,
    "pair": build_pair_instance,
    "setvalued": build_setvalued_instance,
}

DEFAULT_NODES = {"scalar": 257, "vector": 257, "pair": 257, "setvalued": 65}


def build(name: str, grid: Grid) -> Instance:
    try:
        return BUILDERS[name](grid)
    except KeyError:
        raise ValueError(f"unknown instance {name!r}") from None


# ---------------------------------------------------------------------------
# audit chain


def _dominated_pair(inst: Instance, rng) -> tuple[SampledFunction, SampledFunction]:
    u, v = inst.section(rng), inst.section(rng)
    w = SampledFunction(lambda t: inst.q.monoid.plus(u.fn(t), v.fn(t)), u.grid, lambda g: u.values + v.values)
    return u, w


def audit_instance(
    inst: Instance,
    ts: Sequence[float],
    seed: int = 42,
    trials: int = 100,
    tol: float | None = None,
    space_samples: int = 2000,
) -> AxiomReport:
    """Monotone lam, operator agreement, diagram, phi audits, tier audits, and
    P conditions for bundles with a non-identity P."""
    tol = inst.tolerance if tol is None else tol
    q = inst.q
    ts = list(ts) or [0.0]
    rng = stream(seed, f"audit/{inst.name}")
    rep = AxiomReport(f"audit chain {inst.name}")

    rep.extend(engine.check_monotone(q, [_dominated_pair(inst, rng) for _ in range(trials)]))
    agree = AxiomReport("")
    diag = AxiomReport("")
    for k in range(trials):
        t = ts[k % len(ts)]
        agree.extend(engine.check_operator_agreement(q, inst.member(rng), inst.dX, inst.dY, t, tol))
        diag.extend(engine.check_diagram(q, inst.section(rng), inst.dY, inst.dT, t, tol))
    rep.extend(_merge(agree, "operator agreement"))
    rep.extend(_merge(diag))

    m_sample = q.monoid.sample(64, seed)
    sections = [inst.section(rng) for _ in range(2)]
    sections += [engine.section(inst.dT, t, inst.nodes) for t in ts[:2]]
    rep.extend(engine.check_phi(q, inst.dT, inst.dX, inst.dY, m_sample, sections, tol))

    t_sample = Sample.of(inst.grid.nodes.tolist(), seed)
    x_sample = Sample.draw(inst.x_point, 64, seed, name=f"x/{inst.name}")
    rep.extend(check_declared(inst.dT, t_sample, ambient(inst.dT.monoid), space_samples), prefix="h_T ")
    rep.extend(check_declared(inst.dX, x_sample, ambient(inst.dX.monoid), space_samples), prefix="h_X ")

    if inst.name == "setvalued":
        pc = AxiomReport("")
        for k in range(trials):
            pc.extend(engine.check_P_conditions(q, inst.member(rng), inst.dX, ts[k % len(ts)], tol))
        rep.extend(_merge(pc))
    return rep


def _merge(rep: AxiomReport, rename: str | None = None) -> AxiomReport:
    """Fold repeated axiom rows into one row per name."""
    out = AxiomReport(rep.subject)
    for r in rep.results:
        slot = out.axiom(rename or r.name)
        slot.checked += r.checked
        slot.failures += r.failures
        slot.witnesses.extend(r.witnesses[: max(0, 5 - len(slot.witnesses))])
    return out
