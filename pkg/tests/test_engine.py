import math

import numpy as np
import pytest
from scipy.integrate import quad

from ostrowski import engine
from ostrowski.distances import ABS, absolute
from ostrowski.engine import OperatorQuadruple
from ostrowski.instances import build_scalar_instance, build_vector_instance
from ostrowski.lipschitz import SampledFunction, power_modulus
from ostrowski.order import REALS_PLUS, Sample
from ostrowski.quadrature import Grid

SWEEP = [-1.0, -0.5, 0.0, 0.5, 1.0]


@pytest.fixture(scope="module")
def scalar():
    return build_scalar_instance(Grid.uniform(257, breakpoints=SWEEP))


@pytest.mark.parametrize("t", SWEEP)
def test_classical_constant(scalar, t):
    bound = engine.ostrowski_bound(scalar.q, scalar.dT, t)
    oracle = quad(lambda s: abs(s - t), -1, 1, points=[t])[0] / 2
    assert bound == pytest.approx(oracle, abs=1e-12)
    assert bound == pytest.approx((1 + t * t) / 2, abs=1e-12)


def test_smoke_at_zero(scalar):
    rep = engine.verify_sharpness(scalar.q, scalar.dT, scalar.dY, 0.0, 1e-12)
    assert (rep.bound, rep.deviation, rep.gap, rep.sharp) == (0.5, 0.5, 0.0, True)


def test_extremal_is_distance_section(scalar):
    f = engine.extremal_function(scalar.q, scalar.dT, 0.5)
    assert np.array_equal(f.values, np.abs(scalar.nodes - 0.5))


def test_member_dominated(scalar):
    rng = np.random.default_rng(0)
    for t in SWEEP:
        bound = engine.ostrowski_bound(scalar.q, scalar.dT, t)
        for _ in range(20):
            ok, dev = engine.dominated(scalar.q, scalar.member(rng), scalar.dY, t, bound, 1e-9)
            assert ok, (t, dev, bound)


def test_deviation_of_linear_function(scalar):
    # f(tau) = tau has mean 0, so the deviation at t is |t|
    f = SampledFunction(lambda s: s, scalar.nodes)
    assert engine.deviation(scalar.q, f, scalar.dY, 0.5) == pytest.approx(0.5, abs=1e-15)


def _broken_phi(scalar):
    q = scalar.q
    return OperatorQuadruple(
        q.Lambda, q.lam, lambda g: SampledFunction(lambda s: 0.5 * g.fn(s), g.grid), lambda m: 0.5 * m,
        q.monoid, q.hm, q.grid, q.P, "half",
    )


def test_sharpness_failure_raises(scalar):
    q = _broken_phi(scalar)
    with pytest.raises(engine.SharpnessFailure) as exc:
        engine.verify_sharpness(q, scalar.dT, scalar.dY, 0.0, 1e-9)
    assert exc.value.report.gap == pytest.approx(0.25)
    rep = engine.verify_sharpness(q, scalar.dT, scalar.dY, 0.0, 1e-9, strict=False)
    assert not rep.sharp


def test_diagram_detects_non_isometric_phi(scalar):
    q = _broken_phi(scalar)
    rep = engine.check_diagram(q, engine.section(scalar.dT, 0.0, q.grid), scalar.dY, scalar.dT, 0.0, 1e-9)
    assert rep["commutes"].passed
    assert not rep["phi_y isometry at bound"].passed


def test_direction_of_norm_two_breaks_phi():
    grid = Grid.uniform(65, breakpoints=SWEEP)
    inst = build_vector_instance(grid, dim=2, direction=(2.0, 0.0))
    rep = engine.check_phi(inst.q, inst.dT, inst.dX, inst.dY, REALS_PLUS.sample(16), [], 1e-9)
    assert not rep["phi_y Lipschitz"].passed
    diag = engine.check_diagram(inst.q, inst.section(np.random.default_rng(0)), inst.dY, inst.dT, 0.0, 1e-9)
    assert not diag["phi_y isometry at bound"].passed


def test_unit_direction_vector_diagram():
    grid = Grid.uniform(65, breakpoints=SWEEP)
    inst = build_vector_instance(grid, dim=3, direction=(0.6, 0.0, 0.8))
    g = inst.section(np.random.default_rng(4))
    rep = engine.check_diagram(inst.q, g, inst.dY, inst.dT, 0.5, 1e-12)
    assert rep.passed, rep.lines()
    # Lambda(g x) = (Lambda g) x coordinate by coordinate
    lhs = inst.q.Lambda(inst.q.phi_x(g))
    rhs = inst.q.lam(g)
    assert lhs == pytest.approx((0.6 * rhs, 0.0, 0.8 * rhs), abs=1e-15)


def test_monotone_rejects_undominated_pair(scalar):
    u = SampledFunction.constant(scalar.nodes, 1.0)
    v = SampledFunction.constant(scalar.nodes, 0.0)
    with pytest.raises(ValueError):
        engine.check_monotone(scalar.q, [(u, v)])
    assert engine.check_monotone(scalar.q, [(v, u)]).passed


def test_operator_agreement_on_members(scalar):
    rng = np.random.default_rng(8)
    for t in SWEEP:
        rep = engine.check_operator_agreement(scalar.q, scalar.member(rng), scalar.dX, scalar.dY, t, 1e-12)
        assert rep.passed


def test_identity_P_matches_plain_bound(scalar):
    for t in SWEEP:
        a = engine.verify_sharpness(scalar.q, scalar.dT, scalar.dY, t, 1e-12)
        b = engine.corollary_bound_with_P(scalar.q, scalar.dT, scalar.dX, t, 1e-12)
        assert a == b


def test_P_path_rejects_bad_P(scalar):
    q = scalar.q
    shifted = OperatorQuadruple(q.Lambda, q.lam, q.phi_x, q.phi_y, q.monoid, q.hm, q.grid, lambda x: x + 1, "shift")
    with pytest.raises(engine.PConditionViolation):
        engine.corollary_bound_with_P(shifted, scalar.dT, scalar.dX, 0.0, 1e-9)


def test_P_path_needs_P(scalar):
    q = scalar.q
    noP = OperatorQuadruple(q.Lambda, q.lam, q.phi_x, q.phi_y, q.monoid, q.hm, q.grid)
    with pytest.raises(ValueError):
        engine.corollary_bound_with_P(noP, scalar.dT, scalar.dX, 0.0, 1e-9)


def test_bound_requires_pseudometric(scalar):
    from ostrowski.distances import TierViolation, log_metric

    with pytest.raises(TierViolation):
        engine.ostrowski_bound(scalar.q, log_metric(), 0.5)


@pytest.mark.parametrize("x", [0.0, 0.3, 1.0])
def test_homega_sqrt(x):
    inst = build_scalar_instance(Grid.uniform(100_001, breakpoints=[x]))
    w = power_modulus(0.5, ABS, "sqrt")
    rep = engine.homega_bound(inst.q, inst.dT, w, inst.dY, x, 1e-6)
    closed = ((1 - x) ** 1.5 + (1 + x) ** 1.5) / 3
    oracle = quad(lambda s: math.sqrt(abs(s - x)), -1, 1, points=[x])[0] / 2
    assert closed == pytest.approx(oracle, abs=1e-10)
    assert abs(rep.bound - closed) <= 1e-6
    assert rep.sharp and rep.gap <= 1e-6


def test_homega_domination_by_holder_members():
    from ostrowski.lipschitz import random_holder

    inst = build_scalar_instance(Grid.uniform(4097, breakpoints=SWEEP))
    w = power_modulus(0.5, ABS, "sqrt")
    rng = np.random.default_rng(3)
    for t in SWEEP:
        bound = engine.homega_bound(inst.q, inst.dT, w, inst.dY, t, 1e-4).bound
        for _ in range(10):
            ok, _ = engine.dominated(inst.q, random_holder(rng, inst.nodes, 0.5), inst.dY, t, bound, 1e-4)
            assert ok


def test_phi_audit_on_scalar(scalar):
    sections = [engine.section(scalar.dT, t, scalar.nodes[::8]) for t in (0.0, 1.0)]
    rep = engine.check_phi(scalar.q, scalar.dT, scalar.dX, scalar.dY, Sample.of([0.0, 0.5, 2.0]), sections)
    assert rep.passed


def test_section_values():
    g = Grid.uniform(5).nodes
    assert engine.section(absolute(), 0.0, g).point_values == [1.0, 0.5, 0.0, 0.5, 1.0]
