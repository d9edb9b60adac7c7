"""Acceptance criteria, one test each, with a pass/fail line per criterion.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""
import math
import sys
import time

import numpy as np
import pytest

from ostrowski import distances as D
from ostrowski import engine
from ostrowski.instances import DEFAULT_NODES, build, build_scalar_instance
from ostrowski.lipschitz import power_modulus
from ostrowski.order import REALS_PLUS, Sample, stream
from ostrowski.quadrature import Grid
from ostrowski.suites import ALPHA, BETA, SUITES, metric_fixtures, run_suite

SWEEP21 = [round(-1 + 0.1 * k, 10) for k in range(21)]
SWEEP5 = [-1.0, -0.5, 0.0, 0.5, 1.0]
INSTANCES = ("scalar", "vector", "pair", "setvalued")
SHARP_TOL = {"scalar": 1e-12, "vector": 1e-6, "pair": 1e-6, "setvalued": 1e-6}
N = 10_000

_lines = []


def report(number, ok, detail):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
    _lines.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module", autouse=True)
def summary(request):
    yield
    reporter = request.config.pluginmanager.getplugin("terminalreporter")
    if reporter is not None:
        reporter.write_sep("-", "acceptance summary")
        for line in _lines:
            reporter.write_line(line)


def _instance(name, ts):
    return build(name, Grid.uniform(DEFAULT_NODES[name], breakpoints=ts))


def _within(gap, tol):
    return all(g <= tol for g in (gap if isinstance(gap, tuple) else (gap,)))


def test_criterion_1_classical_constant():
    start = time.perf_counter()
    inst = build_scalar_instance(Grid.uniform(257, breakpoints=SWEEP21))
    bounds = [engine.ostrowski_bound(inst.q, inst.dT, x) for x in SWEEP21]
    elapsed = time.perf_counter() - start
    err = max(abs(b - (1 + x * x) / 2) for b, x in zip(bounds, SWEEP21))
    report(1, err <= 1e-12 and elapsed < 1.0, f"max error {err:.2e} over 21 points, {elapsed:.3f} s")


def test_criterion_2_sharpness():
    start = time.perf_counter()
    worst = {}
    for name in INSTANCES:
        inst = _instance(name, SWEEP21)
        gaps = []
        for t in SWEEP21:
            r = engine.verify_sharpness(inst.q, inst.dT, inst.dY, t, SHARP_TOL[name], strict=False)
            gaps.append(max(r.gap) if isinstance(r.gap, tuple) else r.gap)
        worst[name] = max(gaps)
    elapsed = time.perf_counter() - start
    ok = all(worst[n] <= SHARP_TOL[n] for n in INSTANCES) and elapsed < 10.0
    detail = ", ".join(f"{n} gap {g:.1e}" for n, g in worst.items())
    report(2, ok, f"{detail}; {elapsed:.2f} s")


def test_criterion_3_domination():
    start = time.perf_counter()
    violations = {}
    for name in INSTANCES:
        inst = _instance(name, SWEEP5)
        bounds = {t: engine.ostrowski_bound(inst.q, inst.dT, t) for t in SWEEP5}
        rng = stream(42, f"acceptance/{name}")
        bad = 0
        for _ in range(1000):
            f = inst.member(rng)
            for t in SWEEP5:
                ok, _ = engine.dominated(inst.q, f, inst.dY, t, bounds[t], inst.tolerance)
                bad += not ok
        violations[name] = bad
    elapsed = time.perf_counter() - start
    ok = not any(violations.values()) and elapsed < 60.0
    report(3, ok, f"violations {violations} in 4 x 1000 x 5 trials, {elapsed:.1f} s")


def test_criterion_4_counterexamples():
    disc = D.check_agreement(D.absolute(), D.discrete_metric(), Sample.of([ALPHA, BETA]))
    w_disc = disc["agreement"].witness
    lm = D.log_metric()
    metric = D.check_metric_axioms(lm, Sample.of(D.log_ladder(42)), N)
    self_agree = D.check_agreement(lm, lm, Sample.of([1.0, 2.0]))
    w_log = self_agree["agreement"].witness
    ok = (
        not disc.passed
        and w_disc.args == (ALPHA, ALPHA, BETA)
        and 0 < abs(ALPHA - BETA) < 1
        and metric.passed
        and metric["triangle"].checked == N
        and not self_agree.passed
        and w_log.args == (1.0, 1.0, 2.0)
        and w_log.lhs == 0.75
        and abs(w_log.rhs - math.log(2)) < 1e-15
        and math.log(2) < 0.75
    )
    report(
        4, ok,
        f"discrete witness {w_disc.args}; log metric {metric['triangle'].checked} triangle triples pass, "
        f"self-agreement witness {w_log.args} with {w_log.lhs} vs {w_log.rhs:.4f}",
    )


def test_criterion_5_e_construction():
    h = D.construct_metric_from_e(D.positive_part(), REALS_PLUS)
    rng = np.random.default_rng(5)
    xs, ys = rng.uniform(0, 100, size=(2, N))
    exact = all(h(float(x), float(y)) == abs(float(x) - float(y)) for x, y in zip(xs, ys))
    metric = D.check_metric_axioms(h, REALS_PLUS.sample(64), N)
    fixtures = {d.name: (d, s) for d, s in metric_fixtures(42)}
    agree = {}
    for name in ("|x-y|", "euclidean", "hausdorff"):
        d, s = fixtures[name]
        rep = D.check_agreement(d, h, s, N)
        agree[name] = rep.passed and rep["agreement"].checked == N
    ok = exact and metric.passed and all(agree.values())
    report(5, ok, f"equal to |x-y| on {N} pairs: {exact}; metric axioms: {metric.passed}; agreement: {agree}")


def closed_form(x):
    return ((1 - x) ** 1.5 + (1 + x) ** 1.5) / 3


def test_criterion_6_modulus():
    w = power_modulus(0.5, D.ABS, "sqrt")
    errs, gaps = [], []
    for x in (0.0, 1.0):
        inst = build_scalar_instance(Grid.uniform(100_001, breakpoints=[x]))
        r = engine.homega_bound(inst.q, inst.dT, w, inst.dY, x, 1e-6, strict=False)
        closed = closed_form(x)
        errs.append(abs(r.bound - closed))
        gaps.append(r.gap)
    closed_ok = abs(closed_form(0.0) - 2 / 3) < 1e-15 and abs(closed_form(1.0) - 2 * math.sqrt(2) / 3) < 1e-15
    ok = closed_ok and max(errs) <= 1e-6 and max(gaps) <= 1e-6
    report(6, ok, f"errors vs closed form {errs[0]:.1e} at 0, {errs[1]:.1e} at 1; gaps {max(gaps):.1e}")


def test_criterion_7_convexifying_P():
    identical = True
    for name in ("scalar", "vector", "pair"):
        inst = _instance(name, SWEEP21)
        for t in SWEEP21:
            a = engine.verify_sharpness(inst.q, inst.dT, inst.dY, t, SHARP_TOL[name], strict=False)
            b = engine.corollary_bound_with_P(inst.q, inst.dT, inst.dX, t, SHARP_TOL[name], strict=False)
            identical &= a == b
    inst = _instance("setvalued", SWEEP5)
    rng = stream(42, "acceptance/hull")
    trials = violations = 0
    try:
        for k in range(100):
            t = SWEEP5[k % 5]
            r = engine.corollary_bound_with_P(inst.q, inst.dT, inst.dX, t, 1e-6, f=inst.member(rng))
            trials += 1
            violations += not (r.dominated and r.sharp)
        audits = True
    except (engine.PConditionViolation, engine.SharpnessFailure):
        audits = False
    ok = identical and audits and trials == 100 and violations == 0
    report(7, ok, f"P=Id bit-identical: {identical}; set-valued P and isometry audits: {audits}; "
                  f"{trials} trials, {violations} violations")


def test_criterion_8_axiom_suites():
    names = [n for n in SUITES if n != "counterexamples"]
    first = run_suite("all", 42, N)
    again = run_suite("all", 42, N)
    other = run_suite("all", 7, N)
    ok_all = all(e.ok for es in first.values() for e in es)
    ok_other = all(e.ok for es in other.values() for e in es)
    stable = [e.line() for es in first.values() for e in es] == [e.line() for es in again.values() for e in es]
    negatives = [e for n in names for e in first[n] if not e.expect_pass]
    witnessed = all(e.first_witness is not None for e in negatives)
    ok = ok_all and ok_other and stable and bool(negatives) and witnessed
    report(8, ok, f"{sum(len(v) for v in first.values())} entries ok at seeds 42 and 7: {ok_all and ok_other}; "
                  f"repeatable: {stable}; {len(negatives)} negative controls witnessed: {witnessed}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
