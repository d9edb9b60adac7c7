"""Named axiom suites over the shipped fixtures, including expected failures.

Every entry states whether its report should pass. Negative controls and the
two agreement counterexamples are expected to fail, optionally with a fixed
first witness; an entry is ``ok`` when the observed verdict matches.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import distances as D
from .lipschitz import ModulusOfContinuity, check_modulus_axioms, identity_modulus, power_modulus
from .order import (
    DEFAULT_LIMIT,
    DEFAULT_SEED,
    REALS_PLUS,
    AxiomReport,
    OrderedMonoid,
    Sample,
    check_monoid_axioms,
    check_poset_axioms,
    check_sup,
    orthant,
)
from .sets import random_finite_set

SAMPLE_SIZE = 64
ALPHA, BETA = 0.0, 0.5


@dataclass
class SuiteEntry:
    name: str
    report: AxiomReport
    expect_pass: bool = True
    expect_witness: tuple | None = None

    @property
    def first_witness(self):
        for r in self.report.results:
            if r.witness is not None:
                return r.witness
        return None

    @property
    def ok(self) -> bool:
        if self.report.passed != self.expect_pass:
            return False
        if self.expect_witness is not None:
            w = self.first_witness
            return w is not None and w.args == self.expect_witness
        return True

    def line(self) -> str:
        status = "ok" if self.ok else "UNEXPECTED"
        expect = "pass" if self.expect_pass else "fail"
        verdict = "pass" if self.report.passed else "fail"
        s = f"{self.name}: expected {expect}, observed {verdict} -> {status}"
        w = self.first_witness
        if w is not None:
            s += f"; witness {w}"
        return s


def _sample(gen, seed: int, name: str, n: int = SAMPLE_SIZE) -> Sample:
    return Sample.draw(gen, n, seed, name=name)


def _broken_order() -> OrderedMonoid:
    return OrderedMonoid("R+ leq:=true", lambda a, b: True, lambda a, b: a + b, 0.0)


def _abs_diff_monoid() -> OrderedMonoid:
    return OrderedMonoid("R+ with |m-n|", lambda a, b: a <= b, lambda a, b: abs(a - b), 0.0)


def poset_suite(seed: int = DEFAULT_SEED, limit: int = DEFAULT_LIMIT) -> list[SuiteEntry]:
    out = []
    for mon in (REALS_PLUS, orthant(2), orthant(3)):
        s = mon.sample(SAMPLE_SIZE, seed)
        out.append(SuiteEntry(f"poset {mon.name}", check_poset_axioms(mon, s, limit)))
        out.append(SuiteEntry(f"sup {mon.name}", check_sup(mon, s, limit)))
    bad = _broken_order()
    out.append(
        SuiteEntry("poset negative control", check_poset_axioms(bad, REALS_PLUS.sample(SAMPLE_SIZE, seed), limit), False)
    )
    return out


def monoid_suite(seed: int = DEFAULT_SEED, limit: int = DEFAULT_LIMIT) -> list[SuiteEntry]:
    out = []
    for mon in (REALS_PLUS, orthant(2), orthant(3)):
        out.append(SuiteEntry(f"monoid {mon.name}", check_monoid_axioms(mon, mon.sample(SAMPLE_SIZE, seed), limit)))
    bad = _abs_diff_monoid()
    out.append(
        SuiteEntry("monoid negative control", check_monoid_axioms(bad, REALS_PLUS.sample(SAMPLE_SIZE, seed), limit), False)
    )
    return out


def metric_fixtures(seed: int = DEFAULT_SEED) -> list[tuple[D.DistanceSpace, Sample]]:
    """(space, point sample) for every shipped metric valued in R+ or R+^2."""
    pair = orthant(2)
    return [
        (D.absolute(), _sample(lambda r: float(r.integers(-128, 129)) / 8, seed, "abs")),
        (D.euclidean(), _sample(D.random_points, seed, "euclid")),
        (D.hausdorff_space(), _sample(random_finite_set, seed, "hausdorff")),
        (D.coordinate_distance(2), _sample(lambda r: tuple((r.integers(-64, 65, size=2) / 8).tolist()), seed, "coord")),
        (D.ABS, REALS_PLUS.sample(SAMPLE_SIZE, seed)),
        (D.ambient(pair), pair.sample(SAMPLE_SIZE, seed)),
    ]


def distance_suite(seed: int = DEFAULT_SEED, limit: int = DEFAULT_LIMIT) -> list[SuiteEntry]:
    out = [SuiteEntry(f"distance {d.name}", D.check_distance_axioms(d, s, limit)) for d, s in metric_fixtures(seed)]
    s = REALS_PLUS.sample(SAMPLE_SIZE, seed)
    out.append(SuiteEntry("distance negative control", D.check_distance_axioms(D.constant_one(), s, limit), False))
    return out


def pseudometric_suite(seed: int = DEFAULT_SEED, limit: int = DEFAULT_LIMIT) -> list[SuiteEntry]:
    """Agreement of each metric fixture with the e-constructed metric on its M."""
    return [
        SuiteEntry(f"agreement {d.name}", D.check_agreement(d, D.ambient(d.monoid), s, limit))
        for d, s in metric_fixtures(seed)
    ]


def metric_suite(seed: int = DEFAULT_SEED, limit: int = DEFAULT_LIMIT) -> list[SuiteEntry]:
    out = [SuiteEntry(f"metric {d.name}", D.check_metric_axioms(d, s, limit)) for d, s in metric_fixtures(seed)]
    out.append(SuiteEntry("metric log", D.check_metric_axioms(D.log_metric(), Sample.of(D.log_ladder(seed), seed), limit)))
    s = REALS_PLUS.sample(SAMPLE_SIZE, seed)
    out.append(SuiteEntry("metric negative control (x-y)^2", D.check_metric_axioms(D.squared(), s, limit), False))
    pair = orthant(2)
    out.append(SuiteEntry("e-axioms max(x-y,0)", D.check_e_axioms(D.positive_part(), REALS_PLUS, s, limit)))
    out.append(
        SuiteEntry("e-axioms max(x-y,0)^2", D.check_e_axioms(D.positive_part(2), pair, pair.sample(SAMPLE_SIZE, seed), limit))
    )
    out.append(
        SuiteEntry("e-axioms negative control e(x,y)=x", D.check_e_axioms(D.EFunction(lambda x, y: x, "x"), REALS_PLUS, s, limit), False)
    )
    return out


def modulus_fixtures() -> list[ModulusOfContinuity]:
    pair = orthant(2)
    return [
        identity_modulus(REALS_PLUS, D.ABS),
        power_modulus(0.5, D.ABS, "sqrt"),
        power_modulus(1 / 3, D.ABS, "cbrt"),
        identity_modulus(pair, D.ambient(pair)),
    ]


def modulus_suite(seed: int = DEFAULT_SEED, limit: int = DEFAULT_LIMIT) -> list[SuiteEntry]:
    out = []
    for w in modulus_fixtures():
        s = w.monoid.sample(SAMPLE_SIZE, seed)
        out.append(SuiteEntry(f"modulus {w.name} on {w.monoid.name}", check_modulus_axioms(w, s, limit)))
    sq = ModulusOfContinuity(lambda m: m * m, REALS_PLUS, D.ABS, "t^2")
    out.append(SuiteEntry("modulus negative control t^2", check_modulus_axioms(sq, REALS_PLUS.sample(SAMPLE_SIZE, seed), limit), False))
    return out


def counterexample_suite(seed: int = DEFAULT_SEED, limit: int = DEFAULT_LIMIT) -> list[SuiteEntry]:
    """The two agreement counterexamples, with their exact witnesses.

    (a) |x-y| against the discrete metric on R+ at (alpha, alpha, beta), where
    0 < |alpha - beta| < 1. (b) the log metric against itself at (1, 1, 2):
    it is a metric, yet h(h(1,1), h(1,2)) = h(0, ln 2) = 3/4 > ln 2.
    """
    disc = D.check_agreement(D.absolute(), D.discrete_metric(), Sample.of([ALPHA, BETA], seed), limit)
    lm = D.log_metric()
    self_agree = D.check_agreement(lm, lm, Sample.of([1.0, 2.0], seed), limit)
    metric = D.check_metric_axioms(lm, Sample.of(D.log_ladder(seed), seed), limit)
    return [
        SuiteEntry("discrete h_M breaks agreement", disc, False, (ALPHA, ALPHA, BETA)),
        SuiteEntry("log metric breaks self-agreement", self_agree, False, (1.0, 1.0, 2.0)),
        SuiteEntry("log metric is a metric", metric, True),
    ]


SUITES: dict[str, Callable[..., list[SuiteEntry]]] = {
    "poset": poset_suite,
    "monoid": monoid_suite,
    "distance": distance_suite,
    "pseudometric": pseudometric_suite,
    "metric": metric_suite,
    "modulus": modulus_suite,
    "counterexamples": counterexample_suite,
}


def run_suite(name: str, seed: int = DEFAULT_SEED, limit: int = DEFAULT_LIMIT) -> dict[str, list[SuiteEntry]]:
    names = list(SUITES) if name == "all" else [name]
    return {n: SUITES[n](seed, limit) for n in names}
