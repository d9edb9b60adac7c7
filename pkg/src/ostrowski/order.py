"""Partially ordered monoids with a smallest element, plus sample-based axiom audits.

An order is a single ``leq`` predicate; two elements are incomparable when
``leq`` is false in both directions. Audits never raise on a failed axiom,
they return an :class:`AxiomReport` carrying witnesses.
"""
from __future__ import annotations

import itertools
import zlib
from dataclasses import dataclass, field
from typing import Any, Callable, Generic, Iterator, Sequence, TypeVar

import numpy as np

M = TypeVar("M")

DEFAULT_LIMIT = 10_000
DEFAULT_SEED = 42
MAX_WITNESSES = 5


class NoSupremum(ValueError):
    """Raised when a pair has no least upper bound in the carrier."""


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Witness:
    args: tuple
    lhs: Any = None
    rhs: Any = None

    def __str__(self) -> str:
        if self.lhs is None and self.rhs is None:
            return f"args={self.args!r}"
        return f"args={self.args!r} lhs={self.lhs!r} rhs={self.rhs!r}"


@dataclass
class AxiomResult:
    name: str
    checked: int = 0
    failures: int = 0
    witnesses: list[Witness] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def witness(self) -> Witness | None:
        return self.witnesses[0] if self.witnesses else None

    def record(self, ok: bool, *args, lhs=None, rhs=None) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if len(self.witnesses) < MAX_WITNESSES:
                self.witnesses.append(Witness(tuple(args), lhs, rhs))

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        s = f"{self.name}: {status} ({self.checked} checked, {self.failures} failed)"
        if self.witness is not None:
            s += f" witness {self.witness}"
        return s


@dataclass
class AxiomReport:
    subject: str
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(r.name == name for r in self.results)

    def axiom(self, name: str) -> AxiomResult:
        """Get or create the result slot for ``name``."""
        if name in self:
            return self[name]
        r = AxiomResult(name)
        self.results.append(r)
        return r

    def failed(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def extend(self, other: "AxiomReport", prefix: str = "") -> "AxiomReport":
        for r in other.results:
            self.results.append(
                AxiomResult(prefix + r.name, r.checked, r.failures, list(r.witnesses))
            )
        return self

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]

    def __str__(self) -> str:
        return "\n".join([f"[{self.subject}]"] + ["  " + s for s in self.lines()])


# ---------------------------------------------------------------------------
# samples


def stream(seed: int, name: str = "") -> np.random.Generator:
    """Independent, reproducible RNG stream for a named suite."""
    return np.random.default_rng([seed, zlib.crc32(name.encode())])


@dataclass(frozen=True)
class Sample(Generic[M]):
    elements: tuple
    seed: int = DEFAULT_SEED

    def __post_init__(self):
        if len(self.elements) == 0:
            raise ValueError("sample must be non-empty")

    @classmethod
    def of(cls, elements: Sequence, seed: int = DEFAULT_SEED) -> "Sample":
        return cls(tuple(elements), seed)

    @classmethod
    def draw(
        cls, gen: Callable[[np.random.Generator], Any], n: int, seed: int = DEFAULT_SEED, name: str = ""
    ) -> "Sample":
        rng = stream(seed, name)
        return cls(tuple(gen(rng) for _ in range(n)), seed)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def tuples(self, arity: int, limit: int = DEFAULT_LIMIT) -> Iterator[tuple]:
        """All ``arity``-tuples when there are at most ``limit`` of them,
        otherwise ``limit`` tuples drawn with replacement from the seed."""
        n = len(self.elements)
        if n**arity <= limit:
            yield from itertools.product(self.elements, repeat=arity)
            return
        rng = stream(self.seed, f"tuples/{arity}")
        idx = rng.integers(0, n, size=(limit, arity))
        for row in idx:
            yield tuple(self.elements[i] for i in row)


def dyadic(rng: np.random.Generator, hi: int = 16, denom: int = 8) -> float:
    """Random non-negative dyadic rational k/denom; sums of these stay exact."""
    return int(rng.integers(0, hi * denom + 1)) / denom


# ---------------------------------------------------------------------------
# monoids


@dataclass(frozen=True)
class OrderedMonoid(Generic[M]):
    """Carrier with a partial order, an associative ``plus`` and smallest ``theta``.

    ``sup_fn`` returns ``None`` when a pair has no least upper bound.
    ``embed`` maps a non-negative real tolerance into the carrier so numeric
    slack can be expressed in M's own order.
    """

    name: str
    leq: Callable[[M, M], bool]
    plus: Callable[[M, M], M]
    theta: M
    sup_fn: Callable[[M, M], M | None] | None = None
    embed: Callable[[float], M] | None = None
    sampler: Callable[[np.random.Generator], M] | None = None

    def sup(self, m: M, n: M) -> M:
        return sup(self, m, n)

    def eq(self, m: M, n: M) -> bool:
        return self.leq(m, n) and self.leq(n, m)

    def sample(self, n: int = 64, seed: int = DEFAULT_SEED) -> Sample:
        if self.sampler is None:
            raise ValueError(f"monoid {self.name} has no sampler")
        return Sample.draw(self.sampler, n, seed, name=self.name)


def sup(mon: OrderedMonoid[M], m: M, n: M) -> M:
    if mon.sup_fn is None:
        raise NoSupremum(f"{mon.name} defines no supremum")
    s = mon.sup_fn(m, n)
    if s is None:
        raise NoSupremum(f"no least upper bound of {m!r} and {n!r} in {mon.name}")
    return s


def sup_from_sample(mon: OrderedMonoid[M], m: M, n: M, sample: Sample) -> M:
    """Least upper bound of ``m, n`` among the sampled elements (test fallback only)."""
    ubs = [u for u in sample if mon.leq(m, u) and mon.leq(n, u)]
    least = [s for s in ubs if all(mon.leq(s, u) for u in ubs)]
    if not least:
        raise NoSupremum(f"no least upper bound of {m!r} and {n!r} in sample")
    return least[0]


def _float_leq(a: float, b: float) -> bool:
    return a <= b


REALS_PLUS: OrderedMonoid[float] = OrderedMonoid(
    name="R+",
    leq=_float_leq,
    plus=lambda a, b: a + b,
    theta=0.0,
    sup_fn=max,
    embed=float,
    sampler=dyadic,
)


def orthant(k: int) -> OrderedMonoid[tuple]:
    """R+^k with componentwise order and addition; elements are tuples."""
    if k < 1:
        raise ValueError("k must be positive")

    def leq(a, b):
        return all(x <= y for x, y in zip(a, b))

    return OrderedMonoid(
        name=f"R+^{k}",
        leq=leq,
        plus=lambda a, b: tuple(x + y for x, y in zip(a, b)),
        theta=(0.0,) * k,
        sup_fn=lambda a, b: tuple(max(x, y) for x, y in zip(a, b)),
        embed=lambda eps: (float(eps),) * k,
        sampler=lambda rng: tuple(dyadic(rng) for _ in range(k)),
    )


# ---------------------------------------------------------------------------
# audits


def check_poset_axioms(mon: OrderedMonoid[M], s: Sample, limit: int = DEFAULT_LIMIT) -> AxiomReport:
    leq = mon.leq
    rep = AxiomReport(f"poset {mon.name}")
    refl = rep.axiom("reflexive")
    for m in s:
        refl.record(leq(m, m), m)
    anti = rep.axiom("antisymmetric")
    for m, n in s.tuples(2, limit):
        if leq(m, n) and leq(n, m):
            anti.record(m == n, m, n)
        else:
            anti.checked += 1
    trans = rep.axiom("transitive")
    for a, b, c in s.tuples(3, limit):
        if leq(a, b) and leq(b, c):
            trans.record(leq(a, c), a, b, c)
        else:
            trans.checked += 1
    smallest = rep.axiom("theta smallest")
    for m in s:
        smallest.record(leq(mon.theta, m), m)
    return rep


def check_monoid_axioms(mon: OrderedMonoid[M], s: Sample, limit: int = DEFAULT_LIMIT) -> AxiomReport:
    plus, leq, theta = mon.plus, mon.leq, mon.theta
    rep = AxiomReport(f"monoid {mon.name}")
    assoc = rep.axiom("associative")
    for a, b, c in s.tuples(3, limit):
        lhs, rhs = plus(plus(a, b), c), plus(a, plus(b, c))
        assoc.record(lhs == rhs, a, b, c, lhs=lhs, rhs=rhs)
    neutral = rep.axiom("theta neutral")
    for m in s:
        lhs, rhs = plus(theta, m), plus(m, theta)
        neutral.record(lhs == m and rhs == m, m, lhs=lhs, rhs=rhs)
    trans = rep.axiom("order translation")
    for m, n, p in s.tuples(3, limit):
        if leq(m, n):
            lhs, rhs = plus(m, p), plus(n, p)
            trans.record(leq(lhs, rhs), m, n, p, lhs=lhs, rhs=rhs)
        else:
            trans.checked += 1
    return rep


def check_sup(mon: OrderedMonoid[M], s: Sample, limit: int = DEFAULT_LIMIT) -> AxiomReport:
    """Upper-bound and leastness of ``mon.sup`` against sampled upper bounds."""
    leq = mon.leq
    rep = AxiomReport(f"sup {mon.name}")
    upper = rep.axiom("upper bound")
    least = rep.axiom("least")
    comm = rep.axiom("commutative")
    idem = rep.axiom("idempotent")
    for m in s:
        idem.record(mon.sup(m, m) == m, m)
    for m, n in s.tuples(2, limit):
        try:
            v = mon.sup(m, n)
        except NoSupremum:
            continue
        upper.record(leq(m, v) and leq(n, v), m, n, lhs=v)
        comm.record(v == mon.sup(n, m), m, n)
    for m, n, u in s.tuples(3, limit):
        if leq(m, u) and leq(n, u):
            v = mon.sup(m, n)
            least.record(leq(v, u), m, n, u, lhs=v, rhs=u)
        else:
            least.checked += 1
    return rep
