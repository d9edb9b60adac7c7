"""Command-line driver: bound sweeps, domination trials, and axiom audits.

Exit codes: 0 every verdict as expected, 1 a verdict failed, 2 bad config.
"""
from __future__ import annotations

import argparse
import configparser
import io
import logging
import sys
from dataclasses import dataclass, field, fields, replace
from typing import Any, Sequence

import numpy as np

from . import engine
from .distances import ABS
from .instances import DEFAULT_NODES, MAX_SET_GRID, Instance, audit_instance, build
from .lipschitz import MAX_MEMBERSHIP_NODES, check_modulus_axioms, power_modulus, random_holder
from .order import REALS_PLUS, AxiomReport, stream
from .quadrature import Grid
from .suites import SUITES, SuiteEntry, run_suite

log = logging.getLogger(__name__)

INSTANCES = ("scalar", "vector", "pair", "setvalued")
OMEGAS = {"id": 1.0, "sqrt": 0.5, "cbrt": 1.0 / 3.0}
FORMATS = ("csv", "markdown")
FINE_NODES = 100_001
AUDIT_NODES = 257
AUDIT_TRIALS = 100
DEFAULT_SWEEP = (-1.0, -0.5, 0.0, 0.5, 1.0)


class ConfigError(ValueError):
    pass


class InstanceError(RuntimeError):
    pass


@dataclass(frozen=True)
class RunConfig:
    instance: str = "scalar"
    sweep: tuple[float, ...] = DEFAULT_SWEEP
    grid_nodes: int | None = None
    seed: int = 42
    trials: int = 1000
    tolerance: float | None = None
    omega: str = "id"
    output_format: str = "csv"

    def validate(self) -> "RunConfig":
        if self.instance not in INSTANCES:
            raise ConfigError(f"instance: unknown {self.instance!r}, choose from {', '.join(INSTANCES)}")
        if self.omega not in OMEGAS:
            raise ConfigError(f"omega: unknown {self.omega!r}, choose from {', '.join(OMEGAS)}")
        if self.omega != "id" and self.instance != "scalar":
            raise ConfigError("omega: moduli other than id are wired for the scalar instance only")
        if self.output_format not in FORMATS:
            raise ConfigError(f"output_format: unknown {self.output_format!r}")
        if self.grid_nodes is not None and self.grid_nodes < 3:
            raise ConfigError("grid_nodes: must be >= 3")
        if self.trials < 1:
            raise ConfigError("trials: must be >= 1")
        if self.tolerance is not None and not self.tolerance > 0:
            raise ConfigError("tolerance: must be > 0")
        for t in self.sweep:
            if not -1.0 <= t <= 1.0:
                raise ConfigError(f"sweep: {t} outside the domain [-1, 1]")
        return self

    @property
    def nodes(self) -> int:
        if self.grid_nodes is not None:
            return self.grid_nodes
        return FINE_NODES if self.omega != "id" else DEFAULT_NODES[self.instance]

    @property
    def tol(self) -> float:
        if self.tolerance is not None:
            return self.tolerance
        if self.instance == "setvalued" or self.omega != "id":
            return 1e-6
        return 1e-9


_INT = ("grid_nodes", "seed", "trials")
_FLOAT = ("tolerance",)


def _parse_sweep(text: str) -> tuple[float, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(float(v) for v in text.split(","))


def parse_config(text: str) -> RunConfig:
    """Parse a ``[run]`` section of ``key = value`` lines."""
    cp = configparser.ConfigParser()
    try:
        cp.read_string(text, source="<config>")
    except configparser.Error as exc:
        raise ConfigError(str(exc)) from exc
    if not cp.has_section("run"):
        raise ConfigError("missing [run] section")
    known = {f.name for f in fields(RunConfig)}
    kw: dict[str, Any] = {}
    for key, raw in cp.items("run"):
        if key not in known:
            raise ConfigError(f"{key}: unknown field")
        try:
            if key == "sweep":
                kw[key] = _parse_sweep(raw)
            elif key in _INT:
                kw[key] = int(raw)
            elif key in _FLOAT:
                kw[key] = float(raw)
            else:
                kw[key] = raw.strip()
        except ValueError as exc:
            raise ConfigError(f"{key}: {exc}") from exc
    return RunConfig(**kw).validate()


def format_config(cfg: RunConfig) -> str:
    lines = ["[run]"]
    for f in fields(cfg):
        v = getattr(cfg, f.name)
        if v is None:
            continue
        if f.name == "sweep":
            v = ",".join(repr(float(t)) for t in v)
        elif isinstance(v, float):
            v = repr(v)
        lines.append(f"{f.name} = {v}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# running


@dataclass(frozen=True)
class Row:
    t: float
    bound: Any
    deviation: Any
    gap: Any
    verdict: str


@dataclass
class RunReport:
    config: RunConfig
    rows: list[Row] = field(default_factory=list)
    audits: list[AxiomReport] = field(default_factory=list)
    counterexamples: list[SuiteEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            all(r.verdict == "pass" for r in self.rows)
            and all(a.passed for a in self.audits)
            and all(e.ok for e in self.counterexamples)
        )

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1


def _domination(inst: Instance, cfg: RunConfig, bounds: dict[float, Any], alpha: float) -> AxiomReport:
    rng = stream(cfg.seed, f"domination/{inst.name}/{cfg.omega}")
    q, tol = inst.q, cfg.tol
    rep = AxiomReport("domination")
    res = rep.axiom(f"deviation <= bound + {tol:g}")
    for k in range(cfg.trials):
        f = random_holder(rng, inst.nodes, alpha) if alpha != 1 else inst.member(rng)
        for t in cfg.sweep:
            ok, dev = engine.dominated(q, f, inst.dY, t, bounds[t], tol)
            res.record(ok, k, t, lhs=dev, rhs=bounds[t])
    return rep


def run(cfg: RunConfig) -> RunReport:
    cfg.validate()
    sweep = tuple(sorted(set(cfg.sweep)))
    cfg = replace(cfg, sweep=sweep)
    try:
        grid = Grid.uniform(cfg.nodes, breakpoints=sweep)
    except ValueError as exc:
        raise ConfigError(f"grid_nodes: {exc}") from exc
    if cfg.instance == "setvalued" and len(grid) > MAX_SET_GRID:
        raise ConfigError(f"grid_nodes: set-valued grid has {len(grid)} nodes with the sweep, cap is {MAX_SET_GRID}")
    try:
        inst = build(cfg.instance, grid)
    except ValueError as exc:
        raise InstanceError(str(exc)) from exc
    report = RunReport(cfg)
    alpha = OMEGAS[cfg.omega]

    # operator audits do not depend on omega; pairwise membership needs a small grid
    audit_inst = inst
    if len(grid) > MAX_MEMBERSHIP_NODES:
        audit_inst = build(cfg.instance, Grid.uniform(AUDIT_NODES, breakpoints=sweep))
    audit = audit_instance(audit_inst, sweep, cfg.seed, min(cfg.trials, AUDIT_TRIALS), cfg.tol)
    report.audits.append(audit)
    w = power_modulus(alpha, ABS, cfg.omega)
    if alpha != 1:
        report.audits.append(check_modulus_axioms(w, REALS_PLUS.sample(64, cfg.seed)))

    bounds = {}
    for t in sweep:
        if alpha != 1:
            r = engine.homega_bound(inst.q, inst.dT, w, inst.dY, t, cfg.tol, strict=False)
        else:
            r = engine.verify_sharpness(inst.q, inst.dT, inst.dY, t, cfg.tol, strict=False)
        bounds[t] = r.bound
        report.rows.append(Row(t, r.bound, r.deviation, r.gap, "pass" if r.sharp else "fail"))
        log.info("t=%s bound=%s deviation=%s", t, r.bound, r.deviation)

    if sweep:
        report.audits.append(_domination(inst, cfg, bounds, alpha))
    report.counterexamples = run_suite("counterexamples", cfg.seed)["counterexamples"]
    return report


# ---------------------------------------------------------------------------
# output


def fmt(v) -> str:
    if isinstance(v, (tuple, list, np.ndarray)):
        return ";".join(fmt(x) for x in v)
    v = float(v)
    if v == 0:
        v = 0.0  # drop the sign of -0.0
    return format(v, ".17g")


def render_csv(report: RunReport) -> str:
    buf = io.StringIO()
    buf.write("t,bound,deviation,gap,verdict\n")
    for r in report.rows:
        buf.write(f"{fmt(r.t)},{fmt(r.bound)},{fmt(r.deviation)},{fmt(r.gap)},{r.verdict}\n")
    return buf.getvalue()


def _audit_section(title: str, lines: Sequence[str], ok: bool) -> list[str]:
    out = [f"## Audit: {title}", "", f"verdict: {'pass' if ok else 'FAIL'}", ""]
    out += [f"- {s}" for s in lines]
    out.append("")
    return out


def render_markdown(report: RunReport) -> str:
    cfg = report.config
    out = [f"# Deviation bound sweep: {cfg.instance} instance, omega={cfg.omega}", ""]
    out += ["```", format_config(cfg).rstrip(), "```", ""]
    out += ["| t | bound | deviation | gap | verdict |", "|---|---|---|---|---|"]
    for r in report.rows:
        out.append(f"| {fmt(r.t)} | {fmt(r.bound)} | {fmt(r.deviation)} | {fmt(r.gap)} | {r.verdict} |")
    out.append("")
    for a in report.audits:
        out += _audit_section(a.subject, a.lines(), a.passed)
    out += _audit_section(
        "counterexamples", [e.line() for e in report.counterexamples], all(e.ok for e in report.counterexamples)
    )
    out.append(f"overall: {'pass' if report.passed else 'FAIL'}")
    return "\n".join(out) + "\n"


def emit_report(report: RunReport, fmt_name: str, out: str | None = None) -> str:
    text = render_csv(report) if fmt_name == "csv" else render_markdown(report)
    if out:
        with open(out, "w", newline="\n", encoding="utf-8") as fh:
            fh.write(text)
    return text


def render_suites(results: dict[str, list[SuiteEntry]]) -> str:
    out = ["# Axiom audits", ""]
    for name, entries in results.items():
        out += _audit_section(name, [e.line() for e in entries], all(e.ok for e in entries))
    ok = all(e.ok for es in results.values() for e in es)
    out.append(f"overall: {'pass' if ok else 'FAIL'}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# CLI


def setup_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ostrowski", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="sweep bounds, check sharpness and domination")
    v.add_argument("--config", help="file with a [run] section; flags override it")
    v.add_argument("--instance", choices=INSTANCES)
    v.add_argument("--sweep", help="comma-separated t values in [-1, 1]")
    v.add_argument("--grid-nodes", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--tolerance", type=float)
    v.add_argument("--omega", choices=tuple(OMEGAS))
    v.add_argument("--format", dest="output_format", choices=FORMATS)
    v.add_argument("--out")

    a = sub.add_parser("audit", help="run axiom suites, including expected failures")
    a.add_argument("--suite", default="all", choices=tuple(SUITES) + ("all",))
    a.add_argument("--seed", type=int, default=42)
    a.add_argument("--samples", type=int, default=10_000, help="tuples per axiom")
    a.add_argument("--out")
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                cfg = parse_config(fh.read())
        except OSError as exc:
            raise ConfigError(f"config: {exc}") from exc
    over: dict[str, Any] = {}
    for name in ("instance", "grid_nodes", "seed", "trials", "tolerance", "omega", "output_format"):
        val = getattr(args, name)
        if val is not None:
            over[name] = val
    if args.sweep is not None:
        try:
            over["sweep"] = _parse_sweep(args.sweep)
        except ValueError as exc:
            raise ConfigError(f"sweep: {exc}") from exc
    return replace(cfg, **over).validate()


def _join_sweep(argv: list[str]) -> list[str]:
    """Glue ``--sweep -1,0`` into ``--sweep=-1,0``; argparse reads -1,0 as a flag."""
    out = []
    it = iter(argv)
    for a in it:
        if a == "--sweep":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--sweep={nxt}")
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = setup_parser().parse_args(_join_sweep(argv))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.command == "audit":
        results = run_suite(args.suite, args.seed, args.samples)
        text = render_suites(results)
        if args.out:
            with open(args.out, "w", newline="\n", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        return 0 if all(e.ok for es in results.values() for e in es) else 1

    try:
        cfg = config_from_args(args)
        report = run(cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (InstanceError, engine.PConditionViolation) as exc:
        print(f"instance error: {exc}", file=sys.stderr)
        return 1
    text = emit_report(report, cfg.output_format, args.out)
    if not args.out:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
