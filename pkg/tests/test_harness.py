import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ostrowski.harness import (
    ConfigError,
    RunConfig,
    format_config,
    main,
    parse_config,
    render_csv,
    render_markdown,
    run,
)

FAST = dict(trials=5)


def test_config_round_trip_default():
    cfg = RunConfig()
    assert parse_config(format_config(cfg)) == cfg


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from(["scalar", "vector", "pair", "setvalued"]),
    st.lists(st.integers(-8, 8).map(lambda k: k / 8), max_size=6),
    st.integers(0, 2**31),
    st.one_of(st.none(), st.floats(1e-12, 1e-3)),
    st.sampled_from(["csv", "markdown"]),
)
def test_config_round_trip(instance, sweep, seed, tol, out):
    cfg = RunConfig(instance, tuple(sweep), None, seed, 7, tol, "id", out)
    assert parse_config(format_config(cfg)) == cfg


@pytest.mark.parametrize(
    "text",
    [
        "[run]\ninstance = matrix\n",
        "[run]\nsweep = 0,2\n",
        "[run]\ngrid_nodes = 2\n",
        "[run]\ntrials = many\n",
        "[run]\ncolour = red\n",
        "[run]\nomega = sqrt\ninstance = vector\n",
        "instance = scalar\n",
        "[other]\n",
    ],
)
def test_bad_configs(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_csv_rows_and_verdicts():
    rep = run(RunConfig(sweep=(0.0, 1.0), **FAST))
    lines = render_csv(rep).splitlines()
    assert lines[0] == "t,bound,deviation,gap,verdict"
    assert lines[1] == "0,0.5,0.5,0,pass"
    assert lines[2] == "1,1,1,0,pass"
    assert rep.exit_code == 0


def test_empty_sweep_gives_header_only():
    rep = run(RunConfig(sweep=(), **FAST))
    assert render_csv(rep) == "t,bound,deviation,gap,verdict\n"
    assert rep.passed


def test_markdown_sections():
    md = render_markdown(run(RunConfig(instance="pair", sweep=(0.5,), **FAST)))
    assert md.startswith("# Deviation bound sweep: pair instance")
    for heading in ("## Audit: audit chain pair", "## Audit: domination", "## Audit: counterexamples"):
        assert heading in md
    assert "| 0.5 | 0.625;0.625 | 0.625;0.625 | 0;0 | pass |" in md
    assert md.rstrip().endswith("overall: pass")


def test_runs_are_deterministic():
    cfg = RunConfig(instance="setvalued", sweep=(-0.5, 0.25), seed=3, **FAST)
    assert render_markdown(run(cfg)) == render_markdown(run(cfg))


def test_main_exit_codes(tmp_path, capsys):
    assert main(["verify", "--sweep", "0", "--trials", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[1] == "0,0.5,0.5,0,pass"
    assert main(["verify", "--sweep", "-1,-0.5", "--trials", "2"]) == 0
    assert capsys.readouterr().out.splitlines()[2] == "-0.5,0.625,0.625,0,pass"
    assert main(["verify", "--sweep", "3"]) == 2
    assert "sweep" in capsys.readouterr().err
    assert main(["verify", "--config", str(tmp_path / "missing.ini")]) == 2


def test_failed_verdict_gives_exit_one(monkeypatch, capsys):
    from ostrowski import harness

    real = harness.run

    def broken(cfg):
        rep = real(cfg)
        rep.rows[0] = harness.Row(rep.rows[0].t, 1.0, 0.5, 0.5, "fail")
        return rep

    monkeypatch.setattr(harness, "run", broken)
    assert main(["verify", "--sweep", "0", "--trials", "2"]) == 1
    assert capsys.readouterr().out.splitlines()[1] == "0,1,0.5,0.5,fail"


def test_config_file_with_flag_override(tmp_path, capsys):
    path = tmp_path / "run.ini"
    path.write_text("[run]\ninstance = vector\nsweep = 0.5\ntrials = 3\n")
    out = tmp_path / "report.md"
    assert main(["verify", "--config", str(path), "--format", "markdown", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert "vector instance" in out.read_text()


def test_audit_subcommand(capsys):
    assert main(["audit", "--suite", "counterexamples", "--samples", "200"]) == 0
    text = capsys.readouterr().out
    assert "witness args=(0.0, 0.0, 0.5) lhs=1.0 rhs=0.5" in text
    assert "witness args=(1.0, 1.0, 2.0) lhs=0.75" in text


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ostrowski", "verify", "--sweep", "-1", "--trials", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "-1,1,1,0,pass"
