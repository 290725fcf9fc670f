import json
import math
import subprocess
import sys

import pytest

from sombor.cli import UsageError, execute, main, parse_args
from sombor.claims import evaluate_formula
from sombor.constructors import ShadowConvention


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_index_defaults():
    cfg = parse_args(["index", "--spec", "cycle(6)"])
    assert cfg.command == "index"
    assert str(cfg.spec) == "cycle(6)"
    assert cfg.format == "text" and cfg.out is None


def test_parse_verify():
    cfg = parse_args(["verify", "--spec", "cycle(4)", "--m", "1..3", "--tol", "1e-9", "--format", "json"])
    assert cfg.m_values == (1, 2, 3)
    assert cfg.tol == 1e-9
    assert cfg.format == "json"
    assert [str(s) for s in cfg.specs] == ["cycle(4)"]


def test_parse_verify_defaults():
    cfg = parse_args(["verify"])
    assert [str(s) for s in cfg.specs] == ["cycle(6)", "complete(4)", "complete_bipartite(3,3)", "hypercube(3)"]
    assert cfg.m_values == (1, 2, 3)
    assert cfg.convention is None


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["index"], "--spec"),
        (["index", "--spec", "cycle(6)", "--bogus"], "--bogus"),
        (["index", "--spec", "wheel(6)"], "--spec"),
        (["index", "--file", "/nonexistent/graph.txt"], "--file"),
        (["verify", "--m", "3..1"], "--m"),
        (["verify", "--tol", "-1"], "--tol"),
        (["verify", "--format", "edgelist"], "--format"),
        (["gen", "--spec", "cycle(4)", "--format", "json"], "--format"),
        (["table"], "--n"),
        ([], "command"),
    ],
)
def test_usage_errors(argv, flag):
    with pytest.raises(UsageError, match=flag.lstrip("-")):
        parse_args(argv)


def test_usage_exit_code(capsys):
    code, out, err = run(["index"], capsys)
    assert code == 1
    assert out == ""
    assert "--spec" in err


def test_index_cycle(capsys):
    code, out, _ = run(["index", "--spec", "cycle(6)"], capsys)
    assert code == 0
    assert out == "16.9705627485\n"
    assert float(out) == pytest.approx(12 * math.sqrt(2), rel=1e-11)


def test_index_splitting_matches_formula(capsys):
    code, out, _ = run(["index", "--spec", "cycle(6)|splitting(m=1)"], capsys)
    assert code == 0
    expected = evaluate_formula("T1b", 6, 2, 1)
    assert expected == pytest.approx(12 * math.sqrt(2) * (math.sqrt(10) + 2), rel=1e-14)
    assert float(out) == pytest.approx(expected, rel=1e-11)


def test_index_json(capsys):
    code, out, _ = run(["index", "--spec", "cycle(6)", "--format", "json"], capsys)
    assert json.loads(out) == {"source": "cycle(6)", "sombor_index": 16.9705627485}


def test_spectrum_and_energy(capsys):
    code, out, _ = run(["spectrum", "--spec", "cycle(6)"], capsys)
    assert code == 0
    values = [float(x) for x in out.split()]
    assert values == pytest.approx([2, 1, 1, -1, -1, -2], abs=1e-11)
    code, out, _ = run(["energy", "--spec", "cycle(6)"], capsys)
    assert float(out) == pytest.approx(8, rel=1e-11)
    code, out, _ = run(["energy", "--spec", "cycle(6)", "--matrix", "sombor", "--format", "json"], capsys)
    assert json.loads(out)["sombor_energy"] == pytest.approx(16 * math.sqrt(2), rel=1e-11)


def test_gen_roundtrip(tmp_path, capsys):
    spec = "hypercube(3)|shadow(m=2,convention=example)"
    f = tmp_path / "g.txt"
    assert main(["gen", "--spec", spec, "--out", str(f)]) == 0
    assert capsys.readouterr().out == ""
    header = f.read_text().splitlines()[0]
    assert header == "24 108"
    _, from_file, _ = run(["index", "--file", str(f)], capsys)
    _, from_spec, _ = run(["index", "--spec", spec], capsys)
    assert from_file == from_spec


def test_verify_strict_exit(capsys):
    code, out, _ = run(["verify", "--spec", "cycle(4)", "--m", "1", "--strict"], capsys)
    assert code == 2
    t3 = [ln for ln in out.splitlines() if ln.startswith("| T3 |")]
    assert len(t3) == 1 and "mismatch" in t3[0]
    code, _, _ = run(["verify", "--spec", "cycle(4)", "--m", "1"], capsys)
    assert code == 0


def test_verify_strict_without_mismatch(capsys):
    # irregular base graph: every row is inapplicable, nothing mismatches
    code, out, _ = run(["verify", "--spec", "cycle(4)|splitting(m=1)", "--strict"], capsys)
    assert code == 0
    assert "mismatch" not in out and "inapplicable" in out


def test_verify_convention_and_formats(capsys):
    code, out, _ = run(["verify", "--spec", "cycle(4)", "--m", "2", "--convention", "example", "--format", "json"], capsys)
    rows = json.loads(out)
    convs = {r["instance"]["convention"] for r in rows}
    assert convs == {None, ShadowConvention.EXAMPLE.value}
    code, out, _ = run(["verify", "--spec", "cycle(4)", "--m", "2", "--format", "csv"], capsys)
    assert out.splitlines()[0] == "claim_id,instance,formula_value,direct_value,abs_dev,rel_dev,verdict"


def test_verify_deterministic(capsys):
    _, a, _ = run(["verify", "--format", "json"], capsys)
    _, b, _ = run(["verify", "--format", "json"], capsys)
    assert a == b


def test_table(capsys):
    code, out, _ = run(["table", "--n", "3", "--m", "1..2", "--format", "json"], capsys)
    assert code == 0
    rows = json.loads(out)
    assert {r["instance"]["spec"] for r in rows} == {"cycle(3)", "complete(3)", "hypercube(3)", "complete_bipartite(3,3)"}


def test_execute_out_file(tmp_path):
    f = tmp_path / "r.md"
    status, text = execute(parse_args(["verify", "--spec", "cycle(5)", "--m", "1", "--out", str(f)]))
    assert status == 0 and text == ""
    assert f.read_text().startswith("| claim_id |")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sombor", "index", "--spec", "complete(4)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert float(proc.stdout) == pytest.approx(4 * 9 / math.sqrt(2), rel=1e-11)
