import json
import subprocess
import sys

import pytest

from lmss import analyze_graph, complete, cycle, fixture, serialize
from lmss.report import ClassificationReport, render_text


def run_cli(*args, stdin=None):
    proc = subprocess.run(
        [sys.executable, "-m", "lmss", *args],
        capture_output=True,
        text=True,
        input=stdin,
    )
    return proc.returncode, proc.stdout, proc.stderr


def test_analyze_fixture_reports():
    r = analyze_graph(fixture("fig8_G1"), name="fig8_G1")
    assert r.very_well_covered and r.unique_perfect_matching
    assert r.psi_greedoid_auto and r.psi_greedoid_fast and r.psi_greedoid_bruteforce
    assert r.certificates["unique_perfect_matching"] == ["0-1", "2-3", "4-7", "5-6"]

    r = analyze_graph(fixture("fig10_G"), name="fig10_G")
    assert r.well_covered and not r.very_well_covered
    assert r.unique_perfect_matching and not r.psi_greedoid_auto
    assert r.psi_greedoid_fast is None
    assert not r.accessibility and "inaccessible_member" in r.certificates

    r = analyze_graph(complete(1))
    assert r.alpha == 1 and r.mu == 0 and r.psi_greedoid_auto


def test_report_json_roundtrip():
    for name in ("fig8_G1", "fig10_G", "fig4_G", "fig9_G2"):
        r = analyze_graph(fixture(name), name=name)
        again = ClassificationReport.from_json(r.to_json())
        assert again == r
    assert "alpha" in render_text(r)


def test_report_rejects_disagreeing_verdicts():
    r = analyze_graph(cycle(4))
    with pytest.raises(ValueError):
        ClassificationReport(
            **{
                **r.__dict__,
                "psi_greedoid_fast": True,
                "psi_greedoid_bruteforce": False,
            }
        )


def test_cli_analyze_text_and_json(tmp_path):
    code, out, _ = run_cli("analyze", "--fixture", "fig8_G1")
    assert code == 0 and "greedoid" in out and "True" in out

    code, out, _ = run_cli("analyze", "--fixture", "fig8_G1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1 and data["psi_greedoid"]["auto"] is True

    path = tmp_path / "g.txt"
    path.write_text(serialize(cycle(4)))
    code, out, _ = run_cli("analyze", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["predicates"]["very_well_covered"] is True

    code, out, _ = run_cli("analyze", "-", "--format", "json", stdin="2\n0 1\n")
    assert code == 0 and json.loads(out)["invariants"]["alpha"] == 1


def test_cli_analyze_fast_mode_errors_on_non_vwc():
    code, _, err = run_cli("analyze", "--fixture", "fig10_G", "--mode", "fast")
    assert code == 2 and "very well-covered" in err


def test_cli_parse_errors_reported_with_line(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3\n0 0\n")
    code, _, err = run_cli("analyze", str(path))
    assert code == 2 and "line 2" in err


def test_cli_verify_exit_codes():
    code, out, _ = run_cli(
        "verify", "--theorem", "th8", "--source", "fixtures",
        "--fixture", "fig8_G1", "--fixture", "fig8_G2", "--fixture", "fig8_G3",
    )
    assert code == 0 and "total violations: 0" in out

    code, _, err = run_cli("verify", "--theorem", "nope", "--source", "exhaustive", "--max-n", "3")
    assert code == 2

    code, _, err = run_cli(
        "verify", "--theorem", "th8", "--source", "random", "--count", "5", "--n", "6", "--p", "0.5",
    )
    assert code == 2 and "seed" in err


def test_cli_verify_json_deterministic():
    args = (
        "verify", "--theorem", "all", "--source", "random", "--count", "30",
        "--n", "8", "--p", "0.25", "--seed", "7", "--format", "json",
    )
    _, out1, _ = run_cli(*args)
    _, out2, _ = run_cli(*args)
    assert out1 == out2
    data = json.loads(out1)
    assert data["pass"] is True and data["corpus"]["seed"] == 7


def test_cli_generate(tmp_path):
    single = tmp_path / "corpus.txt"
    code, out, _ = run_cli(
        "generate", "--source", "exhaustive", "--max-n", "5", "--output", str(single)
    )
    assert code == 0 and "31 graphs written" in out
    from lmss import parse_edge_lists

    graphs = parse_edge_lists(single.read_text())
    assert len(graphs) == 31  # connected graphs on 1..5 vertices

    split = tmp_path / "many"
    code, out, _ = run_cli(
        "generate", "--source", "random", "--count", "4", "--n", "6", "--p", "0.3",
        "--seed", "5", "--output", str(split), "--split",
    )
    assert code == 0 and len(list(split.glob("*.txt"))) == 4

    # byte-identical across runs with the same seed
    again = tmp_path / "corpus2.txt"
    run_cli("generate", "--source", "random", "--count", "10", "--n", "8", "--p", "0.3",
            "--seed", "42", "--output", str(again))
    first = again.read_bytes()
    run_cli("generate", "--source", "random", "--count", "10", "--n", "8", "--p", "0.3",
            "--seed", "42", "--output", str(again))
    assert again.read_bytes() == first


def test_cli_generate_coronas(tmp_path):
    out_file = tmp_path / "coronas.txt"
    code, out, _ = run_cli(
        "generate", "--source", "coronas", "--max-x", "2", "--max-h", "2",
        "--output", str(out_file),
    )
    assert code == 0 and "written" in out
