import json
import logging

import pytest

from semirep.cli import EXIT_INPUT, EXIT_OK, build_parser, read_source, run
from semirep.core.errors import InputError


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in (
        "FIELD", "SEED", "LOG_LEVEL", "MAX_WORKERS", "CLOSURE_LIMIT",
        "EXHAUSTIVE_CAP", "SAMPLE_VECTORS", "CHOP_ATTEMPTS",
    ):
        monkeypatch.delenv(f"SEMIREP_{key}", raising=False)


def _run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out else None), out


def test_parser_requires_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])


def test_analyze_trivial(capsys):
    code, report, _ = _run_json(capsys, ["analyze", "trivial"])
    assert code == EXIT_OK
    assert report["size"] == 1
    assert len(report["j_classes"]) == 1
    assert report["regular_classes"][0]["sandwich"] == [[0]]
    assert report["dot"] is None


def test_analyze_with_dot(capsys):
    code, report, _ = _run_json(capsys, ["analyze", "full_transformation2", "--dot"])
    assert code == EXIT_OK
    assert report["j_order"] == [[1, 0]]
    assert "J1 -> J0;" in report["dot"]
    assert report["j_classes"][0]["labels"] == ["[1,0]", "[0,1]"]


def test_irreps_report(capsys):
    code, report, _ = _run_json(capsys, ["irreps", "full_transformation2", "--field", "Fp:7"])
    assert code == EXIT_OK
    assert report["field"] == "Fp:7"
    assert report["count"] == 3
    assert report["counts_by_jclass"] == {"0": 2, "1": 1}
    assert report["simples"][0]["annihilator"] == [1, 3]
    assert report["simples"][1]["actions"]["0"] == [[6]]


def test_irreps_rationals_as_strings(capsys):
    _, report, _ = _run_json(capsys, ["irreps", "cyclic2"])
    assert report["field"] == "Q"
    assert report["simples"][0]["actions"]["1"] in ([["1/1"]], [["-1/1"]])


def test_irreps_without_splitting_field(capsys):
    code, report, _ = _run_json(capsys, ["irreps", "cyclic3", "--field", "Q"])
    assert code == EXIT_OK
    assert report["count"] == 2
    assert [s["simplicity"] for s in report["simples"]] == ["simple", "probably_simple"]


def test_chop_reports_verdicts(capsys):
    code, report, _ = _run_json(capsys, ["chop", "cyclic3", "--field", "Q"])
    assert code == EXIT_OK
    assert sorted(f["simplicity"] for f in report["factors"]) == ["probably_simple", "simple"]


def test_output_is_reproducible(capsys):
    argv = ["irreps", "full_transformation3", "--field", "Fp:3", "--seed", "4"]
    _, _, first = _run_json(capsys, argv)
    _, _, second = _run_json(capsys, argv)
    assert first == second


def test_schutz(capsys):
    code, report, _ = _run_json(
        capsys, ["schutz", "full_transformation2", "--jclass", "1", "--side", "right"]
    )
    assert code == EXIT_OK
    assert report["transversal"] == [1, 3]
    assert report["matrices"]["0"] == [["0", 1], [1, "0"]]


def test_chop(capsys):
    code, report, _ = _run_json(capsys, ["chop", "right_zero", "--field", "Fp:5"])
    assert code == EXIT_OK
    assert report["module_dim"] == 2
    assert report["distinct"] == 1
    zero = [f for f in report["factors"] if f["zero_action"]]
    assert len(zero) == 1 and zero[0]["apex"] is None


def test_verify(capsys):
    code, report, _ = _run_json(capsys, ["verify", "chain2", "--field", "Fp:2"])
    assert code == EXIT_OK
    assert report["passed"]
    assert all(c["passed"] for c in report["checks"])


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["analyze"],
        ["analyze", "no_such_semigroup"],
        ["irreps", "cyclic2", "--field", "Fp:4"],
        ["schutz", "full_transformation2", "--jclass", "5"],
        ["schutz", "nilpotent_monoid", "--jclass", "1"],
        ["frobnicate", "trivial"],
    ],
)
def test_input_errors(capsys, argv):
    assert run(argv) == EXIT_INPUT
    assert capsys.readouterr().out == ""


def test_non_associative_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"type": "cayley", "table": [[1, 0], [0, 0]]}))
    assert run(["analyze", str(path)]) == EXIT_INPUT
    assert "not associative" in capsys.readouterr().err


def test_huge_table_entry_is_an_input_error(tmp_path, capsys):
    path = tmp_path / "big.json"
    path.write_text(json.dumps({"type": "cayley", "table": [[10 ** 30]]}))
    assert run(["analyze", str(path)]) == EXIT_INPUT
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "table[0][0]" in captured.err


def test_file_source(tmp_path, capsys):
    path = tmp_path / "t2.json"
    path.write_text(json.dumps({"type": "transformations", "degree": 2, "generators": [[1, 0], [0, 0]]}))
    code, report, _ = _run_json(capsys, ["analyze", str(path)])
    assert code == EXIT_OK
    assert report["size"] == 4


def test_environment_field(monkeypatch, capsys):
    monkeypatch.setenv("SEMIREP_FIELD", "Fp:2")
    _, report, _ = _run_json(capsys, ["irreps", "cyclic2"])
    assert report["field"] == "Fp:2"
    assert report["count"] == 1


def test_read_source_unknown():
    with pytest.raises(InputError):
        read_source("definitely-not-here")


def test_steps_are_logged(caplog, capsys):
    with caplog.at_level(logging.INFO):
        assert run(["analyze", "trivial", "--log-level", "info"]) == EXIT_OK
    assert "STEP 01: load" in caplog.text
    assert "STEP 02: analyze" in caplog.text
    assert "STEP" not in capsys.readouterr().out
