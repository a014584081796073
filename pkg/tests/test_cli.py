"""CLI 와 보고서 출력"""
import csv
import io
import json

import pytest

from app import config
from app import main as cli
from app.harness import VerificationResult
from app.modules.report_writer import (
    render_results,
    resolve_output_path,
    results_csv_rows,
    results_payload,
)


def run(argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    return exc.value.code


def test_verify_sym_writes_json(tmp_path):
    out = tmp_path / "report.json"
    assert run(["verify", "sym", "--min-n", "2", "--max-n", "3", "--quiet", "--out", str(out)]) == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["status"] == "pass"
    assert [r["parameters"] for r in data["results"]] == [{"n": 2}, {"n": 3}]
    assert "wall_time" not in data["results"][0]


def test_json_is_identical_across_worker_counts(tmp_path, capsys):
    paths = []
    for workers in ("1", "4"):
        out = tmp_path / f"report_{workers}.json"
        argv = ["verify", "sym", "--min-n", "4", "--max-n", "4", "--workers", workers, "--quiet", "--out", str(out)]
        assert run(argv) == cli.EXIT_FAIL
        paths.append(out)
    assert paths[0].read_bytes() == paths[1].read_bytes()
    data = json.loads(paths[0].read_text(encoding="utf-8"))
    assert data["status"] == "fail"
    assert [c["order"] for c in data["results"][0]["counterexamples"]] == [2, 4]
    assert "✗ 실패: symmetric-ff(n=4)" in capsys.readouterr().err


def test_verify_sym_default_range_starts_at_five(capsys):
    assert run(["verify", "sym", "--max-n", "4", "--quiet"]) == cli.EXIT_ERROR
    assert "--min-n" in capsys.readouterr().err


def test_json_to_stdout_keeps_logs_off_stdout(capsys):
    assert run(["verify", "alt", "--max-n", "4"]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["status"] == "pass"
    assert "[1/2]" in captured.err


def test_text_format(capsys):
    assert run(["witness", "cycles", "--n", "4", "--format", "text", "--quiet"]) == 0
    out = capsys.readouterr().out
    assert "cycle-witness" in out
    assert "⚠️" in out


def test_csv_format(capsys):
    assert run(["verify", "sym", "--min-n", "3", "--max-n", "3", "--format", "csv", "--quiet"]) == 0
    rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
    assert len(rows) == 2
    assert rows[0]["target"] == "symmetric-ff"
    assert rows[0]["rep_generators"] == "(2 3)"


def test_cover_text(capsys):
    assert run(["cover", "--group", "S5", "--subgroup", "(1 2 3)(4 5)", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "|Δ_H(G)| = 12" in out
    assert "생성 원소 108개" in out


def test_cover_json(capsys):
    assert run(["cover", "--group", "S3", "--subgroup", "(1 2)"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["cover_size"] == 2
    assert data["generating_count"] == 4


def test_cover_error_exit_code(capsys):
    assert run(["cover", "--group", "S4", "--subgroup", "(1 2),(1 2 3 4)"]) == cli.EXIT_ERROR
    assert "에러 발생" in capsys.readouterr().err


def test_lattice_command(tmp_path):
    out = tmp_path / "lattice.json"
    assert run(["lattice", "--group", "C4", "--quiet", "--out", str(out)]) == 0
    assert json.loads(out.read_text(encoding="utf-8"))["frattini"]["order"] == 2


def test_conjecture_groups_list(capsys):
    assert run(["scan", "conjecture", "--groups", "A5,PSL(2,4)", "--quiet"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [r["parameters"]["group"] for r in data["results"]] == ["A5", "PSL(2,4)"]


def test_failing_target_sets_exit_code(monkeypatch, capsys):
    def failing(*args, **kwargs):
        result = VerificationResult("symmetric-ff", {"n": 3})
        result.counterexamples.append({"subgroup": "deg=3;gens=(1 2)"})
        return [result]

    monkeypatch.setattr(cli, "verify_theorem_symmetric", failing)
    assert run(["verify", "sym", "--max-n", "3", "--quiet"]) == cli.EXIT_FAIL
    assert "✗ 실패: symmetric-ff(n=3)" in capsys.readouterr().err


def test_cap_flag(monkeypatch, capsys):
    monkeypatch.setattr(config, "LATTICE_CAP", config.LATTICE_CAP)
    monkeypatch.setattr(config, "ENUM_CAP", config.ENUM_CAP)
    assert run(["verify", "sym", "--min-n", "5", "--max-n", "5", "--cap", "100", "--quiet"]) == cli.EXIT_ERROR
    assert "상한" in capsys.readouterr().err


def test_str_list_keeps_psl_commas():
    assert cli.str_list("A5, PSL(2,7),PSL(2, 8)") == ["A5", "PSL(2,7)", "PSL(2, 8)"]


def test_int_list():
    assert cli.int_list("4,5, 7") == [4, 5, 7]


# ===== 보고서 출력 =====

def test_resolve_output_path(monkeypatch, tmp_path):
    monkeypatch.setattr(config, "REPORTS_DIR", tmp_path)
    assert resolve_output_path("report.json") == tmp_path / "report.json"
    assert resolve_output_path("sub/report.json").parts[-2:] == ("sub", "report.json")


def test_payload_and_rows():
    ok = VerificationResult("order-witness", {"q": 9}, notes=["건너뜀"], wall_time=0.2)
    payload = results_payload([ok])
    assert payload["status"] == "pass"
    assert payload["results"][0]["notes"] == ["건너뜀"]
    rows = results_csv_rows([ok])
    assert rows == [{"target": "order-witness", "parameters": '{"q": 9}', "status": "pass",
                     "counterexamples": 0, "notes": "건너뜀"}]
    assert "0.2" in render_results([ok], "text")
    with pytest.raises(ValueError):
        render_results([ok], "xml")
