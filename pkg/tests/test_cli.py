from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from smoothrough.cli import main
from smoothrough.fileio import load_json, parse_algebra_file

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(*argv: str) -> tuple[int, str]:
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv: str) -> tuple[int, dict]:
    code, text = run(*argv)
    return code, json.loads(text)


def cli(*argv: str) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "smoothrough", *argv], capture_output=True, text=True)


def test_check_sample_passes():
    code, d = run_json("check", str(SAMPLES / "pairing_2_1.json"))
    assert code == 0 and d["passed"] and d["schema"] == 1
    assert set(d) >= {"command", "summary", "laws", "sections"}


def test_nonassociative_file_names_the_law():
    p = cli("check", str(SAMPLES / "nonassociative.json"))
    assert p.returncode == 1
    err = json.loads(p.stdout)["error"]
    assert err["law"] == "associativity"
    assert set(err["matrices"]) == {"lhs", "rhs"}


def test_usage_and_parse_errors_exit_2(tmp_path):
    assert cli("nonsense").returncode == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"format": 1, "dim": 1, "structure_constants": [[["0.5"]]]}')
    p = cli("check", str(bad))
    assert p.returncode == 2
    assert "structure_constants[0][0][0]" in p.stdout + p.stderr
    truncated = tmp_path / "trunc.json"
    truncated.write_text('{"format": 1,\n')
    assert cli("check", str(truncated)).returncode == 2
    assert cli("check", str(tmp_path / "absent.json")).returncode == 2


def test_pairing_command_fields():
    code, d = run_json("pairing", "--dimv", "2", "--dimw", "1", "--b", "1,0")
    assert code == 0 and d["passed"]
    assert d["self_induced"] is True
    assert d["canonical_map_monic"] is False and d["canonical_map_rank"] == 1
    assert (d["dim_M_l"], d["dim_M_r"], d["dim_double_centralizer"]) == (1, 4, 3)
    assert d["structure_constants"][0][0] == ["1", "0"]


def test_pairing_with_explicit_witnesses():
    code, d = run_json("pairing", "--dimv", "1", "--dimw", "1", "--b", "2", "--witness-v", "1",
                       "--witness-w", "1/2")
    assert code == 0 and d["passed"]
    code, _ = run("pairing", "--dimv", "1", "--dimw", "1", "--b", "2", "--witness-v", "1", "--witness-w", "1")
    assert code == 2


def test_theorem_and_multipliers_commands():
    code, d = run_json("theorem", str(SAMPLES / "pairing_2_1.json"))
    assert code == 0 and d["passed"]
    code, d = run_json("multipliers", str(SAMPLES / "pairing_2_1.json"))
    assert code == 0 and d["passed"]


def test_smoothen_and_roughen_emit_algebra_files():
    code, text = run("smoothen", str(SAMPLES / "pairing_2_1.json"), "--module", "A⊕0-action")
    assert code == 0
    f = parse_algebra_file(load_json(text))
    assert f.modules["Smooth(A⊕0-action)"].dim == 2
    code, text = run("roughen", str(SAMPLES / "pairing_2_1.json"), "--module", "A⊕0-action")
    assert parse_algebra_file(load_json(text)).modules["Rough(A⊕0-action)"].dim == 1
    code, _ = run("smoothen", str(SAMPLES / "pairing_2_1.json"), "--module", "nope")
    assert code == 2


def test_morita_command():
    code, d = run_json("morita", str(SAMPLES / "morita_m2.json"))
    assert code == 0 and d["passed"]


def test_text_format_before_or_after_subcommand():
    c1, t1 = run("--format", "text", "check", str(SAMPLES / "matrix_2.json"))
    c2, t2 = run("check", str(SAMPLES / "matrix_2.json"), "--format", "text")
    assert c1 == c2 == 0 and t1 == t2
    assert "PASS" in t1


def test_corpus_small():
    code, d = run_json("corpus", "--max-dim", "1")
    assert code == 0 and d["passed"]
    assert len(d["corpus"]) == 4
    assert all(s["failed"] == 0 for s in d["summary"].values())


def test_corpus_output_is_byte_identical():
    a = cli("corpus", "--max-dim", "2", "--format", "json")
    b = cli("corpus", "--max-dim", "2", "--format", "json")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


@pytest.mark.parametrize("argv", [["corpus", "--max-dim", "0"], ["pairing", "--dimv", "1", "--dimw", "1", "--b", "0"]])
def test_invalid_arguments(argv):
    assert run(*argv)[0] == 2
