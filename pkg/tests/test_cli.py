import json
import subprocess
import sys


from bruhat_sl2.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_sl2_sweep_streams_reports(capsys):
    code, out, _ = run(capsys, "verify-sl2", "--n", "4", "--workers", "1")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert len(lines) == 15
    assert lines[-1]["summary"] == {"count": 14, "passed": 14, "failed": 0, "inconclusive": 0}
    assert all(set(r["relations"].values()) == {"pass"} for r in lines[:-1])


def test_verify_sl2_range_and_parallel(capsys):
    code, out, _ = run(capsys, "verify-sl2", "--n", "2-4", "--workers", "2")
    assert code == 0
    assert json.loads(out.splitlines()[-1])["summary"]["count"] == 2 + 5 + 14


def test_exit_codes(capsys):
    assert run(capsys, "verify-sl2", "--pi", "1,3,2")[0] == 65
    assert run(capsys, "verify-sl2", "--pi", "1,1,2")[0] == 64
    assert run(capsys, "schubert", "--perm", "3,2,1", "--chain-sum", "2,3,1")[0] == 66
    assert run(capsys, "sperner", "--pi", "3,2,1", "--max-interval", "3")[0] == 3
    assert run(capsys, "bogus")[0] == 64
    assert run(capsys, "verify-sl2")[0] == 64


def test_sperner_with_oracle(capsys):
    code, out, _ = run(capsys, "sperner", "--pi", "3,4,1,2", "--oracle")
    first = json.loads(out.splitlines()[0])
    assert code == 0
    assert first["verdict"] == "certified" and first["oracle"]["agree"]


def test_schubert_quantities(capsys):
    assert run(capsys, "schubert", "--perm", "1,3,2", "--spec")[1].strip() == "2"
    assert run(capsys, "schubert", "--perm", "1,3,2", "--macdonald")[1].strip() == "2"
    assert run(capsys, "schubert", "--perm", "1,3,2", "--poly")[1].strip() == "x1 + x2"
    code, out, _ = run(capsys, "schubert", "--perm", "1,3,2", "--all-three", "3,2,1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["agree"] and doc["chain_sum"] == 2


def test_diag_commands(capsys):
    pi, sigma = "5,6,7,3,2,4,1,8", "3,2,5,6,4,1,7,8"
    code, out, _ = run(capsys, "diag", "path", "--pi", pi, "--sigma", sigma, "--col", "7", "--check")
    assert code == 0
    assert "points (3,4) -> (2,5) -> (5,1) -> (6,2) -> (4,6) -> (1,7)" in out
    assert "pivot lines x=7 y=3" in out
    code, out, _ = run(capsys, "diag", "sign-grid", "--pi", pi, "--sigma", sigma, "--format", "json")
    cells = {(c["row"], c["col"]): c["sign"] for c in json.loads(out)["nonzero"]}
    assert cells[(2, 4)] == 1 and cells[(7, 0)] == 1 and len(cells) == 6
    code, out, _ = run(capsys, "diag", "diamond", "--pi", "3,2,1", "--sigma", "2,1,3",
                       "--tau", "1,3,2", "--format", "json", "--check")
    assert code == 0 and json.loads(out.splitlines()[0])["alpha"] == "2,3,1"


def test_hasse_output_to_file(capsys, tmp_path):
    target = tmp_path / "h.json"
    code, out, _ = run(capsys, "hasse", "--pi", "3,2,1", "--order", "strong",
                       "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert len(json.loads(target.read_text())["edges"]) == 8
    assert run(capsys, "hasse", "--pi", "2,3,1")[1].startswith("digraph")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bruhat_sl2", "schubert", "--perm", "3,2,1", "--spec"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
