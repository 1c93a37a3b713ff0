"""Command-line interface: reports, formats, determinism, exit codes."""

import json
import subprocess
import sys

from brauerkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


def test_dims(capsys):
    code, rep = run_json(capsys, "dims", "--f", "3")
    assert code == 0
    assert rep["schema"] == "brauer-report/1"
    assert rep["results"]["diagrams"] == 15
    assert rep["status"] == "pass"
    code1, rep1 = run_json(capsys, "dims", "--f", "1")
    assert rep1["results"]["diagrams"] == 1
    code4, rep4 = run_json(capsys, "dims", "--f", "4")
    assert rep4["results"]["junctions"][1] == {"k": 1, "enumerated": 6, "formula": 6}


def test_dims_guard(capsys):
    assert main(["dims", "--f", "9"]) == 2


def test_radical_command(capsys):
    code, rep = run_json(capsys, "radical", "--f", "2", "--x", "0")
    assert code == 0
    assert rep["results"]["rad_dim"] == 1
    code3, rep3 = run_json(capsys, "radical", "--f", "3", "--x", "0")
    assert rep3["results"]["rad_dim"] == 0
    code4, rep4 = run_json(capsys, "radical", "--f", "4", "--x", "0")
    assert rep4["results"]["rad_dim"] >= 9
    assert any(
        c["name"].startswith("deep span contained") and c["status"] == "pass"
        for c in rep4["checks"]
    )


def test_radical_basis_dump(capsys):
    code, rep = run_json(capsys, "radical", "--f", "2", "--x", "0", "--dump-basis")
    assert code == 0
    assert rep["results"]["basis"] == [[["f=2;12/12", "1"]]]


def test_blocks_command(capsys):
    code, rep = run_json(capsys, "blocks", "--f", "2", "--x", "1")
    assert code == 0
    assert rep["results"]["rad_dim"] == 0
    rows = {(b["k"], tuple(b["mu"])): b for b in rep["results"]["blocks"]}
    assert rows[(1, ())]["rank"] == 1
    code0, rep0 = run_json(capsys, "blocks", "--f", "4", "--x", "0")
    assert rows != rep0["results"]["blocks"]
    assert rep0["results"]["rad_dim"] == 36


def test_kernel_command(capsys):
    code, rep = run_json(capsys, "kernel", "--series", "orthogonal", "--n", "1", "--f", "2")
    assert code == 0 and rep["results"]["kernel_dim"] == 2
    code2, rep2 = run_json(capsys, "kernel", "--series", "symplectic", "--n", "1", "--f", "2")
    assert rep2["results"]["kernel_dim"] == 1
    code3, rep3 = run_json(capsys, "kernel", "--series", "orthogonal", "--n", "2", "--f", "2")
    assert rep3["results"]["kernel_dim"] == 0
    # guard: 3**9 > 10**4
    assert main(["kernel", "--series", "orthogonal", "--n", "3", "--f", "9"]) == 2


def test_verify_suites(capsys):
    for args in (
        ["verify", "--suite", "consistency", "--f", "3", "--x", "0"],
        ["verify", "--suite", "thm5_3", "--f", "3", "--x", "1"],
        ["verify", "--suite", "thm5_5", "--f", "4", "--n", "1"],
        ["verify", "--suite", "brown", "--f", "3", "--x", "0"],
        ["verify", "--suite", "inherit", "--f", "4", "--x", "0"],
        ["verify", "--suite", "thm4_8", "--f", "3", "--n", "1", "--series", "orthogonal"],
    ):
        code, rep = run_json(capsys, *args)
        assert code == 0, args
        assert rep["status"] == "pass"


def test_verify_thm6_3_reports_count_discrepancy(capsys):
    code, rep = run_json(capsys, "verify", "--suite", "thm6_3", "--f", "4")
    assert code == 0 and rep["status"] == "pass"
    info = next(c for c in rep["checks"] if "closed forms" in c["name"])
    assert info["status"] == "info"
    assert info["enumerated"] == 9
    assert info["doubled_junction_count"] == 6
    assert info["doubled_claim_matches"] is False
    holds = [c for c in rep["checks"] if c["status"] == "info" and "holds" in c]
    assert holds and all(c["holds"] for c in holds)


def test_render_diagram(capsys):
    code, out = run_cli(capsys, "render", "--diagram", "f=2;12/12")
    assert code == 0
    assert out.splitlines()[0].split() == ["1", "2"]
    code2, out2 = run_cli(capsys, "render", "--chord", "[[1,2],[3,4]]")
    assert code2 == 0 and "*" in out2


def test_render_parse_error_exit_code(capsys):
    assert main(["render", "--diagram", "f=2;123/12"]) == 2


def test_json_determinism(capsys):
    _, out1 = run_cli(capsys, "blocks", "--f", "3", "--x", "2")
    _, out2 = run_cli(capsys, "blocks", "--f", "3", "--x", "2")
    assert out1 == out2


def test_text_and_csv_formats(capsys):
    code, out = run_cli(capsys, "--format", "text", "dims", "--f", "2")
    assert code == 0 and "[PASS]" in out and "status: pass" in out
    code2, out2 = run_cli(capsys, "--format", "csv", "dims", "--f", "2")
    assert code2 == 0
    assert out2.splitlines()[0] == "name,status,detail"
    assert all(",pass," in line for line in out2.splitlines()[1:])


def test_env_guard_override(monkeypatch, capsys):
    monkeypatch.setenv("BRAUER_MAX_F", "2")
    assert main(["radical", "--f", "3", "--x", "0"]) == 2
    code, _ = run_json(capsys, "--force", "radical", "--f", "3", "--x", "0")
    assert code == 0


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "brauerkit.cli", "dims", "--f", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    rep = json.loads(proc.stdout)
    assert rep["results"]["diagrams"] == 3 and rep["status"] == "pass"
    bad = subprocess.run(
        [sys.executable, "-m", "brauerkit.cli", "render", "--diagram", "nope"],
        capture_output=True,
        text=True,
    )
    assert bad.returncode == 2 and "error" in bad.stderr
