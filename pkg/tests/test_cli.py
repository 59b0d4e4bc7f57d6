import json
import shutil
import subprocess

import pytest

from eicycle import io
from eicycle.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_then_verify(tmp_path, capsys):
    path = tmp_path / "h24.txt"
    assert run(capsys, "construct", "--n", "24", "--out", str(path))[0] == 0
    assert path.read_text().startswith("24 12\n")
    code, out, _ = run(capsys, "verify", "--in", str(path))
    assert code == 0 and "is_cycle_realization = true" in out


def test_construct_json_odd(tmp_path, capsys):
    path = tmp_path / "h.json"
    assert run(capsys, "construct", "--n", "27", "--format", "json", "--out", str(path))[0] == 0
    obj = json.loads(path.read_text())
    assert obj["cycle"][:5] == [1, 2, 3, 27, 4] and obj["recipe"] == "lemma3"
    assert run(capsys, "verify", "--in", str(path))[0] == 0
    assert run(capsys, "verify", "--in", str(path), "--cycle", "canonical")[0] == 1


def test_verify_failure_exit(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    assert run(capsys, "construct", "--n", "24", "--variant", "lemma2", "--unchecked", "--out", str(path))[0] == 0
    assert "unverified" in path.read_text()
    code, out, _ = run(capsys, "verify", "--in", str(path))
    assert code == 1 and "{2,13}" in out
    assert run(capsys, "certify", "--in", str(path))[0] == 1


def test_certify(tmp_path, capsys):
    path = tmp_path / "h.txt"
    run(capsys, "construct", "--n", "24", "--out", str(path))
    code, out, _ = run(capsys, "certify", "--in", str(path))
    assert code == 0 and out.splitlines()[22] == "e6 ∩ e9 = {24,1}"


def test_ei_and_kprofile(tmp_path, capsys):
    path = tmp_path / "h.txt"
    run(capsys, "construct", "--n", "26", "--out", str(path))
    code, out, _ = run(capsys, "ei", "--in", str(path))
    assert code == 0
    ei = io.parse(out).hypergraph
    assert len(ei) == 26 and all(len(e) == 2 for e in ei.edges)
    code, out, _ = run(capsys, "kprofile", "--in", str(path))
    assert code == 0
    assert "e1 = {1,2,3,8,9,10}  sections 3+3  k_e = 4" in out
    assert out.splitlines()[-1] == "sum k_e = 52"


def test_remarks(capsys):
    code, out, _ = run(capsys, "remarks")
    assert code == 0
    assert "e2 ∩ e7 = {2,13}" in out
    assert "e1 ∩ e2 = {1,2,3}" in out and "e1 ∩ e3 = {1,2,3}" in out


def test_search_min(tmp_path, capsys):
    code, out, _ = run(capsys, "search-min", "--n", "3", "--out", str(tmp_path / "w"))
    assert code == 0 and "minimum = 4" in out
    assert (tmp_path / "w" / "witness_001.txt").exists()
    code, out, _ = run(capsys, "search-min", "--n", "7", "--budget", "10")
    assert code == 1 and "minimum = none" in out and "exhausted = false" in out


def test_relabel(tmp_path, capsys):
    src, dst = tmp_path / "h.txt", tmp_path / "r.txt"
    run(capsys, "construct", "--n", "25", "--out", str(src))
    assert run(capsys, "relabel-canonical", "--in", str(src), "--out", str(dst))[0] == 0
    assert "cycle:" not in dst.read_text()
    assert run(capsys, "verify", "--in", str(dst))[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "--n", "2"],
        ["construct", "--n", "23", "--variant", "lemma1"],
        ["construct", "--n", "24", "--unchecked"],
        ["verify", "--in", "/nonexistent/file"],
        ["search-min", "--n", "30"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["construct"])
    assert exc.value.code == 2


def test_parse_error_exit_2(tmp_path, capsys):
    path = tmp_path / "dup.txt"
    path.write_text("3 2\n1 2 3\n1 2 3\n")
    code, _, err = run(capsys, "verify", "--in", str(path))
    assert code == 2 and "line 3" in err


@pytest.mark.skipif(shutil.which("eicycle") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["eicycle", "search-min", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "minimum = 4" in proc.stdout
