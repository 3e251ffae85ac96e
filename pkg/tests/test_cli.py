import json
import subprocess
import sys

import pytest

from cases import BRANCHING_INPUT
from necktig.cli import main


def write_fa(path, strings):
    path.write_text("".join(f">s{i}\n{s}\n" for i, s in enumerate(strings)))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


@pytest.fixture
def branching_fa(tmp_path):
    return write_fa(tmp_path / "in.fa", BRANCHING_INPUT)


def test_build_separator_matches_counters(capsys, tmp_path, branching_fa):
    out = str(tmp_path / "out.ntig")
    code, rep = run(capsys, "build", "-k", "3", "-i", branching_fa, "--mode", "separator", "-o", out)
    assert code == 0
    assert rep["symbols_written"] == rep["cost_separator"]
    assert rep["n_k"] == 21 and "wall_seconds" in rep
    text = open(out).read()
    assert text.startswith("#necktig v1 k=3 mode=separator\n")
    assert len(text.splitlines()[1]) == rep["cost_separator"]


@pytest.mark.parametrize("source", ["matching", "greedy", "eulertigs"])
@pytest.mark.parametrize("mode", ["dollar", "separator"])
def test_build_then_decode_round_trip(capsys, tmp_path, branching_fa, source, mode):
    out = str(tmp_path / "out.ntig")
    assert run(capsys, "build", "-k", "3", "-i", branching_fa, "--pc-source", source, "--mode", mode, "-o", out)[0] == 0
    code, rep = run(capsys, "decode", "-i", out, "--check-against", branching_fa)
    assert code == 0 and rep["check"]["ok"] and rep["n_k"] == 21


def test_decode_check_failure(capsys, tmp_path, branching_fa):
    out = str(tmp_path / "out.ntig")
    run(capsys, "build", "-k", "3", "-i", branching_fa, "-o", out)
    other = write_fa(tmp_path / "other.fa", ["ACGTTTGCA"])
    code, rep = run(capsys, "decode", "-i", out, "--check-against", other)
    assert code == 1 and not rep["check"]["ok"]


def test_eulertigs_weight(capsys, tmp_path, branching_fa):
    out = tmp_path / "e.fa"
    code, rep = run(capsys, "eulertigs", "-k", "3", "-i", branching_fa, "-o", str(out))
    assert code == 0 and rep == {"n_k": 21, "b": 5, "strings": 5, "weight": 31}
    assert out.read_text().count(">") == 5


def test_baseline_and_stats(capsys, tmp_path, branching_fa):
    out = str(tmp_path / "b.ntig")
    code, rep = run(capsys, "baseline", "-k", "3", "-i", branching_fa, "-o", out, "--no-timing")
    assert code == 0 and "wall_seconds" not in rep
    code, st = run(capsys, "stats", "-i", out)
    assert st["symbols_with_markers"] == rep["cost_dollar"]
    assert st["letters"] + st["parentheses"] == st["symbols"]
    code, st = run(capsys, "stats", "-i", branching_fa, "-k", "3")
    assert st == {"records": 5, "bases": 40, "n_k": 21}


def test_gen_family_to_stdout(capsys):
    code, out = run(capsys, "gen-family", "--k", "4")
    assert code == 0
    assert out.count(">") == 17


def test_verify_random_and_file(capsys, monkeypatch, branching_fa):
    monkeypatch.setenv("NECKTIG_SEED", "11")
    code, rep = run(capsys, "verify", "--random", "15")
    assert code == 0 and rep["instances"] == 15 and rep["failures"] == 0
    code, rep = run(capsys, "verify", "-k", "3", "-i", branching_fa)
    assert code == 0


def test_exit_codes(capsys, tmp_path, branching_fa):
    assert main(["build", "-k", "3"]) == 2
    assert main(["build", "-k", "40", "-i", branching_fa]) == 2
    assert main(["verify", "-i", branching_fa]) == 2
    assert main(["build", "-k", "3", "-i", str(tmp_path / "missing.fa")]) == 3
    bad = tmp_path / "bad.ntig"
    bad.write_text("#necktig v1 k=3 mode=dollar\nACG(T\n$\n")
    assert main(["decode", "-i", str(bad)]) == 3
    capsys.readouterr()


def test_deterministic_outputs(capsys, tmp_path, branching_fa):
    paths = [str(tmp_path / f"o{i}.ntig") for i in range(2)]
    reports = []
    for p in paths:
        reports.append(run(capsys, "build", "-k", "3", "-i", branching_fa, "-o", p, "--no-timing")[1])
    assert reports[0] == reports[1]
    assert open(paths[0]).read() == open(paths[1]).read()


def test_module_entry_point(tmp_path, branching_fa):
    proc = subprocess.run(
        [sys.executable, "-m", "necktig", "eulertigs", "-k", "3", "-i", branching_fa],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["weight"] == 31
