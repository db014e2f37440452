import json
import subprocess
import sys

import pytest

from htg import cli
from htg.cli import EXIT_INCONCLUSIVE, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, UsageError, expand_sweep, parse_sweep
from htg.core import HtgParams


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _rows(out):
    return [line.split("\t") for line in out.splitlines()[1:]]


# ---------------------------------------------------------------- gen


def test_gen_edges(capsys):
    code, out, _ = run(capsys, "gen", "-m", "1", "-n", "6", "-l", "3")
    assert code == EXIT_OK and len(out.splitlines()) == 9


def test_gen_dot_and_json(capsys):
    code, out, _ = run(capsys, "gen", "-m", "4", "-n", "10", "-l", "2", "--format", "dot")
    assert code == EXIT_OK and out.count(" -- ") == 60
    code, out, _ = run(capsys, "gen", "-m", "2", "-n", "4", "-l", "2", "--format", "json")
    assert json.loads(out)["size"] == 12


def test_gen_is_deterministic(capsys):
    _, a, _ = run(capsys, "gen", "-m", "3", "-n", "10", "-l", "3", "--format", "dot")
    _, b, _ = run(capsys, "gen", "-m", "3", "-n", "10", "-l", "3", "--format", "dot")
    assert a == b


@pytest.mark.parametrize("argv", [["gen", "-m", "1", "-n", "8", "-l", "2"], ["gen", "-m", "2", "-n", "5", "-l", "0"], ["gen", "-m", "2"]])
def test_bad_parameters_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == EXIT_USAGE and out == "" and err.startswith("htg: error:")


def test_out_file(capsys, tmp_path):
    path = tmp_path / "k33.txt"
    code, out, _ = run(capsys, "gen", "-m", "1", "-n", "6", "-l", "3", "--out", str(path))
    assert code == EXIT_OK and out == ""
    assert len(path.read_text().splitlines()) == 9


# ---------------------------------------------------------------- hamilton


def test_hamilton_text(capsys):
    code, out, _ = run(capsys, "hamilton", "-m", "4", "-n", "10", "-l", "2")
    lines = out.splitlines()
    assert code == EXIT_OK and lines[0].endswith("40 vertices, valid") and len(lines) == 41


def test_hamilton_json(capsys):
    code, out, _ = run(capsys, "hamilton", "-m", "3", "-n", "8", "-l", "1", "--format", "json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["valid"] and len(doc["cycle"]) == 24


# ---------------------------------------------------------------- props and audits


def test_props_heawood(capsys):
    code, out, _ = run(capsys, "props", "-m", "1", "-n", "14", "-l", "5", "--check", "girth,aut")
    rows = _rows(out)
    assert code == EXIT_OK
    assert [r[3:7] for r in rows] == [["girth", "6", "6", "Match"], ["aut", "336", "336", "Match"]]


def test_props_unknown_check(capsys):
    code, _, err = run(capsys, "props", "-m", "1", "-n", "14", "-l", "5", "--check", "colour")
    assert code == EXIT_USAGE and "colour" in err


def test_audit_girth_sweep(capsys):
    code, out, _ = run(capsys, "audit", "--sweep", "m=1..4,n=4..12", "--check", "girth")
    rows = _rows(out)
    assert code == EXIT_OK and rows and all(r[6] == "Match" for r in rows)


def test_mismatch_exits_1(capsys):
    # the table's value for HTG(m, m + 2, 0) is one short of BFS
    code, out, _ = run(capsys, "audit", "--sweep", "m=2,n=4,l=0", "--check", "diameter")
    assert code == EXIT_MISMATCH and _rows(out)[0][6] == "Mismatch"


def test_budget_exhaustion_exits_3(capsys):
    code, out, _ = run(capsys, "laceable", "-m", "1", "-n", "10", "-l", "5", "--budget", "10")
    assert code == EXIT_INCONCLUSIVE and _rows(out)[0][6] == "Inconclusive"


def test_budget_is_echoed(capsys):
    _, out, _ = run(capsys, "laceable", "-m", "1", "-n", "6", "-l", "3", "--format", "json")
    (doc,) = json.loads(out)
    assert doc["verdict"] == "Match" and doc["budget_consumed"] > 0


def test_sweep_requires_a_range(capsys):
    code, _, err = run(capsys, "sweep", "--check", "girth")
    assert code == EXIT_USAGE and "--sweep" in err


def test_sweep_is_exclusive_with_params(capsys):
    code, _, _ = run(capsys, "audit", "-m", "1", "--sweep", "m=1,n=6")
    assert code == EXIT_USAGE


def test_sweep_logs_skipped_triples(capsys):
    code, out, err = run(capsys, "sweep", "--sweep", "m=1,n=4..8,l=0..3", "--check", "girth")
    assert code == EXIT_OK
    assert "skipping m=1 n=4 l=0" in err and "skipping m=1 n=5" in err
    assert [r[:3] for r in _rows(out)] == [["1", "6", "3"], ["1", "8", "3"]]


def test_jobs_give_the_same_output(capsys):
    argv = ["sweep", "--sweep", "m=1..3,n=4..14", "--check", "girth,diameter"]
    _, serial, _ = run(capsys, *argv)
    _, parallel, _ = run(capsys, *argv, "--jobs", "2")
    assert serial == parallel


def test_bad_budget_and_jobs(capsys):
    assert run(capsys, "props", "-m", "1", "-n", "6", "-l", "3", "--budget", "0")[0] == EXIT_USAGE
    assert run(capsys, "sweep", "--sweep", "m=1,n=6", "--jobs", "0")[0] == EXIT_USAGE


# ---------------------------------------------------------------- sweep grammar


def test_parse_sweep():
    s = parse_sweep("m=1..4, n=4..12 ,l=*")
    assert s.m == range(1, 5) and s.n == range(4, 13) and s.l is None
    assert parse_sweep("m=2,n=8,l=0..4").l == range(0, 5)


@pytest.mark.parametrize("text", ["m=1..4", "m=1,m=2,n=4", "m=*,n=4", "m=4..1,n=4", "m=1,n=4,k=2", "m=a,n=4", ""])
def test_parse_sweep_errors(text):
    with pytest.raises(UsageError):
        parse_sweep(text)


def test_expand_sweep_star_uses_normal_form():
    got = list(expand_sweep(parse_sweep("m=1,n=14,l=*")))
    assert got == [HtgParams(1, 14, l) for l in (3, 5, 7)]


# ---------------------------------------------------------------- entry point


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "htg.cli", "props", "-m", "1", "-n", "14", "-l", "5", "--check", "girth"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and "\tMatch\t" in proc.stdout
