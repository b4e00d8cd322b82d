import io
import json
import subprocess
import sys

import pytest

from sierpinski_codes.cli import main, parse_int_set


def run(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_gen_edgelist():
    code, out = run("gen", "--n", "2", "--k", "3", "--format", "edgelist")
    assert code == 0 and len(out.splitlines()) == 12


def test_gen_dot_triangle():
    code, out = run("gen", "--n", "1", "--k", "3", "--format", "dot")
    assert code == 0 and out.count("--") == 3 and out.startswith("graph")


def test_gen_bad_k(capsys):
    code, _ = run("gen", "--n", "2", "--k", "2")
    assert code == 2
    assert "k must be" in capsys.readouterr().err


def test_verify_valid(tmp_path):
    path = tmp_path / "inner.txt"
    path.write_text("0,1\n0,2\n1,0\n1,2\n2,0\n2,1\n")
    assert run("verify", "--n", "2", "--k", "3", "--kind", "id", "--code-file", str(path)) == (0, "VALID\n")


def test_verify_empty_td(monkeypatch):
    code, out = run("verify", "--n", "2", "--k", "3", "--kind", "td", "--code-file", "-",
                    stdin="# nothing\n", monkeypatch=monkeypatch)
    assert code == 1
    assert json.loads(out)["witness"]["reason"] == "not-totally-covered"


def test_verify_ld(monkeypatch):
    code, out = run("verify", "--n", "2", "--k", "3", "--kind", "ld", "--code-file", "-",
                    stdin="0,1\n1,2\n2,0\n", monkeypatch=monkeypatch)
    assert (code, out) == (0, "VALID\n")


@pytest.mark.parametrize("text", ["0,5\n", "zz\n"])
def test_verify_parse_errors(monkeypatch, text):
    code, _ = run("verify", "--n", "2", "--k", "3", "--kind", "ld", "--code-file", "-",
                  stdin=text, monkeypatch=monkeypatch)
    assert code == 2


def test_verify_missing_file(tmp_path):
    assert run("verify", "--n", "2", "--k", "3", "--kind", "id",
               "--code-file", str(tmp_path / "nope"))[0] == 2


@pytest.mark.parametrize("n,k,kind,size", [(2, 4, "td", 4), (3, 3, "id", 18), (2, 3, "ld", 3)])
def test_construct(n, k, kind, size):
    code, out = run("construct", "--n", str(n), "--k", str(k), "--kind", kind)
    lines = out.splitlines()
    assert code == 0 and len(lines) == size + 1
    assert lines[-1] == f"# size={size} predicted={size} verified=true"


def test_construct_unsupported():
    assert run("construct", "--n", "1", "--k", "3", "--kind", "id")[0] == 2
    assert run("construct", "--n", "2", "--k", "3", "--kind", "dom")[0] == 2


@pytest.mark.parametrize("n,k,kind", [(2, 3, "id"), (2, 4, "ld"), (3, 3, "td"), (2, 5, "id")])
def test_construct_pipes_into_verify(n, k, kind, monkeypatch):
    _, listing = run("construct", "--n", str(n), "--k", str(k), "--kind", kind)
    assert run("verify", "--n", str(n), "--k", str(k), "--kind", kind, "--code-file", "-",
               stdin=listing, monkeypatch=monkeypatch) == (0, "VALID\n")


def test_solve():
    code, out = run("solve", "--n", "2", "--k", "3", "--kind", "id")
    assert code == 0 and json.loads(out)["min_size"] == 6
    code, out = run("solve", "--n", "2", "--k", "5", "--kind", "td", "--no-structural")
    assert code == 0 and json.loads(out)["min_size"] == 6
    code, out = run("solve", "--n", "1", "--k", "3", "--kind", "id")
    assert code == 4 and json.loads(out)["status"] == "Infeasible"


def test_solve_budget():
    code, out = run("solve", "--n", "2", "--k", "5", "--kind", "ld", "--no-structural",
                    "--node-budget", "3")
    assert code == 3 and json.loads(out)["status"] == "BudgetExhausted"


def test_solve_deterministic_output():
    args = ("solve", "--n", "2", "--k", "4", "--kind", "ld", "--no-structural")
    assert run(*args) == run(*args)


def test_table_identifying():
    code, out = run("table", "--n", "2,3", "--k", "3,4", "--kinds", "id", "--format", "csv")
    rows = out.splitlines()[1:]
    assert code == 0 and [r.split(",")[3] for r in rows] == ["6", "12", "18", "48"]


def test_table_other_kinds():
    _, out = run("table", "--n", "2", "--k", "3", "--kinds", "dom", "--format", "csv", "--solve")
    assert out.splitlines()[1].split(",")[3:6] == ["3", "", "3"]
    _, out = run("table", "--n", "2", "--k", "4-5", "--kinds", "td", "--format", "markdown")
    body = out.splitlines()[2:]
    assert [line.split("|")[4].strip() for line in body] == ["4", "6"]


def test_table_bad_ranges():
    assert run("table", "--n", "3-2", "--k", "3")[0] == 2
    assert run("table", "--n", "1", "--k", "3")[0] == 2


@pytest.mark.parametrize("n,k,bound", [(2, 3, 6), (2, 4, 12), (4, 3, 54)])
def test_conjecture(n, k, bound):
    code, out = run("conjecture", "--n", str(n), "--k", str(k))
    assert code == 0
    assert f"bound {bound}, id-min {bound}" in out and out.rstrip().endswith("ATTAINED")
    code, out = run("conjecture", "--n", str(n), "--k", str(k), "--format", "json")
    assert json.loads(out)["attained"] is True


def test_parse_int_set():
    assert parse_int_set("2,4-5") == [2, 4, 5]
    assert parse_int_set("3..4") == [3, 4]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sierpinski_codes", "gen", "--n", "1", "--k", "3"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "0 1\n0 2\n1 2\n"
