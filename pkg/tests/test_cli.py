import io
import json
import subprocess
import sys

import pytest

from hyperdiag.cli import main


def run(argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv, out)
    return code, out.getvalue()


def test_stats_json():
    code, text = run(["stats", "--n", "2", "--format", "json", "--self-check"])
    rows = json.loads(text)
    assert code == 0 and len(rows) == 8
    row = next(r for r in rows if r["beta"] == [2, 1])
    assert row["g"] == [1, 3] and row["fmaj"] == 2


def test_stats_csv_header():
    code, text = run(["stats", "--n", "1", "--format", "csv"])
    assert code == 0
    assert text.splitlines()[0] == "beta,des,maj,neg,fmaj,fmaj_inv,g,ghat"


def test_compactify_worked(tmp_path):
    f = tmp_path / "d.txt"
    f.write_text("0 0 1 2 2 6 8 9 9\n0 0 5 6 6 4 0 5 9\n")
    code, text = run(["compactify", str(f), "--format", "json", "--self-check"])
    rec = json.loads(text)
    assert code == 0
    assert rec["beta"] == [-1, -2, 5, -7, -8, -4, -3, 6, 9]
    assert [c[0] for c in rec["compact"]] == [0, 0, 1, 2, 2, 4, 6, 7, 7]
    assert [c[1] for c in rec["compact"]] == [0, 0, 3, 4, 4, 2, 0, 3, 5]
    assert rec["lam"] == [4] and rec["mu"] == [6, 1] and rec["weight_check"]


def test_compactify_o_from_stdin(monkeypatch):
    code, text = run(["compactify", "--kind", "o", "--format", "json", "--self-check"], "3 / 2", monkeypatch)
    rec = json.loads(text)
    assert code == 0 and rec["compact"] == [[1, 0]] and rec["lam"] == [1] and rec["mu"] == [1]


def test_compactify_latex(monkeypatch):
    code, text = run(["compactify", "--format", "latex"], "0 2 / 2 0", monkeypatch)
    assert code == 0 and "\\begin{pmatrix} 0 & 2 \\\\ 2 & 0 \\end{pmatrix}" in text


def test_straighten(monkeypatch):
    code, text = run(["straighten", "--format", "json", "--self-check"], "1 4 / 3 4", monkeypatch)
    rec = json.loads(text)
    assert code == 0 and rec["certificate"] is True
    assert {tuple(t["beta"]): t["coeff"] for t in rec["terms"]} == {(1, -2): 1, (-2, 1): -1}


def test_verify_all_n2():
    code, text = run(["verify", "all", "--n", "2", "--format", "json"])
    reports = json.loads(text)
    assert code == 0 and reports and all(r["status"] == "PASS" for r in reports)
    assert {r["identity"] for r in reports} >= {"genfunction", "ogenfunction", "flip", "corollary", "regular", "psi"}


def test_verify_table3_text():
    code, text = run(["verify", "table3", "--n", "3"])
    assert code == 0 and text.count("PASS") == 10


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "table3", "--n", "2"],
        ["verify", "psi", "--n", "4"],
        ["verify", "flip", "--n", "0"],
        ["verify", "genfunction", "--n", "2", "--trunc", "3"],
        ["stats", "--n", "9"],
        ["nonsense"],
    ],
)
def test_usage_errors(argv):
    assert run(argv)[0] == 2


def test_bad_diagram(monkeypatch):
    assert run(["compactify"], "0 1 / 0 0", monkeypatch)[0] == 2
    assert run(["straighten"], "1 / 0", monkeypatch)[0] == 2


def test_enumerate_compact_counts():
    for what in ("compact-e", "compact-o", "bn"):
        code, text = run(["enumerate", what, "--n", "3", "--format", "json"])
        assert code == 0 and len(json.loads(text)) == 48


def test_enumerate_diagrams():
    code, text = run(["enumerate", "ediagrams", "--n", "2", "--max-entry", "2", "--format", "json"])
    assert code == 0 and len(json.loads(text)) == 15
    code, text = run(["enumerate", "odiagrams", "--n", "2", "--max-entry", "2", "--format", "csv"])
    assert code == 0 and len(text.splitlines()) == 7


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hyperdiag.cli", "verify", "corollary", "--n", "3", "--format", "json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)[0]["status"] == "PASS"
