import io
import json

import pytest

from kashaev import corpus
from kashaev.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_signature_at_zero():
    code, text = run("signature", "trefoil", "--at", "0")
    assert code == 0
    data = json.loads(text)
    assert data["kashaev_invariant"] == -4
    assert data["signature"] == -1 and data["writhe"] == 3


def test_alexander_figure_eight():
    assert run("alexander", "B 3: 1 -2 1 -2") == (0, "-t + 3 - t^-1\n")


def test_input_from_file(tmp_path):
    f = tmp_path / "tref.pd"
    f.write_text("# trefoil\nX 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n", encoding="utf-8")
    assert run("alexander", str(f)) == (0, "t - 1 + t^-1\n")


def test_info_and_matrices():
    code, text = run("info", "trefoil-braid")
    info = json.loads(text)
    assert code == 0 and info["crossings"] == 3 and info["sigma"] == -2
    assert info["seifert"]["genus"] == 1
    code, text = run("matrices", "trefoil", "--pair", "0,1")
    data = json.loads(text)
    assert code == 0 and data["factorization"] is True
    assert len(data["kashaev"]["entries"]) == 5


def test_bad_pair_is_input_error():
    code, _ = run("matrices", "trefoil", "--pair", "0,0")
    assert code == 2
    assert run("matrices", "trefoil", "--pair", "zero")[0] == 2


def test_scan_csv():
    code, text = run("signature", "trefoil-braid", "--scan", "5", "--csv")
    lines = text.splitlines()
    assert code == 0
    assert lines[0] == "u,x,kashaev_inv,oracle_2sigma,equal"
    assert lines[3] == "1,0,-4,-4,true"
    assert len(lines) == 6


def test_scan_json_is_byte_identical():
    a = run("signature", "5_2", "--scan", "12", "--json")
    b = run("signature", "5_2", "--scan", "12", "--json")
    assert a == b and a[0] == 0
    rows = json.loads(a[1])["scan"]
    assert all(r["equal"] for r in rows)


@pytest.mark.parametrize("argv", [
    ("alexander", "X 1 2 3"),
    ("alexander", "B 2: 3"),
    ("signature", "trefoil", "--at", "abc"),
    ("signature", "trefoil", "--at", "2"),
    ("signature", "trefoil", "--at", "0", "--csv"),
    ("verify",),
    ("bogus",),
])
def test_input_errors_exit_2(argv, capsys):
    assert run(*argv)[0] == 2


def test_verify_single_with_fuzz():
    code, text = run("verify", "trefoil", "--fuzz", "5", "--seed", "3")
    data = json.loads(text)
    assert code == 0 and data["ok"]
    assert data["entries"][0]["fuzz"]["variants"] == 5
    again = run("verify", "trefoil", "--fuzz", "5", "--seed", "3")
    assert again[1] == text


def test_verify_corpus():
    code, text = run("verify", "--corpus")
    data = json.loads(text)
    assert code == 0 and data["ok"]
    assert [e["name"] for e in data["entries"]] == corpus.names()


def test_verify_reports_failure(monkeypatch, capsys):
    import kashaev.cli as cli
    monkeypatch.setattr(cli, "conjecture_report", _broken_report)
    code, text = run("verify", "trefoil")
    assert code == 1
    assert "factorization" in json.loads(text)["entries"][0]["failed"]
    assert "factorization" in capsys.readouterr().err


def _broken_report(D, oracle, n_points=64):
    from kashaev.invariants import conjecture_report
    r = conjecture_report(D, oracle, n_points=8)
    r.factorization = False
    return r


def test_corpus_entries_parse():
    assert len(corpus.CORPUS) >= 10
    for e in corpus.CORPUS:
        D = e.diagram()
        assert D.n_components == 1
        assert e.provenance
    assert len(corpus.knots()) == len(corpus.CORPUS)
