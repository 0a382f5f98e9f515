import json
import subprocess
import sys

import pytest

from freecoh.automata import FiniteAutomaton
from freecoh.cli import main


@pytest.fixture
def pres(tmp_path):
    def write(pairs, alphabet=("a", "b")):
        path = tmp_path / f"p{len(list(tmp_path.iterdir()))}.json"
        path.write_text(json.dumps({"alphabet": list(alphabet), "pairs": [list(p) for p in pairs]}))
        return str(path)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_member(capsys, pres):
    p = pres([("ab", "ba")])
    assert run(capsys, "member", "--presentation", p, "abb", "bab")[:2] == (0, "true\n")
    assert run(capsys, "member", "--presentation", p, "w", "w")[0] == 1
    assert run(capsys, "member", "--presentation", pres([], "w"), "w", "w")[:2] == (0, "true\n")
    code, _, err = run(capsys, "member", "--presentation", p, "abc", "ab")
    assert code == 1 and "not in alphabet" in err


def test_usage_errors_exit_1(capsys, pres, tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["member", "--presentation", pres([]), "a"])
    assert info.value.code == 1
    assert run(capsys, "member", "a", "a")[0] == 1
    assert run(capsys, "member", "--presentation", str(tmp_path / "missing.json"), "a", "a")[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert run(capsys, "member", "--presentation", str(bad), "a", "a")[0] == 1
    multi = tmp_path / "multi.json"
    multi.write_text(json.dumps({"alphabet": ["ab", "c"], "pairs": []}))
    code, _, err = run(capsys, "member", "--presentation", str(multi), "c", "c")
    assert code == 1 and "multi-character" in err


@pytest.mark.parametrize(
    "pairs, word, expected",
    [([], "ab", ["ab"]), ([("a", "b")], "ab", ["ab", "bb"]), ([("a", "bb")], "aa", ["aa", "bba"])],
)
def test_class_json(capsys, pres, pairs, word, expected):
    code, out, _ = run(capsys, "class", "--presentation", pres(pairs), "--format", "json", word)
    assert code == 0
    A = FiniteAutomaton.from_json(json.loads(out))
    assert A.words(max_len=10) == expected


def test_class_dot_to_file(capsys, pres, tmp_path):
    target = tmp_path / "class.dot"
    code, out, _ = run(capsys, "class", "--presentation", pres([]), "--format", "dot", "--out", str(target), "ab")
    assert code == 0 and out == ""
    assert target.read_text().startswith("digraph")


def test_trace_reduce_factorize(capsys, pres, tmp_path):
    p = pres([("ab", "ba"), ("bab", "bb")])
    code, out, _ = run(capsys, "trace", "--presentation", p, "--a", "a", "--b", "b", "bb", "b")
    assert code == 0
    seq = json.loads(out)
    assert seq["steps"] == [["ab", "ba", "b"], ["bab", "bb", ""]]
    path = tmp_path / "seq.json"
    path.write_text(out)
    code, out, _ = run(capsys, "reduce", "--presentation", p, str(path))
    assert code == 0
    assert json.loads(out) == {
        "branch": 2, "i": 1, "x": "b",
        "truncated": {"a": "a", "u": "b", "b": "ab", "v": "", "steps": []},
    }
    code, out, _ = run(capsys, "factorize", "--presentation", p, str(path))
    assert json.loads(out) == {"empty_u": False, "parts": ["b", "b"], "indices": [2, 1]}


def test_trace_not_found(capsys, pres):
    code, out, _ = run(capsys, "trace", "--presentation", pres([("a", "b")]), "ab", "ba")
    assert code == 0 and json.loads(out)["found"] is False


def test_reduce_rejects_reducible(capsys, pres, tmp_path):
    path = tmp_path / "seq.json"
    path.write_text(json.dumps({"a": "", "u": "abb", "b": "", "v": "bab", "steps": [["ab", "ba", "b"]]}))
    code, _, err = run(capsys, "reduce", "--presentation", pres([("ab", "ba")]), str(path))
    assert code == 1 and "irreducible" in err


def test_annihilator(capsys, pres):
    p = pres([("a", "b")])
    code, out, _ = run(capsys, "annihilator", "--presentation", p, "--mode", "reduced", "--cap", "6", "")
    assert code == 0
    data = json.loads(out)
    assert data["pairs"] == [["a", "b"]] and data["limit"] == 6
    assert run(capsys, "annihilator", "--presentation", p, "--mode", "paper", "")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["annihilator", "--presentation", p, "--mode", "capped"])
    assert info.value.code == 1


def test_intersect(capsys, pres):
    code, out, _ = run(capsys, "intersect", "--presentation", pres([("ab", "ba")]), "a", "b")
    assert code == 0 and json.loads(out)["reps"] == ["ab"]


def test_report_formats(capsys, pres):
    p = pres([("ab", "ba")])
    code, out, _ = run(capsys, "report", "--presentation", p, "--cap", "5", "a", "b")
    assert code == 0
    assert json.loads(out)["certification"]["passed"]
    code, out, _ = run(capsys, "report", "--presentation", p, "--cap", "5", "--format", "text", "a", "b")
    assert code == 0 and "intersection" in out


def test_verify(capsys, pres):
    code, out, _ = run(capsys, "verify", "--seed", "1", "--cap", "5")
    assert code == 0 and json.loads(out)["failures"] == []
    code, out, _ = run(capsys, "verify", "--presentation", pres([]), "--cap", "4")
    assert code == 0 and json.loads(out)["passed"]
    code, out, _ = run(capsys, "verify", "--cap", "0")
    data = json.loads(out)
    assert code == 0 and data["instances"] == 0 and data["passed"]


def test_verify_reproducible(capsys):
    first = run(capsys, "verify", "--seed", "7", "--cap", "4")[1]
    assert run(capsys, "verify", "--seed", "7", "--cap", "4")[1] == first


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "freecoh", "member", "--presentation", "bundled:commute", "abb", "bab"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout == "true\n"
