import json
import subprocess
import sys

import pytest

from antivdw.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_aw_hypercube(capsys):
    code, out, _ = run(capsys, "aw", "--family", "hypercube:4", "-k", "3")
    assert code == 0 and "= 3" in out


def test_aw_star_json(capsys):
    code, out, _ = run(capsys, "aw", "--family", "star:6", "-k", "4", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["aw"] == 5 and "ms" not in rec


def test_aw_file_json(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text("# P4\n4 3\n0 1\n1 2\n2 3\n")
    code, out, _ = run(capsys, "aw", "--file", str(f), "--json")
    assert code == 0 and json.loads(out)["aw"] == 4


def test_json_identical_across_threads(capsys):
    outs = set()
    for t in ("1", "2"):
        run(capsys, "aw", "--family", "cycle:23", "--json", "--threads", t)
    for t in ("1", "2"):
        _, out, _ = run(capsys, "aw", "--family", "cycle:23", "--json", "--threads", t)
        outs.add(out)
    assert len(outs) == 1


def test_parse_errors_exit_2(tmp_path, capsys):
    assert run(capsys, "aw", "--family", "bogus:1")[0] == 2
    assert run(capsys, "aw")[0] == 2
    assert run(capsys, "aw", "--family", "path:3", "--file", "x")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 5\n0 1\n")
    assert run(capsys, "aw", "--file", str(bad))[0] == 2


def test_budget_exit_3(capsys):
    code, _, err = run(capsys, "aw", "--family", "cycle:47", "--budget", "100")
    assert code == 3 and "budget" in err


def test_aps_dump(capsys):
    code, out, _ = run(capsys, "aps", "--family", "path:4")
    assert out.splitlines() == ["d=1: 0 1 2", "d=1: 1 2 3"]


def test_bounds_and_extremal(capsys):
    code, out, _ = run(capsys, "bounds", "--family", "product:(path:3)x(path:3)", "--json")
    rec = json.loads(out)
    assert min(u["value"] for u in rec["upper"]) == 4
    code, out, _ = run(capsys, "extremal", "--family", "hypercube:3", "--json")
    rec = json.loads(out)
    assert (rec["r"], rec["orbits"]) == (3, 1)


def test_check(capsys):
    code, out, _ = run(capsys, "check", "--family", "complete_binary_tree:2",
                       "--coloring", "1 2 1 1 1 3 3", "--json", "--bridge")
    rec = json.loads(out)
    assert rec["rainbow"] is None and rec["bridge"]["status"] == "not_found"
    code, out, _ = run(capsys, "check", "--family", "path:3", "--coloring", "1,2,3")
    assert out.startswith("rainbow")


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "hypercube", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["suite"] == "hypercube"
    assert set(rep["claims"][0]) == {"id", "cite", "pass", "detail"}


def test_verify_failure_exit_1(monkeypatch, capsys):
    from antivdw import cli, verify

    def failing(**_):
        rep = verify.Report("broken")
        rep.claim("x", "y", False)
        return rep

    monkeypatch.setitem(cli.SUITES, "paths", failing)
    assert run(capsys, "verify", "paths")[0] == 1


def test_scan_reports(capsys):
    code, out, _ = run(capsys, "scan", "tree_log3", "--count", "3", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["empirical_C"]["global"]["C"] > 0


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "antivdw", "aw", "--family", "path:9"],
                         capture_output=True, text=True, check=True).stdout
    assert "= 4" in out
