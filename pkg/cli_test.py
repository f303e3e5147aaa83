#!/usr/bin/env python3
"""
Command-line contract: golden files, exit codes, batch mode and output redirection.
"""

import io
import json
import os
import tempfile
import time

import pytest

import testkit
from src.main import Query, UsageError, run

TESTDATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "testdata")


def _golden(name):
    with open(os.path.join(TESTDATA, name), "r", encoding="utf-8") as handle:
        return handle.read()


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv) + ["--quiet"], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_demazure_json_golden():
    code, out, _ = _run("demazure", "--type", "A", "--rank", "1", "--lambda", "5", "--alpha", "1", "--r", "2", "--format", "json")
    assert code == 0
    assert out == _golden("demazure_a1_c2.json")


def test_bott_json_golden():
    code, out, _ = _run("bott", "--type", "A", "--rank", "2", "--lambda", "-2,1", "--format", "json")
    assert code == 0
    assert out == _golden("bott_a2.json")


def test_demazure_latex_golden():
    code, out, _ = _run("demazure", "--type", "A", "--rank", "1", "--lambda", "5", "--alpha", "1", "--r", "2", "--format", "latex")
    assert code == 0
    assert out == _golden("demazure_a1_c2.tex")


def test_json_round_trips_byte_identical():
    for argv in [
        ["demazure", "--type", "G", "--rank", "2", "--lambda", "0,-4", "--alpha", "2", "--r", "3"],
        ["bott", "--type", "E", "--rank", "8", "--lambda", "1,1,1,1,1,1,1,1"],
        ["rank1", "--type", "B", "--rank", "2", "--lambda", "3,-1", "--alpha", "1"],
        ["roots", "--type", "F", "--rank", "4"],
    ]:
        code, out, _ = _run(*argv, "--format", "json")
        assert code == 0, argv
        assert json.dumps(json.loads(out)) + "\n" == out
        assert json.loads(out)["schema"] == 1


def test_huge_dimensions_become_strings():
    code, out, _ = _run("bott", "--type", "E", "--rank", "8", "--lambda", "1,1,1,1,1,1,1,1", "--format", "json")
    payload = json.loads(out)
    assert payload["dimension"] == str(2**120)


def test_singular_bott():
    code, out, _ = _run("bott", "--type", "A", "--rank", "1", "--lambda", "-1", "--format", "json")
    assert code == 0
    assert json.loads(out)["status"] == "singular"


def test_r_zero_case_code():
    code, out, _ = _run("demazure", "--type", "A", "--rank", "2", "--lambda", "1,-3", "--alpha", "2", "--r", "0", "--format", "json")
    assert code == 0
    assert json.loads(out)["case"] == "R0"


def test_text_output_mentions_case_and_verdict():
    code, out, _ = _run("demazure", "--type", "A", "--rank", "1", "--lambda", "0", "--alpha", "1", "--r", "3", "--no-color")
    assert code == 0
    assert "C4_interior (m=0, s=-3)" in out
    assert "H^1 = V(4) + V(2)" in out
    assert "euler check: pass" in out


def test_euler_check_json():
    code, out, _ = _run("euler-check", "--type", "B", "--rank", "2", "--lambda", "1,-3", "--alpha", "2", "--r", "3", "--format", "json")
    payload = json.loads(out)
    assert code == 0
    assert payload["verdict"] == "pass" and payload["check"] == "euler-identity"


def test_usage_errors_exit_2():
    assert _run("demazure", "--type", "A", "--rank", "1", "--lambda", "5")[0] == 2
    assert _run("frobnicate")[0] == 2
    assert _run("bott", "--type", "A", "--rank", "1", "--lambda", "x")[0] == 2
    code, _, err = _run("bott", "--type", "A", "--rank", "2", "--lambda", "1")
    assert code == 2
    assert "usage:" in err and "2 coordinates" in err
    assert _run("bott", "--type", "D", "--rank", "3", "--lambda", "0,0,0")[0] == 2
    assert _run("demazure", "--type", "A", "--rank", "2", "--lambda", "0,0", "--alpha", "3", "--r", "1")[0] == 2


def test_latex_only_for_cohomology_tables():
    for argv in [
        ["roots", "--type", "A", "--rank", "2"],
        ["euler-check", "--type", "A", "--rank", "1", "--lambda", "0", "--alpha", "1", "--r", "3"],
        ["sweep", "--type", "A", "--rank", "1"],
        ["selftest"],
    ]:
        assert _run(*argv, "--format", "latex")[0] == 2, argv
    assert _run("rank1", "--type", "A", "--rank", "2", "--lambda", "1,0", "--alpha", "1", "--format", "latex")[0] == 0


def test_query_lambda_must_be_a_list():
    base = {"command": "bott", "type": "A", "rank": 2}
    assert Query.from_json(dict(base, **{"lambda": [1, 2]})).lam == [1, 2]
    for bad in ["12", 12, {"a": 1}]:
        with pytest.raises(UsageError):
            Query.from_json(dict(base, **{"lambda": bad}))


def test_help_exits_0():
    out, err = io.StringIO(), io.StringIO()
    assert run(["--help"], out=out, err=err) == 0


def test_out_file():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "result.json")
        code, out, _ = _run("bott", "--type", "A", "--rank", "2", "--lambda", "-2,1", "--format", "json", "--out", path)
        assert code == 0 and out == ""
        with open(path, "r", encoding="utf-8") as handle:
            assert handle.read() == _golden("bott_a2.json")


def test_batch_mode():
    code, out, _ = _run("batch", "--in", os.path.join(TESTDATA, "queries.jsonl"), "--threads", "3")
    lines = out.splitlines()
    assert code == 1
    assert len(lines) == 6
    assert lines[0] + "\n" == _golden("demazure_a1_c2.json")
    assert lines[1] + "\n" == _golden("bott_a2.json")
    assert json.loads(lines[2])["cohomology"] == []
    assert json.loads(lines[3])["line"] == 5
    assert json.loads(lines[4])["line"] == 6
    assert json.loads(lines[5])["verdict"] == "pass"


def test_selftest_passes_quickly():
    started = time.time()
    code, out, _ = _run("selftest", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "pass"
    assert len(payload["sweeps"]) == 7
    assert time.time() - started < 120


def main():
    testkit.main(globals())


if __name__ == "__main__":
    main()
