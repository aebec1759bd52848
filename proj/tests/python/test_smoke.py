import json
import os
import subprocess

import pytest

import meshpat


def test_distribution():
    assert meshpat.distribution(5, "1,0,1,0") == [42, 46, 26, 6]
    assert meshpat.distribution(4, "empty,0,0,0") == [0, 6, 11, 6, 1]
    assert meshpat.distribution(6, kmax=2, via="closed") == [394, 225, 85, 15, 1]
    assert meshpat.distribution(6, "1,0,1,1", cls="one-before-n", via="recursion") == [81, 162, 99, 18]


def test_routes_agree():
    for n in range(1, 8):
        assert meshpat.distribution(n, "1,1,1,1") == meshpat.distribution(n, "1,1,1,1", via="multivar")
        assert meshpat.distribution(n, "0,2,0,0") == meshpat.distribution(n, "0,2,0,0", via="recursion")


def test_mass_is_factorial():
    fact = 1
    for n in range(1, 8):
        fact *= n
        assert sum(meshpat.distribution(n, "2,0,eq:1,empty")) == fact


def test_q_distribution():
    rows = meshpat.q_distribution(3, "1,0,0,0")
    assert rows == [[1], [0, 2, 1], [0, 0, 1, 1]]
    assert meshpat.q_distribution(5, "1,1,0,0") == meshpat.q_distribution(5, "1,1,0,0", via="closed")


def test_record_schema():
    rec = meshpat.record(3, "1,0,0,0")
    assert rec == {"n": 3, "spec": "1,0,0,0", "class": "all", "coeffs": [1, 3, 2], "provenance": "oracle"}


def test_mmp_and_multivar():
    assert meshpat.mmp([2, 1, 3], "1,0,0,0") == 2
    assert meshpat.mmp([1, 2, 3], kmax=2) == 1
    g = meshpat.multivar("g2020", 3)
    assert g["text"] == "4 + 2*z3"
    assert sum(c for _, c in g["terms"]) == 6


def test_series():
    assert "R_kmax" in meshpat.series_ids()
    assert meshpat.series("R_kmax", 4, 2)[4] == [17, 6, 1]
    assert meshpat.series_offset("B_1011") == 2


def test_verify():
    rep = meshpat.verify("closed-forms", 6)
    assert rep["passed"] is True
    assert rep["counts"]["fail"] == 0


def test_errors():
    with pytest.raises(ValueError):
        meshpat.distribution(3, "1,0,bogus,0")
    with pytest.raises(ValueError):
        meshpat.distribution(3)
    with pytest.raises(meshpat.ResourceLimitError):
        meshpat.distribution(11, "1,0,0,0")
    with pytest.raises(ValueError):
        meshpat.distribution(3, "1,0,1,0", via="recursion")


def test_main_in_process():
    rc, out, _ = meshpat.main(["seq", "--spec", "1,0,1,1", "--extract", "eval0", "--max-n", "8"])
    assert rc == 0
    assert out == "1,2,6,20,70,252,924,3432\n"
    rc, _, err = meshpat.main(["dist", "--n", "11", "--spec", "1,0,0,0"])
    assert rc == 3 and "cap" in err


@pytest.mark.skipif("MESHPAT_TOOL" not in os.environ, reason="tool path not provided")
def test_tool_matches_module():
    out = subprocess.run(
        [os.environ["MESHPAT_TOOL"], "dist", "--n", "6", "--spec", "1,0,2,0", "--format", "json"],
        check=True, capture_output=True, text=True,
    ).stdout
    assert [int(c) for c in json.loads(out)["coeffs"]] == meshpat.distribution(6, "1,0,2,0")
