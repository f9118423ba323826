import json

import pytest
from click.testing import CliRunner

from nilorbits.cli import cli


@pytest.fixture
def run(tmp_path):
    runner = CliRunner()

    def _run(*args, cache=True):
        base = ["--cache-dir", str(tmp_path / "cache")] if cache else ["--no-cache"]
        return runner.invoke(cli, base + list(args), catch_exceptions=False)

    return _run


def _json(res):
    assert res.exit_code == 0, res.output
    return json.loads(res.output)


def test_orbits_list_g2(run):
    d = _json(run("--format", "json", "orbits", "list", "--type", "G2"))
    rows = d["orbits"]
    assert len(rows) == 5
    assert sum(r["extreme"] for r in rows if r["dim"] > 0) == 3
    assert [r["dim"] for r in rows] == [0, 6, 8, 10, 12]
    assert {r["text"] for r in rows if r["lonely"]} == {"Ã1 [10]", "G2 [22]"}


def test_orbits_list_c3_extreme_and_table(run):
    d = _json(run("--format", "json", "orbits", "list", "--type", "C", "--rank", "3"))
    ext = {r["text"] for r in d["orbits"] if r["extreme"] and r["dim"] > 0}
    assert ext == {"(2,1,1,1,1)", "(4,1,1)", "(6)"}
    res = run("orbits", "list", "--type", "C3")
    assert res.exit_code == 0 and "O_pr = (6)" in res.output


def test_a2_lonely_only_principal(run):
    d = _json(run("--format", "json", "orbits", "list", "--type", "A2"))
    assert [r["text"] for r in d["orbits"] if r["lonely"]] == ["(3)"]


def test_ideals_count_and_classes(run):
    res = run("ideals", "--type", "F4")
    assert res.exit_code == 0 and "105" in res.output
    d = _json(run("--format", "json", "ideals", "--type", "A2", "--classify"))
    assert d["idealCount"] == 5
    assert [c["idealCount"] for c in d["classes"]] == [1, 3, 1]


def test_d5_intermediate_is_singleton(run):
    d = _json(run("--format", "json", "ideals", "--type", "D5", "--classify"))
    c = next(c for c in d["classes"] if c["text"] == "(5,2,2,1)")
    assert c["dims"] == [13]


def test_orbit_info(run):
    d = _json(run("--format", "json", "orbit", "info", "--type", "G2", "--wdd", "10"))
    assert d["orbit"]["dim"] == 8 and d["orbit"]["lonely"]
    assert d["centralizer"]["dimGe"] == 6
    res = run("orbit", "info", "--type", "D5", "--partition", "3,2,2,1,1,1")
    assert res.exit_code == 0
    assert "a1+a2+a3 a2+2a3+a4+a5" in res.output


def test_usage_errors_exit_2(run):
    assert run("ideals", "--type", "E7").exit_code == 2
    assert run("orbits", "list", "--type", "Q3").exit_code == 2
    assert run("orbit", "info", "--type", "C3", "--partition", "3,2,1").exit_code == 2
    assert run("orbit", "info", "--type", "B3", "--wdd", "9,9,9").exit_code == 2


def test_verify_exit_codes(run):
    assert run("verify", "--suite", "anomalies").exit_code == 0
    # the minimal-element counterexamples in C4 and D5 are reported as failures
    res = run("verify", "--suite", "conjectures")
    assert res.exit_code == 1
    assert "FAIL" in res.output


def test_json_roundtrip_and_cache_is_stable(run, tmp_path):
    first = run("--format", "json", "orbits", "list", "--type", "B3").output
    assert list((tmp_path / "cache").glob("B3-v*.json"))
    second = run("--format", "json", "orbits", "list", "--type", "B3").output
    uncached = run("--format", "json", "orbits", "list", "--type", "B3", cache=False).output
    assert first == second == uncached
    assert json.loads(first)["type"] == "B"


def test_csv(run):
    res = run("--format", "csv", "orbits", "list", "--type", "A2")
    lines = res.output.strip().splitlines()
    assert lines[0].startswith("orbit,dim,wDd")
    assert len(lines) == 4
