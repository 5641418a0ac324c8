"""Tests for the command-line interface."""

import json

import pytest

from sympgen import claims
from sympgen.cli import main


def run_cli(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr().out
    return rc, out


def test_fields_lists_bundled_moduli(capsys):
    rc, out = run_cli(capsys, "fields")
    assert rc == 0
    entries = json.loads(out)
    assert {"q": 8, "tag": "G7", "modulus": [1, 1, 0, 1]} in entries
    assert {"q": 9, "tag": "main12", "modulus": [1, 0, 1]} in entries


def test_build_with_integer_a(capsys):
    rc, out = run_cli(capsys, "build", "--n", "4", "--q", "3", "--a", "1")
    assert rc == 0
    d = json.loads(out)
    assert d["n"] == 4 and d["q"] == 3 and d["valid"] is True
    assert len(d["x"]) == 8 and len(d["x"][0]) == 8


def test_build_with_minpoly_a_and_tau(capsys):
    rc, out = run_cli(capsys, "build", "--n", "7", "--q", "4",
                      "--a", "minpoly:1,1,1", "--dump-tau")
    assert rc == 0
    d = json.loads(out)
    assert "tau" in d and len(d["tau"]) == 14


def test_build_rejects_bad_parameters(capsys):
    rc, _ = run_cli(capsys, "build", "--n", "4", "--q", "2", "--a", "1")
    assert rc == 2


def test_verify_filter_and_exit_code(capsys):
    rc, out = run_cli(capsys, "verify", "prop-q2-*")
    assert rc == 0
    payload = json.loads(out)
    assert sorted(e["id"] for e in payload) == [
        "prop-q2-n11", "prop-q2-n6", "prop-q2-n7", "prop-q2-n8",
        "prop-q2-n9", "prop-q2-sl9"]
    assert all(e["status"] == "Pass" for e in payload)


def test_verify_output_byte_stable(capsys):
    rc1, out1 = run_cli(capsys, "verify", "quadform-n4")
    rc2, out2 = run_cli(capsys, "verify", "quadform-n4")
    assert (rc1, out1) == (rc2, out2)
    assert json.loads(out1)[0]["wall_time_ms"] == 0


def test_verify_timings_flag_reports_real_times(capsys):
    rc, out = run_cli(capsys, "verify", "quadform-n4", "--timings")
    assert rc == 0
    assert json.loads(out)[0]["wall_time_ms"] >= 0


def test_verify_nonzero_exit_on_failure(capsys):
    cid = "test-cli-forced-failure"

    @claims.claim(cid, "q=2-L8")
    def _forced():
        return {"expected": 0, "computed": 1}

    try:
        rc, out = run_cli(capsys, "verify", cid)
        assert rc == 1
        assert json.loads(out)[0]["status"] == "Fail"
    finally:
        del claims._REGISTRY[cid]


def test_verify_respects_thread_env(capsys, monkeypatch):
    monkeypatch.setenv("SYMPGEN_THREADS", "2")
    rc, out = run_cli(capsys, "verify", "subfield")
    assert rc == 0
    assert json.loads(out)[0]["id"] == "subfield"


def test_search_named_fixture(capsys):
    rc, out = run_cli(capsys, "search", "--lemma", "M=H", "--q", "7")
    assert rc == 0
    d = json.loads(out)
    assert "1" in d["admissible"]
    assert d["count"] == len(d["admissible"])


def test_search_empty_case(capsys):
    rc, out = run_cli(capsys, "search", "--lemma", "G9", "--q", "7")
    assert rc == 0
    assert json.loads(out)["admissible"] == []


def test_search_unknown_lemma_is_an_error(capsys):
    rc, _ = run_cli(capsys, "search", "--lemma", "bogus", "--q", "7")
    assert rc == 2


def test_certify_default_words(capsys):
    rc, out = run_cli(capsys, "certify", "--n", "6", "--q", "2", "--a", "1")
    assert rc == 0
    assert json.loads(out)["certificate"] == "Certified"


def test_certify_unknown_pair_is_an_error(capsys):
    rc, _ = run_cli(capsys, "certify", "--n", "4", "--q", "3", "--a", "1")
    assert rc == 2
