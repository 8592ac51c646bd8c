"""
Tests for the command line: exit codes, JSON shape, CSV sweep and determinism.
"""
import csv
import io
import json
import logging

import pytest

import cli
from cli import resolve_log_level, run
from util.citations import load_manifest


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _json(capsys, *argv):
    code, out, _ = _run(capsys, *argv)
    return code, json.loads(out)


class TestReports:

    def test_baselocus_h_plus_l(self, capsys):
        code, report = _json(capsys, "baselocus", "-a", "1", "-b", "1", "--model", "x")
        assert code == 0
        assert list(report.keys()) == ["command", "inputs", "result", "citations"]
        assert report["command"] == "baselocus"
        assert report["result"]["verdict"] == "PlaneP2Reduced"
        assert report["result"]["sections"]["h0"] == 15
        assert report["inputs"] == {"a": 1, "b": 1, "model": "x", "basis": "hl"}

    def test_chi(self, capsys):
        code, report = _json(capsys, "chi", "-q", "6", "-n", "2")
        assert code == 0
        assert report["result"] == {"chi": 15}

    def test_moduli_three_two(self, capsys):
        code, report = _json(capsys, "moduli", "-d", "3", "-m", "2")
        assert code == 0
        result = report["result"]
        assert result["nonempty"] is True
        assert result["witness_hl"] == {"a": 1, "b": 1, "model": "x"}
        assert result["generic_bpf"] is True

    def test_square_in_both_bases(self, capsys):
        _, hdelta = _json(capsys, "square", "-a", "2", "-b", "-1")
        _, hl = _json(capsys, "square", "-a", "1", "-b", "1", "--basis", "hl")
        assert hdelta["result"]["q"] == hl["result"]["q"] == 6
        assert hl["inputs"]["basis"] == "hl"

    def test_pair_and_div(self, capsys):
        _, pair = _json(capsys, "pair", "--a1", "1", "--b1", "0", "--a2", "2", "--b2", "-3")
        assert pair["result"] == {"pairing": 4}
        _, div = _json(capsys, "div", "-a", "2", "-b", "-3")
        assert div["result"] == {"div": 2, "primitive": True}

    def test_cone(self, capsys):
        _, report = _json(capsys, "cone", "-a", "1", "-b", "2")
        assert report["result"]["on_flop_wall"] is True
        assert report["result"]["q"] == 10

    def test_flop_from_xprime(self, capsys):
        _, report = _json(capsys, "flop", "-a", "0", "-b", "1", "--from", "xprime")
        assert report["result"]["blowup_class"]["e_coeff"] == -1
        assert report["result"]["restriction_to_E"] == {"s": 0, "t": 1}
        assert report["result"]["line_degree"] == -1

    def test_mayer(self, capsys):
        code, report = _json(capsys, "mayer", "--gram", "0,1,-2", "--h", "2,1", "--bound", "5")
        assert code == 0
        decompositions = report["result"]["decompositions"]
        assert {"m": 2, "E": [1, 0], "C": [0, 1], "base_locus_class": [0, 1]} in decompositions
        assert report["result"]["effectivity_checked"] is False

    def test_mayer_nonnegative(self, capsys):
        _, report = _json(capsys, "mayer", "--gram", "0,1,-2", "--h", "2,1", "--nonnegative")
        assert len(report["result"]["decompositions"]) == 1

    def test_mayer_fixed_divisor(self, capsys):
        _, report = _json(capsys, "mayer", "--gram", "2,2,0", "--h", "1,1", "--fixed-divisor")
        assert report["result"]["decompositions"] == []
        assert report["citations"][0]["statement"] == "fixed_divisor_criterion"

    def test_verify_mu(self, capsys):
        code, report = _json(capsys, "verify-mu")
        assert code == 0
        assert report["result"]["rank"] == 15
        assert report["result"]["kernel_dimension"] == 3
        assert report["result"]["stated_vectors_annihilated"] == [True, True, True]
        assert len(report["result"]["matrix_digest"]) == 64


class TestDomainErrors:

    @pytest.mark.parametrize("argv, code_name", [
        (["div", "-a", "0", "-b", "0"], "ZeroClass"),
        (["chi", "-q", "3", "-n", "2"], "OddSquare"),
        (["moduli", "-d", "3", "-m", "3"], "UnsupportedDivisibility"),
        (["moduli", "-d", "0", "-m", "1"], "NonPositiveSquare"),
        (["mayer", "--gram", "0,1,-2", "--h", "1,1"], "NotBig"),
        (["mayer", "--gram", "2,0,0,2,0,2", "--h", "1,1,1"], "RankUnsupported"),
        (["pair", "--a1", "1", "--b1", "0", "--a2", "1", "--b2", "0", "--n2", "3"], "MismatchedAmbient"),
    ])
    def test_exit_two_with_error_object(self, capsys, argv, code_name):
        code, report = _json(capsys, *argv)
        assert code == 2
        assert report["error"]["code"] == code_name
        assert report["command"] == argv[0]

    @pytest.mark.parametrize("argv, details", [
        (["div", "-a", "0", "-b", "0"], {"operation": "divisibility"}),
        (["mayer", "--gram", "0,1,-2", "--h", "1,1"], {"value": "0"}),
        (["moduli", "-d", "3", "-m", "3"], {"value": "3"}),
        (["pair", "--a1", "1", "--b1", "0", "--a2", "1", "--b2", "0", "--n2", "3"], {"field": "n"}),
    ])
    def test_error_details(self, capsys, argv, details):
        _, report = _json(capsys, *argv)
        assert report["error"]["details"] == details


class TestUsageErrors:

    @pytest.mark.parametrize("argv", [
        [],
        ["frobnicate"],
        ["square", "-a", "x", "-b", "1"],
        ["baselocus", "-a", "1", "-b", "1", "--model", "y"],
        ["mayer", "--gram", "0,1", "--h", "2,1"],
        ["mayer", "--gram", "1,0,2", "--h", "1,1"],
        ["square", "-a", "1", "-b", "1", "--basis", "hl", "--d0", "2"],
        ["chi", "-q", "2", "-n", "0"],
        ["sweep", "--max", "-1"],
    ])
    def test_exit_one_on_standard_error(self, capsys, argv):
        code, out, err = _run(capsys, *argv)
        assert code == 1
        assert out == ""
        assert err


def test_sweep_csv(capsys):
    code, out, _ = _run(capsys, "sweep", "--max", "50", "--model", "x")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 51 * 51
    assert rows[0] == {"a": "0", "b": "0", "nef": "true", "big": "false", "verdict": "ZeroClass"}
    special = [r for r in rows if r["verdict"] not in ("Free", "NotNef", "ZeroClass")]
    assert special == [{"a": "1", "b": "1", "nef": "true", "big": "true", "verdict": "PlaneP2Reduced"}]


def test_sweep_xprime_has_no_base_points(capsys):
    _, out, _ = _run(capsys, "sweep", "--max", "20", "--model", "xprime")
    verdicts = {r["verdict"] for r in csv.DictReader(io.StringIO(out))}
    assert verdicts <= {"Free", "NotNef", "ZeroClass"}


@pytest.mark.parametrize("argv", [["verify-mu"], ["sweep", "--max", "50"]])
def test_output_is_byte_identical_across_runs(capsys, argv):
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv)
    assert first == second


def test_log_level_does_not_change_output(capsys, monkeypatch):
    _, quiet, _ = _run(capsys, "baselocus", "-a", "2", "-b", "3")
    monkeypatch.setattr(cli, "K3BL_LOG_LEVEL", "DEBUG")
    _, loud, _ = _run(capsys, "baselocus", "-a", "2", "-b", "3")
    assert quiet == loud


@pytest.mark.parametrize("argv", [
    ["baselocus", "-a", "1", "-b", "1"],
    ["baselocus", "-a", "1", "-b", "4", "--model", "xprime"],
    ["moduli", "-d", "3", "-m", "2"],
    ["mayer", "--gram", "2", "--h", "1"],
    ["verify-mu"],
    ["flop", "-a", "1", "-b", "0"],
])
def test_citation_quotes_are_verbatim_from_manifest(capsys, argv):
    _, report = _json(capsys, *argv)
    manifest = load_manifest()
    assert report["citations"]
    for citation in report["citations"]:
        assert manifest[citation["statement"]] == citation["quote"]


def test_streams_can_be_redirected():
    out, err = io.StringIO(), io.StringIO()
    assert run(["chi", "-q", "2", "-n", "2"], out=out, err=err) == 0
    assert json.loads(out.getvalue())["result"] == {"chi": 6}
    assert err.getvalue() == ""


@pytest.mark.parametrize("name, level", [
    ("debug", logging.DEBUG),
    ("Warning", logging.WARNING),
    (" error ", logging.ERROR),
    ("verbose", None),
    ("", None),
])
def test_resolve_log_level(name, level):
    assert resolve_log_level(name) == level


@pytest.mark.parametrize("attribute, value", [
    ("K3BL_LOG_LEVEL", "verbose"),
    ("K3BL_LOG_FORMAT", "%(unclosed"),
])
def test_bad_logging_environment_does_not_change_output(capsys, monkeypatch, attribute, value):
    _, expected, _ = _run(capsys, "chi", "-q", "6", "-n", "2")
    monkeypatch.setattr(cli, attribute, value)
    code, out, _ = _run(capsys, "chi", "-q", "6", "-n", "2")
    assert code == 0
    assert out == expected
    assert json.loads(out)["result"] == {"chi": 15}


def test_help_returns_zero(capsys):
    code, out, err = _run(capsys, "--help")
    assert code == 0
    assert "k3-baselocus" in out
    assert err == ""


def test_mayer_help_explains_candidate_list(capsys):
    code, out, _ = _run(capsys, "mayer", "--help")
    assert code == 0
    assert "--nonnegative" in out
    assert "Effectivity" in out


def test_help_goes_to_the_given_stream():
    out = io.StringIO()
    assert run(["sweep", "-h"], out=out, err=io.StringIO()) == 0
    assert "--max" in out.getvalue()
