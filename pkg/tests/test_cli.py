"""Command-line behaviour: verbs, filters, formats, exit codes."""

import json

import pytest

from qbax.cli import main


def test_no_command_prints_help_and_exits_2(capsys):
    assert main([]) == 2
    assert "verify" in capsys.readouterr().out


def test_verify_filtered_subset_passes(capsys):
    code = main(["verify", "--filter", "classical-liouville-zero-point"])
    out = capsys.readouterr().out
    assert code == 0
    assert "[PASS] classical-liouville-zero-point" in out
    assert "1 passed" in out


def test_verify_unmatched_filter_warns_but_succeeds(capsys):
    code = main(["verify", "--filter", "bogus-*"])
    out = capsys.readouterr().out
    assert code == 0
    assert "matched no check ids" in out


def test_verify_json_format(capsys):
    code = main(["verify", "--filter", "qdilog-self-dual,qdilog-fixed-point",
                 "--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["counts"]["pass"] == 2
    assert [c["id"] for c in payload["checks"]] == [
        "qdilog-self-dual", "qdilog-fixed-point"]
    assert all("seconds" not in c for c in payload["checks"])


def test_verify_timing_flag_adds_seconds(capsys):
    code = main(["verify", "--filter", "qdilog-fixed-point",
                 "--format", "json", "--timing"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["checks"][0]["seconds"] >= 0.0


def test_tolerance_override_forces_failure(capsys):
    code = main(["verify", "--filter", "qdilog-unitarity", "--tol", "1e-30"])
    out = capsys.readouterr().out
    assert code == 1
    assert "[FAIL]" in out


def test_qdilog_verb(capsys):
    code = main(["qdilog"])
    out = capsys.readouterr().out
    assert code == 0
    assert "10 passed" in out


def test_classical_verb(capsys):
    code = main(["classical"])
    out = capsys.readouterr().out
    assert code == 0
    assert "10 passed" in out


def test_rep_subset_via_filter(capsys):
    # the rep verb runs the slow transfer check; exercise one cheap id instead
    code = main(["verify", "--filter", "rep-relations"])
    assert code == 0
    assert "[PASS] rep-relations" in capsys.readouterr().out


def test_continuum_table_text(capsys):
    code = main(["classical", "continuum", "--model", "liouville",
                 "--n0", "8", "--levels", "3"])
    out = capsys.readouterr().out
    assert code == 0
    assert "model liouville" in out
    assert "slope" in out and "monotone True" in out
    data_rows = [ln for ln in out.splitlines() if "e-" in ln or "e+" in ln]
    assert len(data_rows) == 3


def test_continuum_table_json_with_sine_field(capsys):
    code = main(["classical", "continuum", "--model", "freefield_volterra",
                 "--field", "sine", "--n0", "8", "--levels", "3",
                 "--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    assert code == 0
    assert payload["model"] == "freefield_volterra"
    assert payload["field"] == "sine"
    assert len(payload["rows"]) == 3
    assert payload["rows"][0]["order"] is None
    assert payload["order"] > 1.8
    assert payload["monotone"] is True


def test_continuum_explicit_kappa_list(capsys):
    code = main(["classical", "continuum", "--model", "liouville",
                 "--kappa-list", "0.125,0.0625"])
    out = capsys.readouterr().out
    assert code == 0
    assert "1.250000e-01" in out


def test_continuum_bad_kappa_list(capsys):
    code = main(["classical", "continuum", "--model", "liouville",
                 "--kappa-list", "0.1,zebra"])
    err = capsys.readouterr().err
    assert code == 2
    assert "bad --kappa-list" in err


def test_continuum_kappa_too_large_for_the_box(capsys):
    code = main(["classical", "continuum", "--model", "liouville",
                 "--kappa-list", "0.9"])
    err = capsys.readouterr().err
    assert code == 2
    assert "two sites" in err


def test_continuum_unknown_model_rejected_by_argparse(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classical", "continuum", "--model", "toda"])
    assert exc.value.code == 2


def test_report_lists_every_check(capsys):
    code = main(["report"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("110 registered checks")
    assert "rll-quantum-matrix" in out


def test_report_json(capsys):
    code = main(["report", "--format", "json"])
    entries = json.loads(capsys.readouterr().out)
    assert code == 0
    assert len(entries) == 110
    assert all(e["id"] and e["claim"] for e in entries)
