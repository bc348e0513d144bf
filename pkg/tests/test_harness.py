"""Command-line harness: configuration, report formats, and exit codes."""

import json
from fractions import Fraction

import pytest

from covforge import harness

JSON_KEY_ORDER = ["check_id", "paper_anchor", "status", "residual_count",
                  "details", "millis"]


def test_known_check_ids_cover_both_phases():
    ids = harness.check_ids()
    assert len(ids) == 15
    assert sum(i.startswith("symbolic/") for i in ids) == 8
    assert sum(i.startswith("property/") for i in ids) == 4
    assert sum(i.startswith("numeric/") for i in ids) == 3


def test_default_configuration_values():
    cfg = harness.build_config([])
    assert cfg.filter == "*"
    assert cfg.seed == 42
    assert cfg.format == "text"
    assert cfg.jobs == 1
    assert cfg.tol_track == 1e-10
    assert cfg.tol_dedup == 1e-6
    assert cfg.sample_r == (Fraction(10), Fraction(1, 2), Fraction(1, 3))


def test_sample_r_accepts_fraction_strings():
    cfg = harness.build_config(["--sample-r", "10", "1/2", "1/3"])
    assert cfg.sample_r == (Fraction(10), Fraction(1, 2), Fraction(1, 3))
    cfg = harness.build_config(["--sample-r", "7/3", "2", "5/11"])
    assert cfg.sample_r == (Fraction(7, 3), Fraction(2), Fraction(5, 11))


def test_environment_supplies_defaults_but_flags_win(monkeypatch):
    monkeypatch.setenv("COVFORGE_SEED", "17")
    monkeypatch.setenv("COVFORGE_FORMAT", "json")
    cfg = harness.build_config([])
    assert cfg.seed == 17
    assert cfg.format == "json"
    cfg = harness.build_config(["--seed", "5", "--format", "text"])
    assert cfg.seed == 5
    assert cfg.format == "text"


def test_unknown_format_is_rejected_by_the_parser():
    with pytest.raises(SystemExit):
        harness.build_config(["--format", "yaml"])


def test_negative_tolerance_exits_with_configuration_error(capsys):
    code = harness.main(["--tol-track=-1e-10",
                         "--filter", "property/field_axioms"])
    assert code == 2
    assert "verify:" in capsys.readouterr().err


def test_unknown_filter_lists_the_known_ids(capsys):
    code = harness.main(["--filter", "no/such_check"])
    assert code == 2
    err = capsys.readouterr().err
    assert "symbolic/expansion_1_2" in err


def test_single_check_run_exits_cleanly(capsys):
    code = harness.main(["--filter", "property/field_axioms"])
    out = capsys.readouterr().out
    assert code == 0
    assert "PASS" in out and "property/field_axioms" in out
    assert "1 checks: 1 pass, 0 fail" in out


def test_json_report_schema_and_key_order():
    cfg = harness.build_config(["--filter", "symbolic/*", "--format", "json"])
    report = harness.run(cfg)
    rows = json.loads(harness.render_json(report))
    assert [r["check_id"] for r in rows] == sorted(r["check_id"] for r in rows)
    assert len(rows) == 8
    for row in rows:
        assert list(row) == JSON_KEY_ORDER
        assert row["status"] == "pass"
        assert row["residual_count"] == 0
        assert isinstance(row["paper_anchor"], str) and row["paper_anchor"]
        assert isinstance(row["millis"], (int, float))


def test_reports_are_identical_across_runs_up_to_timing():
    cfg = harness.build_config(["--filter", "symbolic/*", "--format", "json"])

    def strip(report):
        rows = json.loads(harness.render_json(report))
        for r in rows:
            r.pop("millis")
        return rows

    assert strip(harness.run(cfg)) == strip(harness.run(cfg))


def test_filter_selects_only_the_matching_phase():
    cfg = harness.build_config(["--filter", "property/*"])
    report = harness.run(cfg)
    ids = [r.check_id for r in report.sorted_results()]
    assert ids == sorted(i for i in harness.check_ids()
                         if i.startswith("property/"))
    assert report.ok


def test_errata_ledger_entries_are_validated_by_known_checks():
    ledger = harness.errata_ledger()
    assert len(ledger) == 6
    ids = set(harness.check_ids())
    seen = set()
    for entry in ledger:
        assert set(entry) == {"id", "location", "printed", "corrected",
                              "reason", "validated_by"}
        assert entry["id"] not in seen
        seen.add(entry["id"])
        assert entry["validated_by"]
        assert set(entry["validated_by"]) <= ids
    locations = " ".join(e["location"] for e in ledger)
    assert "(1.2)" in locations and "(4.5)" in locations


def test_text_report_shows_tolerances_for_numeric_rows():
    # run the cheapest numeric check through the harness front end
    cfg = harness.build_config(["--filter", "numeric/seed_stability"])
    report = harness.run(cfg)
    text = harness.render_text(report)
    assert "PASS" in text and "numeric/seed_stability" in text
    assert "tolerances:" in text
    assert "erratum ledger: src/covforge/errata.json" in text
