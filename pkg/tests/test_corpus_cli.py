import json

import pytest

from padic_mahler.cli import main
from padic_mahler.corpus import (
    branched_cover_homology_order,
    load_corpus,
    verify_corpus,
)
from padic_mahler.errors import DomainError
from padic_mahler.parsing import parse_laurent

P = parse_laurent


class TestHomologyOrder:
    def test_figure_eight_double_cover(self):
        order, caveat = branched_cover_homology_order(P("t^2 - 3*t + 1"), 2)
        assert order == 5 and caveat is False

    def test_trivial_cover(self):
        order, caveat = branched_cover_homology_order(P("t^2 - 3*t + 1"), 1)
        assert order == 1 and caveat is False

    def test_link_caveat(self):
        order, caveat = branched_cover_homology_order(P("2*t - 2"), 3,
                                                      components=2)
        assert order == 12 and caveat is True

    def test_figure_eight_classical_sequence(self):
        # first homology orders of the cyclic branched covers of the
        # figure-eight knot, classical values
        orders = [branched_cover_homology_order(P("t^2 - 3*t + 1"), n)[0]
                  for n in range(1, 7)]
        assert orders == [1, 5, 16, 45, 121, 320]


@pytest.fixture(scope="module")
def records():
    return load_corpus()


@pytest.fixture(scope="module")
def report(records):
    return verify_corpus(records)


class TestCorpus:
    def test_record_inventory(self, records):
        names = {r.name for r in records}
        assert names == {"4_1", "4^2_1", "5_2", "6^2_1", "6^2_2", "6^2_3",
                         "7^2_1", "7^2_2", "7^2_3", "9^2_23", "8^3_7"}

    def test_every_delta_parses_and_substitutes(self, records):
        for record in records:
            for sub in record.substitutions:
                record.derived_reduced(sub.label)
                record.reduced_polynomial(sub.label)
                record.alexander_polynomial(sub.label)

    def test_overridden_records_are_annotated(self, records):
        for record in records:
            if record.reduced_overrides:
                assert record.annotations, record.name

    def test_all_paper_claims_pass(self, report):
        assert report.failed_paper_claims == []
        assert report.exit_status == 0

    def test_no_failures_at_all(self, report):
        assert report.failed == []

    def test_skips_are_documented(self, report):
        for r in report.results:
            if r.status == "skip":
                assert r.detail

    def test_report_is_deterministic(self, records):
        a = verify_corpus(records).to_json(include_timing=False)
        b = verify_corpus(records).to_json(include_timing=False)
        assert a == b

    def test_bad_schema_rejected(self, tmp_path):
        bad = tmp_path / "corpus.json"
        bad.write_text(json.dumps({"schema_version": 99, "records": []}))
        with pytest.raises(DomainError):
            load_corpus(bad)

    def test_parse_error_reports_record(self, tmp_path):
        bad = tmp_path / "corpus.json"
        bad.write_text(json.dumps({
            "schema_version": 1,
            "records": [{"name": "X", "components": 1, "delta": "t +* 1",
                         "substitutions": [], "claims": []}]}))
        with pytest.raises(DomainError) as err:
            load_corpus(bad)
        assert "X" in str(err.value)

    def test_failing_paper_claim_sets_exit_status(self, tmp_path):
        wrong = tmp_path / "corpus.json"
        wrong.write_text(json.dumps({
            "schema_version": 1,
            "records": [{
                "name": "bogus", "components": 1, "delta": "2*t - 2",
                "substitutions": [{"label": "(t)", "exponents": [1]}],
                "claims": [{"kind": "mu", "label": "(t)",
                            "provenance": "PAPER", "p": 2, "value": 7}]}]}))
        report = verify_corpus(load_corpus(wrong))
        assert report.exit_status == 1
        assert len(report.failed_paper_claims) == 1

    def test_failing_derived_claim_does_not_gate_exit(self, tmp_path):
        wrong = tmp_path / "corpus.json"
        wrong.write_text(json.dumps({
            "schema_version": 1,
            "records": [{
                "name": "bogus", "components": 1, "delta": "2*t - 2",
                "substitutions": [{"label": "(t)", "exponents": [1]}],
                "claims": [{"kind": "mu", "label": "(t)",
                            "provenance": "DERIVED", "p": 2, "value": 7}]}]}))
        report = verify_corpus(load_corpus(wrong))
        assert report.failed and report.exit_status == 0


class TestCli:
    def test_mahler_inf(self, capsys):
        assert main(["mahler", "--poly", "t^2-3*t+1", "--place", "inf"]) == 0
        assert "0.9624236501" in capsys.readouterr().out

    def test_mahler_finite_place(self, capsys):
        assert main(["mahler", "--poly", "2*t-2", "--place", "2"]) == 0
        assert "-1 * log 2" in capsys.readouterr().out

    def test_padic_mahler(self, capsys):
        assert main(["padic-mahler", "--poly", "4*t^4-8*t^2+4",
                     "--prime", "2"]) == 0
        assert "-2 * log 2" in capsys.readouterr().out

    def test_iwasawa(self, capsys):
        assert main(["iwasawa", "--poly", "2*t-2", "--prime", "2",
                     "--rmax", "6"]) == 0
        assert "lambda=1 mu=1 nu=-1 r0=1" in capsys.readouterr().out

    def test_entropy_json(self, capsys):
        assert main(["--format", "json", "entropy",
                     "--poly", "4*t^2-10*t+4"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["h_p"] == {"2": "1"}
        assert payload["content"] == 2

    def test_mp_agreement(self, capsys):
        assert main(["mp", "--poly", "2*t^2-3*t+2", "--prime", "2",
                     "--precision", "24"]) == 0
        out = capsys.readouterr().out
        assert "agreement" in out

    def test_hbar(self, capsys):
        assert main(["hbar", "--poly", "2*t^2-5*t+2", "--prime", "2",
                     "--solenoid"]) == 0
        assert "hbar_2" in capsys.readouterr().out

    def test_homology(self, capsys):
        assert main(["homology", "--poly", "t^2-3*t+1", "--n", "2"]) == 0
        assert "= 5" in capsys.readouterr().out

    def test_growth_with_delta(self, capsys):
        assert main(["growth", "--delta", "2-x-y+2*x*y", "--subs", "1,-1",
                     "--place", "inf", "--nmax", "40"]) == 0
        assert "closed form 1.3169578969" in capsys.readouterr().out

    def test_pure_growth(self, capsys):
        assert main(["growth", "--poly", "(t-1)^2", "--place", "3", "--pure",
                     "--components", "3", "--nmax", "50"]) == 0
        assert "growth limit" in capsys.readouterr().out

    def test_verify_corpus(self, capsys):
        assert main(["verify-corpus"]) == 0
        out = capsys.readouterr().out
        assert "failed 0" in out

    def test_parse_error_exit_code(self, capsys):
        assert main(["mahler", "--poly", "t +* 1", "--place", "inf"]) == 3

    def test_domain_error_exit_code(self, capsys):
        assert main(["iwasawa", "--poly", "t^2+1", "--prime", "2"]) == 4

    def test_missing_poly_exit_code(self, capsys):
        assert main(["mahler", "--place", "inf"]) == 4
