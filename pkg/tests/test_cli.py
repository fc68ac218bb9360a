"""Command-line interface: dispatch, formats, exit codes."""

import csv
import io
import json

import pytest

from heunic.cli import ExitReport, emit_table, run


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    report = run(argv, out=out, err=err)
    return report, out.getvalue(), err.getvalue()


class TestEval:
    def test_established_route_value(self):
        report, out, _ = invoke(["eval", "--target", "F", "--n", "2",
                                 "--x", "0.5", "--method", "established"])
        assert report.code == 0
        assert out.strip() == "0.375"

    def test_heun_target(self):
        report, out, _ = invoke(["eval", "--target", "heun", "--a", "0.5",
                                 "--q", "-1", "--alpha", "-2", "--beta", "1",
                                 "--gamma", "1", "--delta", "1", "--x", "0.25"])
        assert report.code == 0
        assert float(out) == pytest.approx(0.625, abs=1e-14)

    def test_usage_error_for_missing_parameter(self):
        report, _, err = invoke(["eval", "--target", "F", "--x", "0.5"])
        assert report.code == 2
        assert "requires" in err

    def test_domain_error_maps_to_usage_exit(self):
        report, _, err = invoke(["eval", "--target", "F", "--n", "2",
                                 "--x", "7", "--method", "definitional"])
        assert report.code == 2
        assert err

    def test_nonconvergence_maps_to_numerical_exit(self):
        report, out, _ = invoke(["eval", "--target", "heun", "--a", "0.5",
                                 "--q", "0.3", "--alpha", "1.2", "--beta", "0.7",
                                 "--gamma", "1.3", "--delta", "0.8",
                                 "--x", "0.4", "--max-terms", "4"])
        assert report.code == 3
        assert out  # the best available value is still printed

    def test_unknown_flag_is_usage_error(self):
        report, _, _ = invoke(["eval", "--bogus", "1"])
        assert report.code == 2

    def test_method_invalid_for_target_is_usage_error(self):
        report, _, _ = invoke(["eval", "--target", "G", "--n", "2",
                               "--x", "0.5", "--method", "expanded"])
        assert report.code == 2

    def test_unit_argument_target_needs_no_x(self):
        report, out, _ = invoke(["eval", "--target", "3f2", "--a1", "0",
                                 "--a2", "1", "--a3", "1", "--b1", "1.5",
                                 "--b2", "2"])
        assert report.code == 0
        assert float(out) == 1.0


class TestEntropy:
    def test_renyi_from_index(self):
        report, out, _ = invoke(["entropy", "--target", "F", "--n", "2",
                                 "--x", "0.5", "--kind", "renyi"])
        assert report.code == 0
        assert float(out) == pytest.approx(0.9808292530117262, rel=1e-15)

    def test_tsallis_from_index(self):
        report, out, _ = invoke(["entropy", "--target", "K", "--n", "1",
                                 "--x", "0.0", "--kind", "tsallis"])
        assert report.code == 0
        assert float(out) == 0.0


class TestTable:
    def test_grid_row_count_csv(self):
        report, out, _ = invoke(["table", "--target", "K", "--n", "1",
                                 "--grid", "0:1:0.1", "--output", "csv"])
        assert report.code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "x,value,error_estimate,method"
        assert len(lines) == 12  # header + 11 points

    def test_json_output_parses(self):
        report, out, _ = invoke(["table", "--target", "F", "--n", "2",
                                 "--grid", "0:1:0.5", "--output", "json"])
        assert report.code == 0
        rows = json.loads(out)
        assert [r["x"] for r in rows] == [0.0, 0.5, 1.0]
        assert rows[1]["value"] == pytest.approx(0.375)

    def test_file_sink(self, tmp_path):
        path = tmp_path / "rows.csv"
        report, out, _ = invoke(["table", "--target", "G", "--n", "1",
                                 "--grid", "0:2:1", "--output", "csv",
                                 "--path", str(path)])
        assert report.code == 0
        assert out == ""
        assert len(path.read_text().strip().splitlines()) == 4

    def test_point_list_grid(self):
        report, out, _ = invoke(["table", "--target", "F", "--n", "1",
                                 "--grid", "0.1,0.25,0.9", "--output", "json"])
        assert report.code == 0
        assert [r["x"] for r in json.loads(out)] == [0.1, 0.25, 0.9]

    def test_bad_grid_is_usage_error(self):
        report, _, _ = invoke(["table", "--target", "K", "--n", "1",
                               "--grid", "0:1:-0.1"])
        assert report.code == 2
        report, _, _ = invoke(["table", "--target", "K", "--n", "1",
                               "--grid", "a,b"])
        assert report.code == 2


class TestEmitTable:
    def test_empty_rows_still_emit_header(self):
        sink = io.StringIO()
        assert emit_table([], "csv", sink) == 0
        assert sink.getvalue() == "x,value,error_estimate,method\n"

    def test_csv_round_trip_is_bit_exact(self):
        rows = [{"x": 0.1, "value": 0.8269385516343293,
                 "error_estimate": 1.2345678901234567e-16, "method": "definitional"},
                {"x": 2 / 3, "value": -1.0000000000000002e-10,
                 "error_estimate": 0.0, "method": "series"}]
        sink = io.StringIO()
        assert emit_table(rows, "csv", sink) == 2
        parsed = list(csv.DictReader(io.StringIO(sink.getvalue())))
        for original, echoed in zip(rows, parsed):
            for key in ("x", "value", "error_estimate"):
                assert float(echoed[key]) == original[key]
            assert echoed["method"] == original["method"]

    def test_json_round_trip_is_bit_exact(self):
        rows = [{"x": 0.1, "value": 1 / 3, "error_estimate": 5e-324,
                 "method": "m"}]
        sink = io.StringIO()
        assert emit_table(rows, "json", sink) == 1
        assert json.loads(sink.getvalue()) == rows


class TestCrosscheck:
    def test_reports_max_discrepancy(self):
        report, out, _ = invoke(["crosscheck", "--target", "F", "--n", "3",
                                 "--grid", "0:1:0.1"])
        assert report.code == 0
        assert "max discrepancy" in out

    def test_tolerance_gate(self):
        report, _, _ = invoke(["crosscheck", "--target", "G", "--n", "2",
                               "--grid", "0:1:0.5", "--tol", "1e-9"])
        assert report.code == 0
        # the series route for K needs |x| < 1, so stay inside that disk
        report, _, _ = invoke(["crosscheck", "--target", "K", "--n", "2",
                               "--grid", "0:0.9:0.45", "--tol", "1e-18"])
        assert report.code == 1


class TestVerify:
    def test_clean_build_passes(self):
        report, out, _ = invoke(["verify", "--max-n", "10", "--trials", "10"])
        assert report.code == 0
        assert "verification: PASS" in out

    def test_identity_mutation_flips_exit_code(self):
        report, out, _ = invoke(["verify", "--max-n", "10", "--trials", "5",
                                 "--mutate-identity", "0"])
        assert report.code == 1
        assert "identity A: FAIL" in out

    @pytest.mark.parametrize("site", [2, 7, 9])
    def test_other_mutation_sites_also_flip(self, site):
        report, _, _ = invoke(["verify", "--max-n", "10", "--trials", "2",
                               "--mutate-identity", str(site)])
        assert report.code == 1

    def test_seed_changes_residuals_not_outcome(self):
        r0, out0, _ = invoke(["verify", "--max-n", "5", "--trials", "5",
                              "--seed", "0"])
        r1, out1, _ = invoke(["verify", "--max-n", "5", "--trials", "5",
                              "--seed", "1"])
        assert r0.code == r1.code == 0
        assert out0 != out1


class TestRun:
    def test_returns_exit_report(self):
        report, _, _ = invoke(["verify", "--max-n", "3", "--trials", "2"])
        assert isinstance(report, ExitReport)
        assert report.code in (0, 1, 2, 3)

    def test_help_is_not_an_error(self):
        report, _, _ = invoke(["--help"])
        assert report.code == 0
