import json
from unittest.mock import patch

import pytest

from cli.run import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main
from utils.errors import TruncationError


class TestTable:
    def test_csv(self, capsys):
        assert main(["table", "--gmax", "1", "--kmin", "1", "--kmax", "1"]) == EXIT_OK
        assert capsys.readouterr().out == "n,r,g,k,value\n1,0,0,1,1\n1,0,1,1,24\n"

    def test_json(self, capsys):
        code = main(
            ["table", "--gmax", "0", "--kmin", "1", "--kmax", "1", "--format", "json"]
        )
        assert code == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert document["rows"] == [{"g": 0, "k": 1, "n": 1, "r": 0, "value": 1}]

    def test_output_file(self, tmp_path):
        target = tmp_path / "table.csv"
        code = main(
            ["table", "--gmax", "0", "--kmin", "1", "--kmax", "1", "--out", str(target)]
        )
        assert code == EXIT_OK
        assert target.read_text() == "n,r,g,k,value\n1,0,0,1,1\n"

    def test_rank_out_of_range(self, capsys):
        assert main(["table", "--n", "2", "--r", "3"]) == EXIT_USAGE
        assert "0 <= r <= n" in capsys.readouterr().err

    def test_euler_and_hodge_exclude_each_other(self):
        with pytest.raises(SystemExit):
            main(["table", "--euler", "--hodge"])

    @patch(
        "cli.run.PartitionService.table_cells",
        side_effect=TruncationError("coefficient beyond the known range"),
    )
    def test_computation_error_is_a_failure(self, _, capsys):
        assert main(["table", "--gmax", "1"]) == EXIT_FAILURE
        assert "FAIL TruncationError" in capsys.readouterr().err


class TestVerify:
    def test_ucomb(self, capsys):
        code = main(["verify", "--suite", "ucomb", "--cutoff", "9", "--rank-max", "2"])
        assert code == EXIT_OK
        assert capsys.readouterr().err.startswith("ucomb: ")

    def test_negative_order(self):
        assert main(["verify", "--suite", "theta", "--qorder", "-1"]) == EXIT_USAGE

    def test_unknown_suite(self):
        assert main(["verify", "--suite", "everything"]) == EXIT_USAGE

    def test_report_file(self, tmp_path):
        target = tmp_path / "report.json"
        code = main(
            ["verify", "--suite", "ucomb", "--cutoff", "7", "--rank-max", "1"]
            + ["--out", str(target)]
        )
        assert code == EXIT_OK
        report = json.loads(target.read_text())
        assert report["suite"] == "ucomb"
        assert report["passed"] is True


class TestFit:
    def test_ceiling_too_low(self, capsys):
        assert main(["fit", "--vmax", "2", "--weight-ceiling", "0"]) == EXIT_FAILURE
        assert "FAIL fit n=1 r=0 s=2" in capsys.readouterr().err

    def test_rank_one(self, capsys):
        assert main(["fit", "--vmax", "2"]) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert [fit["s"] for fit in document["fits"]] == [0, 1, 2]

    def test_golden_file(self, tmp_path, capsys):
        golden = tmp_path / "golden" / "fit.json"
        arguments = ["fit", "--vmax", "1", "--golden", str(golden)]

        assert main(arguments) == EXIT_OK
        assert golden.exists()
        assert main(arguments) == EXIT_OK

        golden.write_text("{}\n")
        assert main(arguments) == EXIT_FAILURE
        assert "differs from golden file" in capsys.readouterr().err


class TestSeries:
    def test_c_table(self, capsys):
        assert main(["series", "--kind", "c-table", "--n", "2", "--r", "1"]) == EXIT_OK
        document = json.loads(capsys.readouterr().out)
        assert [(entry["i"], entry["j"]) for entry in document["entries"]] == [
            (1, 0),
            (1, 1),
            (2, 0),
        ]

    def test_euler_route(self, capsys):
        code = main(["series", "--kind", "euler", "--qorder", "2", "--ywin", "1"])
        assert code == EXIT_OK
        assert json.loads(capsys.readouterr().out)["route"] == "euler"

    def test_unknown_route(self):
        assert main(["series", "--route", "shortcut"]) == EXIT_USAGE

    def test_canonical_series_keys(self, capsys):
        code = main(["series", "--qorder", "2", "--ywin", "2"])
        assert code == EXIT_OK
        series = json.loads(capsys.readouterr().out)["series"]
        assert set(series) == {"var", "lower", "order", "coeffs"}
        assert series["var"] == "q"
