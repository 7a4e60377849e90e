import pytest

from models.partition import Route
from models.reports import Suite
from models.run import Command, OutputFormat, RunConfig
from utils.errors import InvalidRunConfigError


class TestRunConfig:
    def test_defaults(self):
        run = RunConfig.build(command="table")
        assert run.command == Command.TABLE
        assert run.suite == Suite.ALL
        assert run.route == Route.CLOSED
        assert run.format == OutputFormat.CSV
        assert not run.hodge

    def test_rank_out_of_range(self):
        with pytest.raises(InvalidRunConfigError) as exc:
            RunConfig.build(command="table", n=2, r=3)
        assert "0 <= r <= n" in str(exc.value)

    def test_negative_order(self):
        with pytest.raises(InvalidRunConfigError) as exc:
            RunConfig.build(command="verify", qorder=-1)
        assert "qorder" in str(exc.value)

    def test_empty_k_range(self):
        with pytest.raises(InvalidRunConfigError) as exc:
            RunConfig.build(command="table", kmin=3, kmax=1)
        assert "kmin <= kmax" in str(exc.value)

    def test_unknown_suite(self):
        with pytest.raises(InvalidRunConfigError) as exc:
            RunConfig.build(command="verify", suite="everything")
        assert "suite" in str(exc.value)

    def test_zero_rank(self):
        with pytest.raises(InvalidRunConfigError):
            RunConfig.build(command="series", n=0, r=0)
