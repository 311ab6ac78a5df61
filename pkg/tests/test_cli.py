import json

import pytest
from click.testing import CliRunner
from sqlalchemy.orm import sessionmaker

from cli import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(autouse=True)
def isolated_output(monkeypatch, tmp_path):
    monkeypatch.setattr("agents.pipeline.OUTPUT_DIR", tmp_path)


@pytest.fixture
def session_factory(monkeypatch, db_engine):
    factory = sessionmaker(autocommit=False, autoflush=False, bind=db_engine)
    monkeypatch.setattr("cli.open_session", factory)
    return factory


class TestBoardCommands:
    def test_analyze_text(self, runner):
        result = runner.invoke(cli, ["analyze", "--board", "1,3,3", "--m", "2"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "board=1,3,3 m=2"
        assert "r_vector: 1,7,6" in lines
        assert "singleton: false" in lines
        assert lines[-1] == "status: PASS"

    def test_analyze_json(self, runner):
        result = runner.invoke(cli, ["analyze", "--board", "1,3,3", "--m", "2", "--format", "json"])
        assert result.exit_code == 0
        body = json.loads(result.stdout)
        assert body["f_vector"][0] == 1
        assert body["minimal_bounding_n"] >= 3

    def test_canon(self, runner):
        result = runner.invoke(cli, ["canon", "level", "--board", "1,2,2,3", "--m", "2"])
        assert result.exit_code == 0
        assert "representative: 1,7" in result.stdout.splitlines()

    def test_class_list(self, runner):
        result = runner.invoke(cli, ["class", "list", "--board", "1,2,2,3", "--m", "2", "--format", "json"])
        body = json.loads(result.stdout)
        assert "1,7" in body["members"]
        assert len(body["members"]) == len(body["singleton"])


class TestVerify:
    def test_mft(self, runner):
        result = runner.invoke(cli, ["verify", "mft", "--board", "1,1,2,3,5,7", "--m", "3"])
        assert result.exit_code == 0
        assert "report.match: true" in result.stdout.splitlines()

    def test_numeric(self, runner):
        result = runner.invoke(cli, ["verify", "pqmft", "--board", "1,2", "--m", "2", "--x-values", "0,2"])
        assert result.exit_code == 0
        assert "report.x_values: 0,2" in result.stdout.splitlines()

    def test_usage_errors(self, runner):
        assert runner.invoke(cli, ["analyze", "--board", "3,1"]).exit_code == 2
        assert runner.invoke(cli, ["verify", "pqmft", "--board", "1", "--x-values", "a"]).exit_code == 2
        result = runner.invoke(cli, ["verify", "pqmft", "--board", "1,2", "--m", "2", "--x-values", "3"])
        assert result.exit_code == 2
        assert "not multiples" in result.stderr

    def test_failure_as_json(self, runner):
        result = runner.invoke(cli, ["analyze", "--board", "3,1", "--format", "json"])
        assert result.exit_code == 2
        assert json.loads(result.stdout)["status"] == "FAIL"


class TestCatalanAndHits:
    def test_catalan_stats(self, runner):
        result = runner.invoke(cli, ["catalan", "stats", "--board", "0,0,3,4", "--n", "4", "--m", "2"])
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert "area: 5" in lines and "dinv: 6" in lines and "bounce: 4" in lines

    def test_hit_classic(self, runner):
        result = runner.invoke(cli, ["hit", "classic", "--board", "1,1,1", "--n", "3", "--check"])
        assert result.exit_code == 0
        assert "entries: 0,6,0,0" in result.stdout.splitlines()

    def test_scan_record_and_export(self, runner, session_factory, tmp_path):
        result = runner.invoke(
            cli, ["hit", "scan", "--n", "2", "--m", "1", "--boards-max-cells", "4", "--record", "--export", "json", "--format", "json"]
        )
        assert result.exit_code == 0
        body = json.loads(result.stdout)
        assert body["recorded"] == 6
        assert body["export"]["status"] == "PASS"
        assert (tmp_path / "scan_n2_m1.json").exists()


class TestSweepCommands:
    def test_sweep_text(self, runner):
        result = runner.invoke(cli, ["sweep", "--max-cells", "3", "--m-max", "1", "--n-max", "2", "--suite", "mft"])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[1].startswith("PASS mft checked=")
        assert result.stdout.splitlines()[-1] == "status: PASS"

    def test_unknown_suite(self, runner):
        result = runner.invoke(cli, ["sweep", "--max-cells", "3", "--suite", "bogus"])
        assert result.exit_code == 2

    def test_record_and_list(self, runner, session_factory):
        result = runner.invoke(cli, ["sweep", "--max-cells", "3", "--m-max", "1", "--n-max", "2", "--suite", "zones", "--record"])
        assert result.exit_code == 0
        assert "run_id: 1" in result.stdout.splitlines()
        listing = runner.invoke(cli, ["runs", "--format", "json"])
        runs = json.loads(listing.stdout)["runs"]
        assert [r["id"] for r in runs] == [1]
        assert runs[0]["suites"][0]["name"] == "zones"
