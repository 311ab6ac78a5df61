from database.records import list_runs, list_scan_records, record_scan, record_sweep
from rooks.suites import SweepBounds, run_sweep


def _scan(board, negative, witness=None, p1=False):
    return {"board": board, "n": 3, "m": 2, "specialize_p1": p1, "negative_found": negative, "witness": witness}


class TestSweepRuns:
    def test_record_and_list(self, db_session):
        report = run_sweep(SweepBounds(2, 1, 1), ["zones", "mft"]).model_dump()
        run = record_sweep(db_session, report)
        assert run.id == 1
        assert [r.name for r in run.results] == ["zones", "mft"]
        second = record_sweep(db_session, report)
        runs = list_runs(db_session)
        assert [r["id"] for r in runs] == [second.id, run.id]
        assert runs[0]["suites"][1]["failures"] == []
        assert runs[0]["passed"] is True


class TestScanRecords:
    def test_upsert(self, db_session):
        assert record_scan(db_session, [_scan("1,1,1", True, "h_0: -1*p"), _scan("1,2", False)]) == 2
        assert record_scan(db_session, [_scan("1,1,1", False)]) == 1
        rows = list_scan_records(db_session)
        assert [(r["board"], r["negative_found"]) for r in rows] == [("1,1,1", False), ("1,2", False)]
        assert rows[0]["witness"] is None

    def test_p1_is_part_of_the_key(self, db_session):
        record_scan(db_session, [_scan("1,1,1", True), _scan("1,1,1", False, p1=True)])
        assert len(list_scan_records(db_session, n=3, m=2)) == 2
        assert list_scan_records(db_session, m=1) == []
