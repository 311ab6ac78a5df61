# agents/sweep_agent.py
import logging
from typing import Any, Dict

from rooks.suites import SweepBounds, run_sweep

from .coral_utils import fail, make_response

logger = logging.getLogger("agents.sweep")


class SweepAgent:
    def __init__(self, workers: int = 1):
        self.id = "sweep-agent"
        self.workers = workers

    def handle_coral(self, envelope: Dict[str, Any]) -> Dict[str, Any]:
        intent = envelope.get("type")
        body = envelope.get("body", {})
        resp = make_response(envelope, self.id)

        if intent != "sweep.run":
            resp["body"] = fail(f"unsupported intent {intent}")
            return resp

        bounds = SweepBounds(body["max_cells"], body["m_max"], body["n_max"])
        workers = body.get("workers") or self.workers
        logger.info("sweep %s with %d worker(s)", bounds, workers)
        try:
            report = run_sweep(bounds, body.get("suites"), workers)
        except KeyError as e:
            resp["body"] = fail(str(e))
            return resp
        for suite in report.suites:
            if not suite.passed:
                logger.warning("suite %s failed %d of %d cases", suite.name, suite.failure_count, suite.checked)
        resp["body"] = {"status": "PASS" if report.passed else "MISMATCH", "report": report.model_dump()}
        return resp
