# agents/verifier_agent.py
import logging
from typing import Any, Dict

from rooks.board import parse_board
from rooks.factorization import FactorizationReport, verify_mft, verify_mwft, verify_pqmft

from .coral_utils import fail, make_response

logger = logging.getLogger("agents.verifier")


class VerifierAgent:
    """
    VerifierAgent
    - Handles 'verify.mft', 'verify.mwft' and 'verify.pqmft'
    - Body: board, m, optional columns (padding), mode and x_values for pqmft
    """

    def __init__(self):
        self.id = "verifier-agent"

    def verify(self, theorem: str, body: Dict[str, Any]) -> FactorizationReport:
        board = parse_board(body["board"])
        m = body["m"]
        columns = body.get("columns")
        if theorem == "mft":
            return verify_mft(board, m, columns)
        if theorem == "mwft":
            return verify_mwft(board, m, columns)
        return verify_pqmft(board, m, body.get("mode", "symbolic"), body.get("x_values"), columns)

    def handle_coral(self, envelope: Dict[str, Any]) -> Dict[str, Any]:
        intent = envelope.get("type") or ""
        body = envelope.get("body", {})
        resp = make_response(envelope, self.id)

        theorem = intent.split(".", 1)[1] if intent.startswith("verify.") else None
        if theorem not in ("mft", "mwft", "pqmft"):
            resp["body"] = fail(f"unsupported intent {intent}")
            return resp

        logger.info("verifying %s on board %s m=%s", theorem, body.get("board"), body.get("m"))
        try:
            report = self.verify(theorem, body)
        except (ValueError, KeyError) as e:
            resp["body"] = fail(str(e))
            return resp
        if not report.match:
            logger.warning("%s does not match on board %s m=%s", theorem, report.board, report.m)
        resp["body"] = {"status": "PASS" if report.match else "MISMATCH", "report": report.model_dump()}
        return resp
