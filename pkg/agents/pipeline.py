# agents/pipeline.py
"""
Routes a command through the validator agent and then to the agent owning its intent.
Shared by the CLI and the HTTP gateway.
"""

import logging
from typing import Any, Dict, Optional

from settings import OUTPUT_DIR, SWEEP_WORKERS

from .analysis_agent import AnalysisAgent
from .catalan_agent import CatalanAgent
from .coral_utils import make_message
from .exporter_agent import ExporterAgent
from .hit_agent import HitAgent
from .sweep_agent import SweepAgent
from .validator_agent import ValidatorAgent
from .verifier_agent import VerifierAgent

logger = logging.getLogger("agents.pipeline")

# command -> parameter naming the intent suffix (None: fixed intent)
_INTENT_KEYS = {
    "analyze": ("board", None, "analyze"),
    "verify": ("verify", "theorem", None),
    "canon": ("canon", "kind", None),
    "class": ("class", "what", None),
    "catalan": ("catalan", "what", None),
    "hit": ("hit", "flavor", None),
    "sweep": ("sweep", None, "run"),
    "export": ("export", None, "report"),
}

# intent -> (report kind, body key) checked against the report schemas before it leaves the pipeline
_REPORT_CHECKS = {
    "verify.mft": ("factorization", "report"),
    "verify.mwft": ("factorization", "report"),
    "verify.pqmft": ("factorization", "report"),
    "sweep.run": ("sweep", "report"),
    "hit.scan": ("scan", "records"),
}


def intent_for(command: str, params: Dict[str, Any]) -> str:
    prefix, key, fixed = _INTENT_KEYS[command]
    return f"{prefix}.{params[key] if key else fixed}"


class Pipeline:
    def __init__(self, sender: str = "cli", export_dir: Optional[str] = None, workers: int = SWEEP_WORKERS):
        self.sender = sender
        self.validator = ValidatorAgent()
        self.exporter = ExporterAgent(export_dir=export_dir or str(OUTPUT_DIR))
        verifier = VerifierAgent()
        analysis = AnalysisAgent()
        catalan = CatalanAgent()
        hit = HitAgent()
        sweep = SweepAgent(workers=workers)
        self.routes = {
            "board": analysis,
            "canon": analysis,
            "class": analysis,
            "verify": verifier,
            "catalan": catalan,
            "hit": hit,
            "sweep": sweep,
            "export": self.exporter,
        }

    def validate(self, command: str, params: Dict[str, Any]) -> Dict[str, Any]:
        msg = make_message("validate.request", sender=self.sender, recipient=self.validator.id, body={"command": command, "params": params})
        return self.validator.handle_coral(msg).get("body", {})

    def run_command(self, command: str, params: Dict[str, Any]) -> Dict[str, Any]:
        """
        Validate `params` for `command`, then hand the normalized body to the owning agent.
        Returns the agent's response body; validation failures come back as
        {"status": "FAIL", "validation": ...}.
        """
        val_body = self.validate(command, params)
        if val_body.get("status") != "PASS" or not val_body.get("valid", False):
            logger.info("rejected %s: %s %s", command, val_body.get("schema_errors"), val_body.get("rule_errors"))
            return {"status": "FAIL", "validation": val_body}

        normalized = val_body["normalized_data"]
        intent = intent_for(command, normalized)
        agent = self.routes[intent.split(".", 1)[0]]
        msg = make_message(intent, sender=self.sender, recipient=agent.id, body=normalized)
        logger.info("dispatching %s to %s", intent, agent.id)
        body = agent.handle_coral(msg).get("body", {})
        return self._checked(intent, body)

    def _checked(self, intent: str, body: Dict[str, Any]) -> Dict[str, Any]:
        if intent not in _REPORT_CHECKS or body.get("status") == "FAIL":
            return body
        kind, key = _REPORT_CHECKS[intent]
        if key not in body:
            return body
        check = self.check_report(kind, body[key])
        if not check.get("valid", False):
            logger.error("%s report failed its schema: %s", intent, check.get("schema_errors"))
            return {"status": "FAIL", "error": f"malformed {kind} report", "validation": check}
        return body

    def export(self, name: str, records: Any, fmt: str, summary: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        return self.run_command("export", {"name": name, "records": records, "format": fmt, "summary": summary or {}})

    def check_report(self, kind: str, report: Any) -> Dict[str, Any]:
        msg = make_message("validate.report", sender=self.sender, recipient=self.validator.id, body={"kind": kind, "report": report})
        return self.validator.handle_coral(msg).get("body", {})
