# agents/validator_agent.py
import logging
from typing import Any, Dict, List, Optional

import jsonschema

from rooks.board import fits_in, is_singleton, parse_board, trim
from rooks.errors import InvalidInputError
from rooks.suites import SUITES

from .coral_utils import fail, make_response

logger = logging.getLogger("agents.validator")

_BOARD = {"type": "string"}
_POSITIVE = {"type": "integer", "minimum": 1}
_NONNEGATIVE = {"type": "integer", "minimum": 0}
_FORMATS = {"type": "string", "enum": ["csv", "xlsx", "json"]}

REQUEST_SCHEMAS: Dict[str, Dict[str, Any]] = {
    "analyze": {
        "type": "object",
        "required": ["board", "m"],
        "properties": {"board": _BOARD, "m": _POSITIVE},
    },
    "verify": {
        "type": "object",
        "required": ["theorem", "board", "m"],
        "properties": {
            "theorem": {"type": "string", "enum": ["mft", "mwft", "pqmft"]},
            "board": _BOARD,
            "m": _POSITIVE,
            "mode": {"type": "string", "enum": ["symbolic", "numeric"]},
            "x_values": {"type": ["array", "null"], "items": _NONNEGATIVE},
            "columns": {"type": ["integer", "null"], "minimum": 0},
        },
    },
    "canon": {
        "type": "object",
        "required": ["kind", "board", "m"],
        "properties": {
            "kind": {"type": "string", "enum": ["level", "weight", "restricted-singleton"]},
            "board": _BOARD,
            "m": _POSITIVE,
        },
    },
    "class": {
        "type": "object",
        "required": ["what", "board", "m"],
        "properties": {
            "what": {"type": "string", "enum": ["size", "list", "qgen"]},
            "board": _BOARD,
            "m": _POSITIVE,
            "relation": {"type": "string", "enum": ["level", "weight"]},
            "n": {"type": ["integer", "null"], "minimum": 1},
            "check": {"type": "boolean"},
        },
    },
    "catalan": {
        "type": "object",
        "required": ["what", "m"],
        "properties": {
            "what": {"type": "string", "enum": ["stats", "phi", "poly", "extremal"]},
            "board": {"type": ["string", "null"]},
            "n": {"type": ["integer", "null"], "minimum": 1},
            "m": _POSITIVE,
        },
    },
    "hit": {
        "type": "object",
        "required": ["flavor", "n", "m"],
        "properties": {
            "flavor": {"type": "string", "enum": ["classic", "mlevel", "pq", "scan"]},
            "board": {"type": ["string", "null"]},
            "n": _POSITIVE,
            "m": _POSITIVE,
            "max_cells": {"type": ["integer", "null"], "minimum": 0},
            "singleton_only": {"type": "boolean"},
            "p1": {"type": "boolean"},
            "check": {"type": "boolean"},
        },
    },
    "sweep": {
        "type": "object",
        "required": ["max_cells", "m_max", "n_max"],
        "properties": {
            "max_cells": _NONNEGATIVE,
            "m_max": _POSITIVE,
            "n_max": _POSITIVE,
            "suites": {"type": "array", "items": {"type": "string"}},
            "workers": _POSITIVE,
        },
    },
    "export": {
        "type": "object",
        "required": ["name", "records"],
        "properties": {
            "name": {"type": "string", "minLength": 1},
            "records": {"type": "array", "items": {"type": "object"}},
            "format": _FORMATS,
            "summary": {"type": "object"},
        },
    },
}

_POLY_LIST = {"type": "array", "items": {"type": ["integer", "string"]}}

REPORT_SCHEMAS: Dict[str, Dict[str, Any]] = {
    "factorization": {
        "type": "object",
        "required": ["theorem", "board", "m", "depth", "padding", "factors", "sum_side_coefficients", "product_side_coefficients", "match"],
        "properties": {
            "theorem": {"type": "string", "enum": ["mft", "mwft", "pqmft"]},
            "board": {"type": "string"},
            "m": _POSITIVE,
            "depth": _NONNEGATIVE,
            "padding": _NONNEGATIVE,
            "mode": {"type": ["string", "null"]},
            "x_values": {"type": "array", "items": _NONNEGATIVE},
            "factors": {"type": "array", "items": {"type": "string"}},
            "sum_side_coefficients": _POLY_LIST,
            "product_side_coefficients": _POLY_LIST,
            "match": {"type": "boolean"},
        },
    },
    "sweep": {
        "type": "object",
        "required": ["max_cells", "m_max", "n_max", "suites", "passed"],
        "properties": {
            "suites": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["name", "checked", "failure_count", "failures", "passed"],
                    "properties": {
                        "name": {"type": "string"},
                        "checked": _NONNEGATIVE,
                        "failure_count": _NONNEGATIVE,
                        "failures": {"type": "array", "items": {"type": "string"}},
                        "passed": {"type": "boolean"},
                    },
                },
            },
            "passed": {"type": "boolean"},
        },
    },
    "scan": {
        "type": "array",
        "items": {
            "type": "object",
            "required": ["board", "n", "m", "specialize_p1", "negative_found", "witness"],
            "properties": {
                "board": {"type": "string"},
                "n": _POSITIVE,
                "m": _POSITIVE,
                "specialize_p1": {"type": "boolean"},
                "negative_found": {"type": "boolean"},
                "witness": {"type": ["string", "null"]},
            },
        },
    },
}


class ValidatorAgent:
    """
    ValidatorAgent: request schemas + parameter rules + normalization, and report schemas
    """

    def __init__(self, schemas: Optional[Dict[str, Dict[str, Any]]] = None):
        self.id = "validator-agent"
        self.schemas = schemas or REQUEST_SCHEMAS

    def _schema_errors(self, schema: Dict[str, Any], data: Any) -> List[Dict[str, Any]]:
        validator = jsonschema.Draft7Validator(schema)
        errors: List[Dict[str, Any]] = []
        for error in sorted(validator.iter_errors(data), key=lambda e: str(list(e.path))):
            errors.append(
                {
                    "message": error.message,
                    "path": list(error.path),
                    "validator": error.validator,
                }
            )
        return errors

    def validate_schema(self, command: str, data: Dict[str, Any]) -> List[Dict[str, Any]]:
        return self._schema_errors(self.schemas[command], data)

    def normalize(self, command: str, data: Dict[str, Any]) -> Dict[str, Any]:
        normalized = {k: v for k, v in data.items() if v is not None}
        if isinstance(normalized.get("board"), str):
            normalized["board"] = normalized["board"].strip()
        if command == "verify" and normalized.get("theorem") == "pqmft":
            normalized.setdefault("mode", "numeric" if normalized.get("x_values") else "symbolic")
        if command == "class":
            normalized.setdefault("relation", "weight" if normalized.get("what") == "qgen" else "level")
            normalized.setdefault("check", False)
        if command == "hit":
            normalized.setdefault("singleton_only", False)
            normalized.setdefault("p1", False)
            normalized.setdefault("check", False)
        if command == "sweep":
            normalized.setdefault("suites", ["all"])
            normalized.setdefault("workers", 1)
        return normalized

    def validate_rules(self, command: str, data: Dict[str, Any]) -> List[str]:
        errors: List[str] = []
        board = None
        if isinstance(data.get("board"), str):
            try:
                board = parse_board(data["board"])
                data["heights"] = list(board.columns)
            except InvalidInputError as e:
                errors.append(str(e))
                return errors
        m = data.get("m", 1)

        if command == "verify" and data.get("mode") == "numeric":
            bad = [x for x in data.get("x_values") or [] if x % m]
            if bad:
                errors.append(f"x values {bad} are not multiples of m={m}")
            if data.get("theorem") != "pqmft":
                errors.append("numeric mode applies to pqmft only")
        if command == "verify" and data.get("columns") is not None and board is not None:
            if data["columns"] < len(board):
                errors.append(f"cannot pad a {len(board)}-column board to {data['columns']} columns")

        if command == "class" and board is not None:
            if data.get("what") == "size" and data.get("relation") == "level" and not is_singleton(board, m):
                errors.append(f"level class sizes are given for {m}-singleton boards only")
            if data.get("what") == "qgen" and data.get("n") is not None and not fits_in(board, data["n"], m):
                errors.append(f"board does not fit in the triangle n={data['n']} m={m}")

        if command == "catalan":
            what = data.get("what")
            if what in ("stats", "phi", "extremal") and board is None:
                errors.append(f"catalan {what} needs a board")
            if what in ("stats", "phi", "poly") and data.get("n") is None:
                errors.append(f"catalan {what} needs n")
            if what in ("stats", "phi") and board is not None and data.get("n") is not None:
                if not fits_in(board, data["n"], m):
                    errors.append(f"board does not fit in the triangle n={data['n']} m={m}")
            if what == "extremal" and board is not None and data.get("n") is not None and not fits_in(board, data["n"], m):
                errors.append(f"board does not fit in the triangle n={data['n']} m={m}")

        if command == "hit":
            n = data.get("n", 1)
            if data.get("flavor") == "scan":
                if data.get("max_cells") is None:
                    errors.append("hit scan needs max_cells")
            elif board is None:
                errors.append(f"hit {data.get('flavor')} needs a board")
            else:
                trimmed = trim(board)
                if len(trimmed) > n or (trimmed.columns and trimmed.columns[-1] > m * n):
                    errors.append(f"board does not fit in the {m * n} x {n} board")
            if data.get("flavor") == "classic" and m != 1:
                errors.append("classical hit numbers use m=1")

        if command == "sweep":
            unknown = [s for s in data.get("suites", []) if s != "all" and s not in SUITES]
            if unknown:
                errors.append(f"unknown suites {unknown}")
        return errors

    def run_data(self, command: str, data: Dict[str, Any]) -> Dict[str, Any]:
        result = {
            "status": "PASS",
            "valid": True,
            "schema_errors": [],
            "rule_errors": [],
            "normalized_data": None,
        }
        if command not in self.schemas:
            result["status"] = "FAIL"
            result["valid"] = False
            result["rule_errors"] = [f"unknown command {command}"]
            return result

        normalized = self.normalize(command, data)
        result["normalized_data"] = normalized

        schema_errors = self.validate_schema(command, normalized)
        if schema_errors:
            result["status"] = "FAIL"
            result["valid"] = False
            result["schema_errors"] = schema_errors
            return result

        rule_errors = self.validate_rules(command, normalized)
        if rule_errors:
            result["status"] = "FAIL"
            result["valid"] = False
            result["rule_errors"] = rule_errors
        return result

    def validate_report(self, kind: str, report: Any) -> Dict[str, Any]:
        if kind not in REPORT_SCHEMAS:
            return fail(f"unknown report kind {kind}")
        errors = self._schema_errors(REPORT_SCHEMAS[kind], report)
        return {"status": "PASS" if not errors else "FAIL", "valid": not errors, "schema_errors": errors}

    def handle_coral(self, envelope: Dict[str, Any]) -> Dict[str, Any]:
        intent = envelope.get("type")
        body = envelope.get("body", {})
        resp = make_response(envelope, self.id)

        if intent == "validate.request":
            command = body.get("command")
            params = body.get("params")
            if not command or params is None:
                resp["body"] = fail("Missing command or params")
                return resp
            resp["body"] = self.run_data(command, dict(params))
            return resp

        if intent == "validate.report":
            if "kind" not in body or "report" not in body:
                resp["body"] = fail("Missing report kind or payload")
                return resp
            resp["body"] = self.validate_report(body["kind"], body["report"])
            return resp

        resp["body"] = fail(f"unsupported intent {intent}")
        return resp
