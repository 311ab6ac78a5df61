# agents/hit_agent.py
import logging
from typing import Any, Dict, List

from rooks.board import format_board, is_singleton, parse_board
from rooks.hitnumbers import (
    HitVector,
    boards_in_host,
    hit_numbers,
    hit_numbers_bruteforce,
    m_level_hit_numbers,
    m_level_hit_numbers_bruteforce,
    positivity_scan,
    pq_hit_numbers,
    specialize_p1,
)

from .coral_utils import fail, make_response

logger = logging.getLogger("agents.hit")


class HitAgent:
    """
    HitAgent
    - 'hit.classic' / 'hit.mlevel': integer hit vectors, optional brute-force check
    - 'hit.pq': p,q hit vector (optionally with p = 1)
    - 'hit.scan': negative-coefficient scan over every board fitting the host
    """

    def __init__(self):
        self.id = "hit-agent"

    def _vector_body(self, board: str, vector: HitVector) -> Dict[str, Any]:
        return {"status": "PASS", "board": board, "n": vector.n, "m": vector.m, "flavor": vector.flavor.value, "entries": vector.rendered()}

    def integer_hits(self, flavor: str, body: Dict[str, Any]) -> Dict[str, Any]:
        board = parse_board(body["board"])
        n, m = body["n"], body["m"]
        if flavor == "classic":
            vector = hit_numbers(board, n)
        else:
            vector = m_level_hit_numbers(board, n, m)
        result = self._vector_body(format_board(board), vector)
        if body.get("check"):
            oracle = hit_numbers_bruteforce(board, n) if flavor == "classic" else m_level_hit_numbers_bruteforce(board, n, m)
            result["oracle"] = list(oracle.entries)
            if oracle != vector:
                logger.warning("hit numbers disagree with enumeration on %s", result["board"])
                result["status"] = "MISMATCH"
        return result

    def pq_hits(self, body: Dict[str, Any]) -> Dict[str, Any]:
        board = parse_board(body["board"])
        vector = pq_hit_numbers(board, body["n"], body["m"])
        result = self._vector_body(format_board(board), vector)
        result["negative_found"] = any(e.negative_terms() for e in vector.entries)
        if body.get("p1"):
            specialized = [specialize_p1(e) for e in vector.entries]
            result["p1_entries"] = [e.render() for e in specialized]
            result["p1_negative_found"] = any(e.negative_terms() for e in specialized)
        return result

    def scan(self, body: Dict[str, Any]) -> Dict[str, Any]:
        n, m = body["n"], body["m"]
        boards = boards_in_host(n, m, body["max_cells"])
        if body.get("singleton_only"):
            boards = [b for b in boards if is_singleton(b, m)]
        records: List[Dict[str, Any]] = [r.model_dump() for r in positivity_scan(boards, n, m, body.get("p1", False))]
        return {
            "status": "PASS",
            "n": n,
            "m": m,
            "specialize_p1": body.get("p1", False),
            "boards": len(records),
            "negative_boards": sum(1 for r in records if r["negative_found"]),
            "records": records,
        }

    def handle_coral(self, envelope: Dict[str, Any]) -> Dict[str, Any]:
        intent = envelope.get("type") or ""
        body = envelope.get("body", {})
        resp = make_response(envelope, self.id)
        logger.info("hit intent %s board=%s n=%s m=%s", intent, body.get("board"), body.get("n"), body.get("m"))

        try:
            if intent in ("hit.classic", "hit.mlevel"):
                resp["body"] = self.integer_hits(intent.split(".", 1)[1], body)
            elif intent == "hit.pq":
                resp["body"] = self.pq_hits(body)
            elif intent == "hit.scan":
                resp["body"] = self.scan(body)
            else:
                resp["body"] = fail(f"unsupported intent {intent}")
        except (ValueError, KeyError) as e:
            resp["body"] = fail(str(e))
        return resp
