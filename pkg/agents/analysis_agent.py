# agents/analysis_agent.py
import logging
from typing import Any, Dict

from rooks.board import (
    FerrersBoard,
    format_board,
    is_m_increasing,
    is_m_restricted,
    is_singleton,
    l_operator,
    level_counts,
    minimal_bounding_n,
    parse_board,
    zones,
)
from rooks.catalan import class_dinv_bruteforce, class_dinv_generating_function
from rooks.equivalence import (
    count_singleton_class,
    count_weight_class,
    enumerate_class,
    m_increasing_construction,
    m_restricted_construction,
    m_restricted_singleton_representative,
)
from rooks.placement import f_vector, r_vector

from .coral_utils import fail, make_response

logger = logging.getLogger("agents.analysis")


class AnalysisAgent:
    """
    AnalysisAgent
    - 'board.analyze': zones, flags, level counts, r- and f-vectors
    - 'canon.level' / 'canon.weight' / 'canon.restricted-singleton': representatives
    - 'class.size' / 'class.list' / 'class.qgen': class sizes, members, dinv generating function
    """

    def __init__(self):
        self.id = "analysis-agent"

    def analyze(self, board: FerrersBoard, m: int) -> Dict[str, Any]:
        return {
            "status": "PASS",
            "board": format_board(board),
            "m": m,
            "zones": [
                {"start": z.start, "end": z.end, "floor": z.floor_value, "remainder": z.remainder}
                for z in zones(board, m)
            ],
            "singleton": is_singleton(board, m),
            "m_increasing": is_m_increasing(board, m),
            "m_restricted": is_m_restricted(board, m),
            "level_counts": level_counts(board, m),
            "l_operator": format_board(l_operator(board, m)),
            "minimal_bounding_n": minimal_bounding_n(board, m),
            "r_vector": list(r_vector(board, m)),
            "f_vector": list(f_vector(board, m)),
        }

    def canon(self, kind: str, board: FerrersBoard, m: int) -> Dict[str, Any]:
        body: Dict[str, Any] = {"status": "PASS", "board": format_board(board), "m": m, "kind": kind}
        if kind == "restricted-singleton":
            body["representative"] = format_board(m_restricted_singleton_representative(board, m))
            return body
        construction = m_increasing_construction(board, m) if kind == "level" else m_restricted_construction(board, m)
        body.update(
            {
                "representative": format_board(construction.representative),
                "columns": construction.columns,
                "root_vector": list(construction.root_vector),
                "rearranged": list(construction.rearranged),
            }
        )
        if kind == "level":
            body["singleton_board"] = format_board(construction.singleton_board)
        return body

    def class_size(self, board: FerrersBoard, m: int, relation: str, check: bool) -> Dict[str, Any]:
        size = count_singleton_class(board, m) if relation == "level" else count_weight_class(board, m)
        body: Dict[str, Any] = {"status": "PASS", "board": format_board(board), "m": m, "relation": relation, "size": size}
        if check:
            members = enumerate_class(board, m, relation)
            if relation == "level":
                members = [b for b in members if is_singleton(b, m)]
            body["oracle"] = len(members)
            if len(members) != size:
                logger.warning("class size formula %s disagrees with enumeration %s on %s", size, len(members), body["board"])
                body["status"] = "MISMATCH"
        return body

    def class_list(self, board: FerrersBoard, m: int, relation: str) -> Dict[str, Any]:
        members = enumerate_class(board, m, relation)
        return {
            "status": "PASS",
            "board": format_board(board),
            "m": m,
            "relation": relation,
            "members": [format_board(b) for b in members],
            "singleton": [is_singleton(b, m) for b in members],
        }

    def class_qgen(self, board: FerrersBoard, m: int, n: Any, check: bool) -> Dict[str, Any]:
        n = n or minimal_bounding_n(board, m)
        generating = class_dinv_generating_function(board, n, m)
        body: Dict[str, Any] = {
            "status": "PASS",
            "board": format_board(board),
            "m": m,
            "n": n,
            "generating_function": generating.render(),
            "terms": generating.terms_table(),
        }
        if check:
            oracle = class_dinv_bruteforce(board, n, m)
            body["oracle"] = oracle.render()
            if oracle != generating:
                logger.warning("dinv generating function disagrees with enumeration on %s", body["board"])
                body["status"] = "MISMATCH"
        return body

    def handle_coral(self, envelope: Dict[str, Any]) -> Dict[str, Any]:
        intent = envelope.get("type") or ""
        body = envelope.get("body", {})
        resp = make_response(envelope, self.id)
        logger.info("analysis intent %s board=%s m=%s", intent, body.get("board"), body.get("m"))

        try:
            board = parse_board(body.get("board", ""))
            m = body.get("m", 1)
            if intent == "board.analyze":
                resp["body"] = self.analyze(board, m)
            elif intent in ("canon.level", "canon.weight", "canon.restricted-singleton"):
                resp["body"] = self.canon(intent.split(".", 1)[1], board, m)
            elif intent == "class.size":
                resp["body"] = self.class_size(board, m, body.get("relation", "level"), body.get("check", False))
            elif intent == "class.list":
                resp["body"] = self.class_list(board, m, body.get("relation", "level"))
            elif intent == "class.qgen":
                resp["body"] = self.class_qgen(board, m, body.get("n"), body.get("check", False))
            else:
                resp["body"] = fail(f"unsupported intent {intent}")
        except ValueError as e:
            resp["body"] = fail(str(e))
        return resp
