# agents/catalan_agent.py
import logging
from typing import Any, Dict

from rooks.board import format_board, parse_board
from rooks.catalan import (
    BoundedBoard,
    area,
    bounce_path,
    dinv,
    dinv_board,
    extremal_dinv_boards,
    higher_catalan_number,
    omega_of,
    phi,
    qt_catalan,
    qt_catalan_bounce,
)
from rooks.equivalence import omega

from .coral_utils import fail, make_response

logger = logging.getLogger("agents.catalan")


class CatalanAgent:
    def __init__(self):
        self.id = "catalan-agent"

    def stats(self, bounded: BoundedBoard) -> Dict[str, Any]:
        path = bounce_path(bounded)
        return {
            "status": "PASS",
            "board": format_board(bounded.board),
            "n": bounded.n,
            "m": bounded.m,
            "omega": list(omega_of(bounded)),
            "area": area(bounded),
            "dinv": dinv_board(bounded),
            "bounce": path.bounce,
            "bounce_h": list(path.h),
            "bounce_v": list(path.v),
        }

    def phi(self, bounded: BoundedBoard) -> Dict[str, Any]:
        image = phi(bounded)
        image_bounce = bounce_path(image).bounce
        exchange = area(bounded) == image_bounce and dinv_board(bounded) == area(image)
        return {
            "status": "PASS" if exchange else "MISMATCH",
            "board": format_board(bounded.board),
            "n": bounded.n,
            "m": bounded.m,
            "image": format_board(image.board),
            "area": area(bounded),
            "dinv": dinv_board(bounded),
            "image_area": area(image),
            "image_bounce": image_bounce,
            "exchange": exchange,
        }

    def poly(self, n: int, m: int) -> Dict[str, Any]:
        dinv_form = qt_catalan(n, m)
        bounce_form = qt_catalan_bounce(n, m)
        same = dinv_form == bounce_form
        return {
            "status": "PASS" if same else "MISMATCH",
            "n": n,
            "m": m,
            "polynomial": dinv_form.render(),
            "terms": dinv_form.terms_table(),
            "bounce_form_equal": same,
            "catalan_number": higher_catalan_number(n, m),
        }

    def extremal(self, body: Dict[str, Any]) -> Dict[str, Any]:
        board = parse_board(body["board"])
        m = body["m"]
        low, high = extremal_dinv_boards(board, m, body.get("n"))
        n = len(low)
        return {
            "status": "PASS",
            "board": format_board(board),
            "m": m,
            "n": n,
            "min_board": format_board(low),
            "max_board": format_board(high),
            "min_dinv": dinv(omega(low, m, n).entries, m),
            "max_dinv": dinv(omega(high, m, n).entries, m),
        }

    def handle_coral(self, envelope: Dict[str, Any]) -> Dict[str, Any]:
        intent = envelope.get("type") or ""
        body = envelope.get("body", {})
        resp = make_response(envelope, self.id)
        logger.info("catalan intent %s n=%s m=%s", intent, body.get("n"), body.get("m"))

        try:
            if intent in ("catalan.stats", "catalan.phi"):
                bounded = BoundedBoard.of(parse_board(body["board"]), body["n"], body["m"])
                resp["body"] = self.stats(bounded) if intent == "catalan.stats" else self.phi(bounded)
            elif intent == "catalan.poly":
                resp["body"] = self.poly(body["n"], body["m"])
            elif intent == "catalan.extremal":
                resp["body"] = self.extremal(body)
            else:
                resp["body"] = fail(f"unsupported intent {intent}")
        except (ValueError, KeyError, RuntimeError) as e:
            resp["body"] = fail(str(e))
        return resp
