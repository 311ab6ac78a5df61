# agents/coral_utils.py
import json
import uuid
from datetime import datetime, timezone
from typing import Any, Dict, Optional


def now_iso() -> str:
    return datetime.now(timezone.utc).replace(microsecond=0, tzinfo=None).isoformat() + "Z"


def make_message(
    msg_type: str,
    sender: str,
    recipient: str,
    body: Dict[str, Any],
    msg_id: Optional[str] = None,
    metadata: Optional[Dict[str, Any]] = None,
) -> Dict[str, Any]:
    return {
        "id": msg_id or str(uuid.uuid4()),
        "type": msg_type,
        "from": sender,
        "to": recipient,
        "timestamp": now_iso(),
        "body": body or {},
        "metadata": metadata or {},
    }


def make_response(envelope: Dict[str, Any], sender: str) -> Dict[str, Any]:
    """Empty response envelope addressed back to the sender of `envelope`."""
    intent = envelope.get("type")
    return {
        "id": f"resp-{envelope.get('id')}",
        "type": f"{intent}.response",
        "from": sender,
        "to": envelope.get("from"),
        "timestamp": now_iso(),
        "body": {},
    }


def canonical_json(obj: Any) -> str:
    # sorted keys, no whitespace: identical bodies serialize byte-identically
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def fail(error: str) -> Dict[str, Any]:
    return {"status": "FAIL", "error": error}
