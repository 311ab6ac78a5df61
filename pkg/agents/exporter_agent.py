# agents/exporter_agent.py
import logging
import os
import re
from typing import Any, Dict, List, Optional

import pandas as pd

from settings import DEFAULT_EXPORT_FORMAT, OUTPUT_DIR

from .coral_utils import canonical_json, fail, make_response

logger = logging.getLogger("agents.exporter")


def _flatten(record: Dict[str, Any]) -> Dict[str, Any]:
    # lists and dicts become canonical JSON cells
    return {k: canonical_json(v) if isinstance(v, (list, dict)) else v for k, v in record.items()}


class ExporterAgent:
    def __init__(self, export_dir: Optional[str] = None):
        self.id = "exporter-agent"
        self.export_dir = export_dir or str(OUTPUT_DIR)
        os.makedirs(self.export_dir, exist_ok=True)

    def _path(self, filename: str, ext: str) -> str:
        safe = re.sub(r"[^A-Za-z0-9_.-]+", "_", filename).strip("_") or "report"
        return os.path.join(self.export_dir, f"{safe}.{ext}")

    def export_csv(self, records: List[Dict[str, Any]], filename: str) -> str:
        path = self._path(filename, "csv")
        pd.DataFrame([_flatten(r) for r in records]).to_csv(path, index=False)
        return path

    def export_xlsx(self, records: List[Dict[str, Any]], filename: str, summary: Dict[str, Any]) -> str:
        path = self._path(filename, "xlsx")
        df = pd.DataFrame([_flatten(r) for r in records])
        with pd.ExcelWriter(path, engine="xlsxwriter") as writer:
            df.to_excel(writer, sheet_name="Records", index=False)
            sheet = writer.book.add_worksheet("Summary")
            sheet.write(0, 0, "Records")
            sheet.write(0, 1, len(records))
            for row, (key, value) in enumerate(sorted(summary.items()), start=1):
                sheet.write(row, 0, key)
                sheet.write(row, 1, canonical_json(value) if isinstance(value, (list, dict)) else value)
        return path

    def export_json(self, records: List[Dict[str, Any]], filename: str, summary: Dict[str, Any]) -> str:
        path = self._path(filename, "json")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(canonical_json({"summary": summary, "records": records}))
            fh.write("\n")
        return path

    def handle_coral(self, envelope: Dict[str, Any]) -> Dict[str, Any]:
        intent = envelope.get("type")
        body = envelope.get("body", {})
        resp = make_response(envelope, self.id)

        if intent != "export.report":
            resp["body"] = fail(f"unsupported intent {intent}")
            return resp

        records = body.get("records")
        if records is None:
            resp["body"] = fail("Missing records payload")
            return resp
        fmt = (body.get("format") or DEFAULT_EXPORT_FORMAT).lower()
        name = body.get("name") or "report"
        summary = body.get("summary") or {}
        try:
            if fmt == "csv":
                path = self.export_csv(records, name)
            elif fmt == "xlsx":
                path = self.export_xlsx(records, name, summary)
            elif fmt == "json":
                path = self.export_json(records, name, summary)
            else:
                resp["body"] = fail(f"Unsupported format {fmt}")
                return resp
        except OSError as e:
            logger.exception("export of %s failed", name)
            resp["body"] = fail(str(e))
            return resp
        logger.info("exported %d records to %s", len(records), path)
        resp["body"] = {"status": "PASS", "file": path, "format": fmt, "records": len(records)}
        return resp
