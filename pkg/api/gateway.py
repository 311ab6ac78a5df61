# api/gateway.py
import logging
from typing import Any, Dict

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from agents.pipeline import Pipeline
from api.runs import router as runs_router
from api.schemas import AnalyzeIn, CanonIn, CatalanIn, ClassIn, HitIn, SweepIn, VerifyIn
from database.db_session import init_db
from settings import LOG_LEVEL

# Setup
logging.basicConfig(level=LOG_LEVEL)
logger = logging.getLogger("api.gateway")

app = FastAPI(title="mlevel-rooks - API Gateway")

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

init_db()
app.include_router(runs_router)

pipeline = Pipeline(sender="api-gateway")


def respond(command: str, params: Dict[str, Any]) -> Dict[str, Any]:
    body = pipeline.run_command(command, params)
    status = body.get("status")
    if status == "FAIL":
        logger.info("%s failed: %s", command, body.get("error") or body.get("validation"))
        raise HTTPException(status_code=400, detail=body)
    body["match"] = status != "MISMATCH"
    return body


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/analyze")
def analyze(payload: AnalyzeIn):
    return respond("analyze", payload.model_dump(exclude_none=True))


@app.post("/verify/{theorem}")
def verify(theorem: str, payload: VerifyIn):
    return respond("verify", {"theorem": theorem, **payload.model_dump(exclude_none=True)})


@app.post("/canon/{kind}")
def canon(kind: str, payload: CanonIn):
    return respond("canon", {"kind": kind, **payload.model_dump(exclude_none=True)})


@app.post("/class/{what}")
def class_(what: str, payload: ClassIn):
    return respond("class", {"what": what, **payload.model_dump(exclude_none=True)})


@app.post("/catalan/{what}")
def catalan(what: str, payload: CatalanIn):
    return respond("catalan", {"what": what, **payload.model_dump(exclude_none=True)})


@app.post("/hit/{flavor}")
def hit(flavor: str, payload: HitIn):
    return respond("hit", {"flavor": flavor, **payload.model_dump(exclude_none=True)})


@app.post("/sweep")
def sweep(payload: SweepIn):
    return respond("sweep", payload.model_dump())
