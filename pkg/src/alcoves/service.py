"""Stateless HTTP compute service.

Endpoints:
  GET  /api/types     type catalog with suggested bounding boxes
  GET  /api/examples  the quick-example catalog
  POST /api/compute   run a computation, returning scene JSON, the text
                      report, the element list and a timing figure

Validation failures return 400 with a machine-readable code; a provably
empty coconjugation set returns 422 and still carries the (empty) scene.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import conjugacy
from .catalog import quick_examples, type_catalog
from .export import element_input_string, export_scene_json, text_report
from .rootdata import TYPE_TAGS
from .scene import build_scene
from .words import ParseError, word_string

MODES = (conjugacy.CONJUGACY_CLASS, conjugacy.COCONJUGATION, conjugacy.CENTRALIZER)


class RequestInvalid(Exception):
    def __init__(self, code: str, message: str, position: int | None = None):
        self.code = code
        self.message = message
        self.position = position


def _error_body(exc: RequestInvalid) -> dict:
    body: dict = {"code": exc.code, "message": exc.message}
    if exc.position is not None:
        body["position"] = exc.position
    return body


def run_compute(payload: dict) -> tuple[int, dict]:
    """Validate and run one request; returns (http_status, response_body)."""
    from . import group as make_group

    started = time.perf_counter()
    tag = payload.get("type")
    if tag not in TYPE_TAGS:
        raise RequestInvalid("unknown_type", f"unknown type {tag!r}")
    mode = payload.get("mode")
    if mode not in MODES:
        raise RequestInvalid("bad_mode", f"mode must be one of {', '.join(MODES)}")
    bound = payload.get("bound")
    if not isinstance(bound, int) or isinstance(bound, bool) or not 1 <= bound <= conjugacy.MAX_BOUND:
        raise RequestInvalid("bad_bound", f"bound must be an integer in 1..{conjugacy.MAX_BOUND}")
    x_text = payload.get("x")
    if not isinstance(x_text, str):
        raise RequestInvalid("bad_element", "x must be an element string")
    y_text = payload.get("y")
    if mode == conjugacy.COCONJUGATION and not isinstance(y_text, str):
        raise RequestInvalid("missing_y", "coconjugation mode needs a second element y")
    if mode != conjugacy.COCONJUGATION and y_text is not None:
        raise RequestInvalid("unexpected_y", f"mode {mode} takes a single element")

    grp = make_group(tag)
    try:
        x = grp.parse(x_text)
    except ParseError as exc:
        raise RequestInvalid("parse_error", f"x: {exc.message}", exc.position) from exc
    y = None
    if mode == conjugacy.COCONJUGATION:
        try:
            y = grp.parse(y_text)
        except ParseError as exc:
            raise RequestInvalid("parse_error", f"y: {exc.message}", exc.position) from exc

    if mode == conjugacy.CONJUGACY_CLASS:
        result = conjugacy.conjugacy_class(grp, x, bound)
    elif mode == conjugacy.CENTRALIZER:
        result = conjugacy.centralizer(grp, x, bound)
    else:
        result = conjugacy.coconjugation_set(grp, x, y, bound)

    report = text_report(grp, result)
    scene = build_scene(grp, result, bound, x=x, y=y)
    elements = [
        {
            "word": word_string(grp.lex_first_reduced_word(m)),
            "input": element_input_string(grp, m),
            "translation": list(m.lam),
            "spherical_word": "".join(str(i) for i in grp.spherical_word(m.w)),
        }
        for m in result.elements
    ]
    body = {
        "scene": export_scene_json(scene, report),
        "report": report,
        "elements": elements,
        "timing_ms": round((time.perf_counter() - started) * 1000.0, 3),
    }
    if mode == conjugacy.COCONJUGATION and not result.family.parts:
        body["code"] = "empty_coconjugation"
        body["reason"] = "translation-compatible part empty"
        return 422, body
    return 200, body


def create_app() -> FastAPI:
    app = FastAPI(title="affine Coxeter conjugacy explorer", version="1.0.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.get("/api/types")
    def get_types() -> list[dict]:
        return type_catalog()

    @app.get("/api/examples")
    def get_examples() -> list[dict]:
        return list(quick_examples())

    @app.post("/api/compute")
    async def post_compute(request: Request) -> JSONResponse:
        try:
            payload = await request.json()
        except Exception:
            raise RequestInvalid("bad_json", "request body is not valid JSON") from None
        if not isinstance(payload, dict):
            raise RequestInvalid("bad_json", "request body must be a JSON object")
        status, body = run_compute(payload)
        return JSONResponse(status_code=status, content=body)

    @app.exception_handler(RequestInvalid)
    async def invalid_handler(_request: Request, exc: RequestInvalid) -> JSONResponse:
        return JSONResponse(status_code=400, content=_error_body(exc))

    return app


app = create_app()
