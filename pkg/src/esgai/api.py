"""HTTP JSON API over the engine, banks and store.

Design rules, enforced by the contract tests:

* scoring is server-authoritative: every mutating endpoint returns the
  recomputed derived values so clients never compute scores;
* GETs never mutate state;
* optimistic concurrency: ``PUT /v1/sessions/{id}`` carries the expected
  revision in ``If-Match`` and a stale value earns a 409 with both
  revisions;
* every error body is an ``ApiError``: ``{code, message, details?}`` with
  codes mirroring the library's error codes one-to-one
  (400 malformed request, 404 not found, 409 conflict, 422 domain error).

Audit attribution comes from the ``X-Actor`` header (defaults to
``anonymous``); TLS and real authentication are left to a fronting proxy.
The endpoint inventory is pinned in ``docs/api_contract.json``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from fastapi import FastAPI, Header, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse

from . import reporting, seeds, workflow
from .bank import BankManifest, FilterCriteria, filter_questions, mapping_matrix, provenance_stats
from .errors import ConflictError, DomainError, NotFoundError, ValidationError
from .model import AuditAction, ScoringConfig, SessionStatus
from .scoring import AuditDraft, score_profile
from .store import SessionStore


def create_app(
    store_dir: str | Path = "./esgai-store",
    console_dir: str | Path | None = None,
    cors_origins: list[str] | None = None,
) -> FastAPI:
    app = FastAPI(title="esgai", version="0.1.0", docs_url=None, redoc_url=None)
    app.state.store = SessionStore(store_dir)
    app.state.banks = dict(seeds.shipped_banks())
    app.state.default_config = ScoringConfig()

    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    _register_error_handlers(app)
    _register_routes(app)

    console = Path(console_dir) if console_dir else Path("frontend/dist")
    if console.is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/console", StaticFiles(directory=console, html=True), name="console")
    return app


def _register_error_handlers(app: FastAPI) -> None:
    def as_response(status: int, code: str, message: str, details: Any = None) -> JSONResponse:
        body: dict[str, Any] = {"code": code, "message": message}
        if details is not None:
            body["details"] = details
        return JSONResponse(status_code=status, content=body)

    @app.exception_handler(ConflictError)
    async def conflict(_: Request, exc: ConflictError) -> JSONResponse:
        return as_response(409, exc.code, exc.message, exc.details)

    @app.exception_handler(NotFoundError)
    async def not_found(_: Request, exc: NotFoundError) -> JSONResponse:
        return as_response(404, exc.code, exc.message, exc.details)

    @app.exception_handler(ValidationError)
    async def invalid(_: Request, exc: ValidationError) -> JSONResponse:
        return as_response(400, exc.code, exc.message, exc.details)

    @app.exception_handler(DomainError)
    async def domain(_: Request, exc: DomainError) -> JSONResponse:
        return as_response(422, exc.code, exc.message, exc.details)

    @app.exception_handler(RequestValidationError)
    async def malformed(_: Request, exc: RequestValidationError) -> JSONResponse:
        return as_response(400, "request.invalid", "malformed request", exc.errors())


def _register_routes(app: FastAPI) -> None:
    store: SessionStore = app.state.store

    def bank_or_404(version: str) -> BankManifest:
        bank = app.state.banks.get(version)
        if bank is None:
            raise NotFoundError("bank.not_found", f"no bank version {version!r}")
        return bank

    # -- banks -------------------------------------------------------------

    @app.get("/v1/banks")
    def list_banks() -> list[dict[str, Any]]:
        return [
            {
                "version": b.version,
                "completeness": b.completeness.value,
                "questions": len(b.questions),
                "metrics": len(b.metrics),
                "notes": b.notes,
            }
            for b in app.state.banks.values()
        ]

    @app.get("/v1/banks/{version}/questions")
    def bank_questions(
        version: str,
        org_type: str | None = Query(default=None),
        category: str | None = Query(default=None),
        esg_topic: str | None = Query(default=None),
        principle: list[str] | None = Query(default=None),
    ) -> dict[str, Any]:
        bank = bank_or_404(version)
        criteria = FilterCriteria.parse(
            org_type=org_type, system_category=category, esg_topic=esg_topic, principles=principle
        )
        questions = filter_questions(bank, criteria)
        return {"version": bank.version, "count": len(questions), "questions": [q.to_dict() for q in questions]}

    @app.get("/v1/banks/{version}/stats")
    def bank_stats(version: str) -> dict[str, Any]:
        return provenance_stats(bank_or_404(version)).to_dict()

    @app.get("/v1/banks/{version}/mapping")
    def bank_mapping(version: str) -> dict[str, Any]:
        bank = bank_or_404(version)
        from .bank import PRINCIPLE_IDS
        from .model import EsgTopic

        return {
            "principles": list(PRINCIPLE_IDS),
            "topics": [t.value for t in EsgTopic],
            "matrix": mapping_matrix(bank),
        }

    # -- sessions ----------------------------------------------------------

    @app.post("/v1/sessions", status_code=201)
    def create_session(body: dict = None, x_actor: str = Header(default="anonymous")) -> dict[str, Any]:
        body = body or {}
        company = body.get("company")
        if not isinstance(company, str) or not company.strip():
            raise _bad_request("session.company.required", "a company name is required")
        bank_version = body.get("bank_version", "complete-1.0")
        bank_or_404(bank_version)
        config = app.state.default_config
        if body.get("config") is not None:
            config = _merge_config(config, body["config"])
        profiles = seeds.seed_use_cases(config) if body.get("seed", True) else []
        session = store.create_session(
            company=company, bank_version=bank_version, config=config, use_case_profiles=profiles
        )
        return _session_payload(session)

    @app.get("/v1/sessions")
    def list_sessions() -> list[dict[str, Any]]:
        return [
            {"id": s.id, "company": s.company, "bank_version": s.bank_version,
             "status": s.status.value, "revision": s.revision}
            for s in store.list_sessions()
        ]

    @app.get("/v1/sessions/{session_id}")
    def get_session(session_id: str) -> dict[str, Any]:
        return _session_payload(store.get_session(session_id))

    @app.put("/v1/sessions/{session_id}")
    def put_session(
        session_id: str,
        body: dict,
        if_match: str | None = Header(default=None),
        x_actor: str = Header(default="anonymous"),
    ) -> dict[str, Any]:
        revision = _parse_revision(if_match)
        session = store.get_session(session_id)
        audit = []
        if "company" in body:
            session = session.replace(company=str(body["company"]))
        if "status" in body:
            try:
                session = session.replace(status=SessionStatus(body["status"]))
            except ValueError:
                raise DomainError("enum.unknown", f"unknown status {body['status']!r}",
                                  details={"allowed": [s.value for s in SessionStatus]})
        if "config" in body and body["config"] is not None:
            new_config = _merge_config(session.config, body["config"])
            from .scoring import rescore_profile

            audit.append(AuditDraft(x_actor, AuditAction.CONFIG_CHANGE,
                                    session.config.to_dict(), new_config.to_dict(), "session config updated"))
            session = session.replace(
                config=new_config,
                use_case_profiles=tuple(rescore_profile(p, new_config) for p in session.use_case_profiles),
            )
        saved = store.save_session(session, expected_revision=revision, audit=audit)
        return _session_payload(saved)

    # -- use cases ---------------------------------------------------------

    @app.post("/v1/sessions/{session_id}/use-cases/{use_case:path}/marks")
    def post_marks(
        session_id: str, use_case: str, body: dict, x_actor: str = Header(default="anonymous")
    ) -> dict[str, Any]:
        marks = body.get("marks", {})
        if not isinstance(marks, Mapping):
            raise _bad_request("marks.payload", "'marks' must map topic ids to impact marks")
        saved, derived = workflow.update_use_case(
            store, session_id, use_case, actor=x_actor,
            marks=marks,
            impact_scope=body.get("impact_scope"),
            regulatory_flag=body.get("regulatory_flag"),
        )
        profile = saved.profile_by_id(use_case)
        return {
            "revision": saved.revision,
            "use_case": profile.to_dict() | {"id": profile.id},
            "derived": _derived_payload(derived, profile),
        }

    @app.post("/v1/sessions/{session_id}/use-cases/{use_case:path}/override")
    def post_override(
        session_id: str, use_case: str, body: dict, x_actor: str = Header(default="anonymous")
    ) -> dict[str, Any]:
        saved, derived = workflow.apply_override(
            store, session_id, use_case,
            level=str(body.get("level", "")),
            note=str(body.get("note", "")),
            actor=x_actor,
        )
        profile = saved.profile_by_id(use_case)
        return {
            "revision": saved.revision,
            "use_case": profile.to_dict() | {"id": profile.id},
            "derived": _derived_payload(derived, profile),
        }

    # -- governance and deep dive ------------------------------------------

    @app.post("/v1/sessions/{session_id}/governance")
    def post_governance(
        session_id: str, body: dict, x_actor: str = Header(default="anonymous")
    ) -> dict[str, Any]:
        judgments = body.get("judgments")
        if not isinstance(judgments, list):
            raise _bad_request("judgments.payload", "'judgments' must be a list")
        saved, score, level = workflow.set_governance(store, session_id, judgments, actor=x_actor)
        return {
            "revision": saved.revision,
            "score": score,
            "level": level,
            "governance": saved.governance.to_dict(),
        }

    @app.post("/v1/sessions/{session_id}/deep-dive/answers")
    def post_answers(
        session_id: str, body: dict, x_actor: str = Header(default="anonymous")
    ) -> dict[str, Any]:
        answers = body.get("answers")
        if not isinstance(answers, Mapping):
            raise _bad_request("answers.payload", "'answers' must map sub-question ids to rubric scores")
        session = store.get_session(session_id)
        bank = bank_or_404(session.bank_version)
        saved, assessment = workflow.record_answers(store, session_id, bank, answers, actor=x_actor)
        return {
            "revision": saved.revision,
            "principle_results": {k: v.to_dict() for k, v in sorted(assessment.principle_results.items())},
            "answered": len(assessment.answers),
        }

    @app.post("/v1/sessions/{session_id}/deep-dive/override")
    def post_final_override(
        session_id: str, body: dict, x_actor: str = Header(default="anonymous")
    ) -> dict[str, Any]:
        saved, result = workflow.override_final_level(
            store, session_id,
            principle=str(body.get("principle", "")),
            level=str(body.get("level", "")),
            note=str(body.get("note", "")),
            actor=x_actor,
        )
        return {
            "revision": saved.revision,
            "principle": str(body.get("principle", "")).upper(),
            "result": result.to_dict(),
        }

    # -- reports, audit, config ---------------------------------------------

    @app.get("/v1/sessions/{session_id}/report")
    def get_report(
        session_id: str,
        format: str = Query(default="json"),
        section: str | None = Query(default=None),
        config: str | None = Query(default=None, description="JSON config overrides for a what-if preview."),
    ):
        session = store.get_session(session_id)
        if config:
            try:
                overrides = json.loads(config)
            except json.JSONDecodeError:
                raise _bad_request("config.payload", "'config' must be URL-encoded JSON")
            preview = _merge_config(session.config, overrides)
            from .scoring import rescore_profile

            session = session.replace(
                config=preview,
                use_case_profiles=tuple(rescore_profile(p, preview) for p in session.use_case_profiles),
            )
        bank = app.state.banks.get(session.bank_version)
        text = reporting.render(session, format, section=section, bank=bank)
        if format == "json":
            return JSONResponse(content=json.loads(text))
        media = "text/csv" if format == "csv" else "text/markdown"
        return PlainTextResponse(content=text, media_type=media)

    @app.get("/v1/sessions/{session_id}/audit")
    def get_audit(session_id: str) -> list[dict[str, Any]]:
        return [entry.to_dict() for entry in store.audit_log(session_id)]

    @app.get("/v1/config")
    def get_config() -> dict[str, Any]:
        return app.state.default_config.to_dict()

    @app.put("/v1/config")
    def put_config(body: dict, x_actor: str = Header(default="anonymous")) -> dict[str, Any]:
        new_config = _merge_config(app.state.default_config, body)
        store.record_config_change(
            AuditDraft(x_actor, AuditAction.CONFIG_CHANGE,
                       app.state.default_config.to_dict(), new_config.to_dict(), "service config updated")
        )
        app.state.default_config = new_config
        return new_config.to_dict()


def _bad_request(code: str, message: str) -> ValidationError:
    from .errors import Violation

    return ValidationError([Violation(code, "", message)], code=code)


def _parse_revision(if_match: str | None) -> int:
    if if_match is None:
        raise _bad_request("revision.required", "PUT requires the expected revision in If-Match")
    try:
        return int(if_match.strip().strip('"'))
    except ValueError:
        raise _bad_request("revision.invalid", f"cannot parse revision from If-Match {if_match!r}")


def _merge_config(base: ScoringConfig, overrides: Mapping[str, Any]) -> ScoringConfig:
    """Overlay partial config values (including nested encoding tables) on an
    existing config."""
    if not isinstance(overrides, Mapping):
        raise _bad_request("config.payload", "config overrides must be an object")
    merged = base.to_dict()
    for key, value in overrides.items():
        if key in ("regulatory_encoding", "impact_encoding", "scope_encoding") and isinstance(value, Mapping):
            merged[key] = {**merged[key], **value}
        else:
            merged[key] = value
    return ScoringConfig.from_dict(merged)


def _session_payload(session) -> dict[str, Any]:
    doc = session.to_dict()
    derived = []
    for profile_doc, profile in zip(doc["use_case_profiles"], session.use_case_profiles):
        profile_doc["id"] = profile.id
        score = score_profile(profile, session.config)
        derived.append({"use_case": profile.id, **_derived_digest(score)})
    doc["derived"] = {"use_cases": derived}
    return doc


def _derived_payload(score, profile) -> dict[str, Any]:
    return {
        **_derived_digest(score),
        "materiality_default": profile.materiality_default.value,
        "materiality_adjusted": profile.materiality_adjusted.value if profile.materiality_adjusted else None,
        "materiality_effective": profile.materiality_effective.value,
    }


def _derived_digest(score) -> dict[str, Any]:
    return {
        "impacted_topics": score.impacted_topics,
        "impact_level": score.impact_level.value,
        "risk_score": score.breakdown.risk_score,
        "impact_score": score.breakdown.impact_score,
        "scope_score": score.breakdown.scope_score,
        "total": score.breakdown.total,
        "materiality_level": score.breakdown.level.value,
    }
