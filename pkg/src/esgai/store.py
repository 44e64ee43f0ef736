"""File-backed persistence for assessment sessions and their audit trails.

Layout under the store root (documented in ``docs/storage.md``)::

    sessions/<session-id>.json   one canonical JSON document per session
    audit/<session-id>.log       append-only journal, one JSON object per line
    audit/_config.log            journal for service-level config changes

Writes are serialized per store through optimistic revision checks: a save
succeeds only when the caller's expected revision matches the stored one.
Audit entries are written once and never mutated or deleted; their
timestamps come from the store, not the caller, so the trail stays
trustworthy.
"""

from __future__ import annotations

import dataclasses
import json
import os
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from .errors import ConflictError, DomainError, NotFoundError, ValidationError, Violation
from .model import (
    AuditAction,
    DeepDiveAssessment,
    GovernanceAssessment,
    ScoringConfig,
    SessionStatus,
    UseCaseProfile,
)
from .scoring import AuditDraft


@dataclass(frozen=True)
class AuditEntry:
    id: str
    actor: str
    timestamp: str
    action: AuditAction
    before: Any
    after: Any
    note: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "actor": self.actor,
            "timestamp": self.timestamp,
            "action": self.action.value,
            "before": self.before,
            "after": self.after,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, payload: Mapping[str, Any]) -> "AuditEntry":
        return cls(
            id=payload["id"],
            actor=payload["actor"],
            timestamp=payload["timestamp"],
            action=AuditAction(payload["action"]),
            before=payload.get("before"),
            after=payload.get("after"),
            note=payload.get("note", ""),
        )


@dataclass(frozen=True)
class Session:
    """One assessment engagement: a company against a bank version, with the
    scoring config frozen at creation."""

    id: str
    company: str
    bank_version: str
    config: ScoringConfig
    status: SessionStatus
    revision: int
    created_at: str
    updated_at: str
    use_case_profiles: tuple[UseCaseProfile, ...] = ()
    governance: GovernanceAssessment | None = None
    deep_dive: DeepDiveAssessment | None = None

    def replace(self, **changes: Any) -> "Session":
        return dataclasses.replace(self, **changes)

    def profile_by_id(self, use_case: str) -> UseCaseProfile:
        for p in self.use_case_profiles:
            if p.id == use_case:
                return p
        raise NotFoundError("store.not_found", f"no use case {use_case!r} in session {self.id}")

    def with_profile(self, updated: UseCaseProfile) -> "Session":
        profiles = tuple(updated if p.id == updated.id else p for p in self.use_case_profiles)
        return self.replace(use_case_profiles=profiles)

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "company": self.company,
            "bank_version": self.bank_version,
            "config": self.config.to_dict(),
            "status": self.status.value,
            "revision": self.revision,
            "created_at": self.created_at,
            "updated_at": self.updated_at,
            "use_case_profiles": [p.to_dict() for p in self.use_case_profiles],
            "governance": self.governance.to_dict() if self.governance else None,
            "deep_dive": self.deep_dive.to_dict() if self.deep_dive else None,
        }

    @classmethod
    def from_dict(cls, payload: Mapping[str, Any]) -> "Session":
        try:
            return cls(
                id=payload["id"],
                company=payload["company"],
                bank_version=payload["bank_version"],
                config=ScoringConfig.from_dict(payload["config"]),
                status=SessionStatus(payload["status"]),
                revision=int(payload["revision"]),
                created_at=payload["created_at"],
                updated_at=payload["updated_at"],
                use_case_profiles=tuple(UseCaseProfile.from_dict(p) for p in payload.get("use_case_profiles", [])),
                governance=(
                    GovernanceAssessment.from_dict(payload["governance"]) if payload.get("governance") else None
                ),
                deep_dive=(
                    DeepDiveAssessment.from_dict(payload["deep_dive"]) if payload.get("deep_dive") else None
                ),
            )
        except (KeyError, ValueError) as exc:
            raise ValidationError([Violation("session.payload", "", f"malformed session document: {exc}")])


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _session_text(session: Session) -> str:
    return json.dumps(session.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


class SessionStore:
    """Directory-backed store. Concurrent readers need no coordination;
    writers go through a process-wide lock plus the revision check."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        (self.root / "sessions").mkdir(parents=True, exist_ok=True)
        (self.root / "audit").mkdir(parents=True, exist_ok=True)
        self._write_lock = threading.Lock()

    # -- paths ------------------------------------------------------------

    def _session_path(self, session_id: str) -> Path:
        if not session_id or "/" in session_id or session_id.startswith("."):
            raise DomainError("store.bad_id", f"invalid session id {session_id!r}")
        return self.root / "sessions" / f"{session_id}.json"

    def _audit_path(self, session_id: str) -> Path:
        return self.root / "audit" / f"{session_id}.log"

    # -- sessions ----------------------------------------------------------

    def create_session(
        self,
        company: str,
        bank_version: str,
        config: ScoringConfig,
        use_case_profiles: Sequence[UseCaseProfile] = (),
        session_id: str | None = None,
    ) -> Session:
        session = Session(
            id=session_id or f"s-{uuid.uuid4().hex[:12]}",
            company=company,
            bank_version=bank_version,
            config=config,
            status=SessionStatus.DRAFT,
            revision=1,
            created_at=_utc_now(),
            updated_at=_utc_now(),
            use_case_profiles=tuple(use_case_profiles),
        )
        with self._write_lock:
            path = self._session_path(session.id)
            if path.exists():
                raise ConflictError("store.conflict", f"session {session.id!r} already exists")
            self._write_atomic(path, _session_text(session))
        return session

    def get_session(self, session_id: str) -> Session:
        path = self._session_path(session_id)
        if not path.exists():
            raise NotFoundError("store.not_found", f"no session {session_id!r}")
        return Session.from_dict(json.loads(path.read_text(encoding="utf-8")))

    def list_sessions(self) -> list[Session]:
        sessions = []
        for path in sorted((self.root / "sessions").glob("*.json")):
            sessions.append(Session.from_dict(json.loads(path.read_text(encoding="utf-8"))))
        return sessions

    def save_session(
        self,
        session: Session,
        expected_revision: int,
        audit: Sequence[AuditDraft] = (),
    ) -> Session:
        """Persist an updated session if nobody else saved first.

        On success the stored revision becomes ``expected_revision + 1`` and
        every supplied audit draft is journalled. Finalized sessions reject
        all further edits.
        """
        with self._write_lock:
            stored = self.get_session(session.id)
            if stored.status is SessionStatus.FINALIZED:
                raise ConflictError("store.finalized", f"session {session.id!r} is finalized and rejects edits")
            if stored.revision != expected_revision:
                raise ConflictError(
                    "store.conflict",
                    f"session {session.id!r} is at revision {stored.revision}, caller expected {expected_revision}",
                    expected=expected_revision,
                    actual=stored.revision,
                )
            updated = session.replace(revision=expected_revision + 1, updated_at=_utc_now())
            self._write_atomic(self._session_path(session.id), _session_text(updated))
            for draft in audit:
                self._append_audit(self._audit_path(session.id), draft)
        return updated

    def import_session(self, session: Session) -> Session:
        """Load an externally produced session document, keeping its id."""
        with self._write_lock:
            path = self._session_path(session.id)
            if path.exists():
                raise ConflictError("store.conflict", f"session {session.id!r} already exists")
            self._write_atomic(path, _session_text(session))
        return session

    # -- audit -------------------------------------------------------------

    def audit_log(self, session_id: str) -> list[AuditEntry]:
        if not self._session_path(session_id).exists():
            raise NotFoundError("store.not_found", f"no session {session_id!r}")
        return self._read_audit(self._audit_path(session_id))

    def record_config_change(self, draft: AuditDraft) -> AuditEntry:
        """Journal a service-level config change (not tied to a session)."""
        with self._write_lock:
            return self._append_audit(self.root / "audit" / "_config.log", draft)

    def config_audit_log(self) -> list[AuditEntry]:
        return self._read_audit(self.root / "audit" / "_config.log")

    def _read_audit(self, path: Path) -> list[AuditEntry]:
        if not path.exists():
            return []
        entries = []
        with path.open("r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    entries.append(AuditEntry.from_dict(json.loads(line)))
        return entries

    def _append_audit(self, path: Path, draft: AuditDraft) -> AuditEntry:
        sequence = 1
        if path.exists():
            with path.open("r", encoding="utf-8") as fh:
                sequence = sum(1 for line in fh if line.strip()) + 1
        entry = AuditEntry(
            id=f"a-{sequence:06d}",
            actor=draft.actor,
            timestamp=_utc_now(),
            action=draft.action,
            before=draft.before,
            after=draft.after,
            note=draft.note,
        )
        with path.open("a", encoding="utf-8") as fh:
            fh.write(json.dumps(entry.to_dict(), sort_keys=True, ensure_ascii=False) + "\n")
        return entry

    @staticmethod
    def _write_atomic(path: Path, text: str) -> None:
        tmp = path.with_suffix(".tmp")
        tmp.write_text(text, encoding="utf-8")
        os.replace(tmp, path)
