"""Session mutations: the one place where scoring, the bank and the store
meet.

Every mutation recomputes the derived values server-side, bumps the session
revision through the store's optimistic check, and journals exactly one
audit entry. CLI and API are both thin shells over these functions.
"""

from __future__ import annotations

from typing import Any, Mapping, Sequence

from .bank import BankManifest, PRINCIPLE_ORDER
from .errors import DomainError
from .model import (
    AuditAction,
    DeepDiveAssessment,
    FinalLevel,
    GovernanceAssessment,
    ImpactMark,
    ImpactScope,
    IndicatorJudgment,
    MaterialityLevel,
    PrincipleResult,
    RegulatoryFlag,
    RubricScore,
    ScoringConfig,
    EsgTopic,
    GOVERNANCE_INDICATOR_IDS,
)
from .scoring import (
    AuditDraft,
    ProfileScore,
    governance_score,
    override_materiality,
    principle_result,
    rescore_profile,
    score_profile,
)
from .store import Session, SessionStore


def update_use_case(
    store: SessionStore,
    session_id: str,
    use_case: str,
    actor: str,
    marks: Mapping[str, str] | None = None,
    impact_scope: str | None = None,
    regulatory_flag: str | None = None,
) -> tuple[Session, ProfileScore]:
    """Merge mark/scope/flag changes into one use case and rescore it."""
    session = store.get_session(session_id)
    profile = session.profile_by_id(use_case)
    before = score_profile(profile, session.config)

    changes: dict[str, Any] = {}
    if marks:
        merged = dict(profile.impact_marks)
        for raw_topic, raw_mark in marks.items():
            topic = EsgTopic.parse(raw_topic)
            try:
                merged[topic] = ImpactMark(raw_mark)
            except ValueError:
                raise DomainError("enum.unknown", f"unknown impact mark {raw_mark!r}",
                                  details={"allowed": [m.value for m in ImpactMark]})
        changes["impact_marks"] = merged
    if impact_scope is not None:
        try:
            changes["impact_scope"] = ImpactScope(impact_scope)
        except ValueError:
            raise DomainError("enum.unknown", f"unknown impact scope {impact_scope!r}",
                              details={"allowed": [s.value for s in ImpactScope]})
    if regulatory_flag is not None:
        try:
            changes["regulatory_flag"] = RegulatoryFlag(regulatory_flag)
        except ValueError:
            raise DomainError("enum.unknown", f"unknown regulatory flag {regulatory_flag!r}",
                              details={"allowed": [f.value for f in RegulatoryFlag]})

    updated_profile = rescore_profile(profile, session.config, **changes)
    after = score_profile(updated_profile, session.config)
    draft = AuditDraft(
        actor=actor,
        action=AuditAction.SCORE_EDIT,
        before={"use_case": use_case, **_score_digest(before)},
        after={"use_case": use_case, **_score_digest(after)},
        note="use-case inputs edited",
    )
    saved = store.save_session(
        session.with_profile(updated_profile), expected_revision=session.revision, audit=[draft]
    )
    return saved, after


def apply_override(
    store: SessionStore,
    session_id: str,
    use_case: str,
    level: str,
    note: str,
    actor: str,
) -> tuple[Session, ProfileScore]:
    session = store.get_session(session_id)
    profile = session.profile_by_id(use_case)
    try:
        new_level = MaterialityLevel(level)
    except ValueError:
        raise DomainError("enum.unknown", f"unknown materiality level {level!r}",
                          details={"allowed": [l.value for l in MaterialityLevel]})
    updated_profile, draft = override_materiality(profile, new_level, note, actor)
    saved = store.save_session(
        session.with_profile(updated_profile), expected_revision=session.revision, audit=[draft]
    )
    return saved, score_profile(updated_profile, saved.config)


def set_governance(
    store: SessionStore,
    session_id: str,
    judgments: Sequence[Mapping[str, Any]],
    actor: str,
) -> tuple[Session, float, str]:
    """Replace the session's ten indicator judgments and rescore."""
    session = store.get_session(session_id)
    parsed = []
    for j in judgments:
        indicator = j.get("indicator")
        met = j.get("met")
        if not isinstance(indicator, str) or not isinstance(met, bool):
            raise DomainError("judgments.payload", "each judgment needs an indicator id and a boolean 'met'")
        parsed.append(IndicatorJudgment(indicator=indicator, met=met, evidence=str(j.get("evidence", ""))))
    order = {ind: i for i, ind in enumerate(GOVERNANCE_INDICATOR_IDS)}
    unknown = [j.indicator for j in parsed if j.indicator not in order]
    if unknown:
        raise DomainError("judgments.unknown_indicator", f"unknown indicator ids: {sorted(unknown)}")
    parsed.sort(key=lambda j: order[j.indicator])
    score, level = governance_score([j.met for j in parsed], session.config)
    assessment = GovernanceAssessment(
        company=session.company, judgments=tuple(parsed), score=score, level=level
    )
    before = None
    if session.governance is not None:
        before = {"score": session.governance.score, "level": session.governance.level.value}
    draft = AuditDraft(
        actor=actor,
        action=AuditAction.SCORE_EDIT,
        before=before,
        after={"score": score, "level": level.value},
        note="governance judgments recorded",
    )
    saved = store.save_session(
        session.replace(governance=assessment), expected_revision=session.revision, audit=[draft]
    )
    return saved, score, level.value


def record_answers(
    store: SessionStore,
    session_id: str,
    bank: BankManifest,
    answers: Mapping[str, Mapping[str, Any]],
    actor: str,
) -> tuple[Session, DeepDiveAssessment]:
    """Merge rubric answers into the deep dive and recompute every answered
    principle. Existing final-level overrides survive; their suggested level
    tracks the new average."""
    session = store.get_session(session_id)
    if bank.version != session.bank_version:
        raise DomainError(
            "bank.version.mismatch",
            f"session uses bank {session.bank_version!r}, answers scored against {bank.version!r}",
        )
    known = {q.id for q in bank.questions}
    merged: dict[str, RubricScore] = dict(session.deep_dive.answers) if session.deep_dive else {}
    for qid, payload in answers.items():
        if qid not in known:
            raise DomainError("answers.unknown_sub_question", f"sub-question {qid!r} is not in bank {bank.version!r}")
        value = payload.get("value")
        if not isinstance(value, int) or isinstance(value, bool):
            raise DomainError("rubric.value.range", f"answer for {qid!r} needs an integer value in 0..5")
        merged[qid] = RubricScore(value=value, evidence=str(payload.get("evidence", "")))

    previous = dict(session.deep_dive.principle_results) if session.deep_dive else {}
    results = _principle_results(bank, merged, previous)
    assessment = DeepDiveAssessment(
        company=session.company,
        bank_version=session.bank_version,
        answers=merged,
        principle_results=results,
    )
    draft = AuditDraft(
        actor=actor,
        action=AuditAction.SCORE_EDIT,
        before=_deep_dive_digest(session.deep_dive),
        after=_deep_dive_digest(assessment),
        note="deep-dive answers recorded",
    )
    saved = store.save_session(
        session.replace(deep_dive=assessment), expected_revision=session.revision, audit=[draft]
    )
    return saved, assessment


def override_final_level(
    store: SessionStore,
    session_id: str,
    principle: str,
    level: str,
    note: str,
    actor: str,
) -> tuple[Session, PrincipleResult]:
    session = store.get_session(session_id)
    principle = principle.upper()
    if principle not in PRINCIPLE_ORDER:
        raise DomainError("filter.unknown_value", f"unknown principle {principle!r}")
    if session.deep_dive is None or principle not in session.deep_dive.principle_results:
        raise DomainError("principle.no_answers", f"principle {principle!r} has no answered sub-questions to override")
    if not note.strip():
        raise DomainError("override.note.required", "an override requires a non-empty note")
    try:
        new_level = FinalLevel(level)
    except ValueError:
        raise DomainError("enum.unknown", f"unknown final level {level!r}",
                          details={"allowed": [l.value for l in FinalLevel]})
    current = session.deep_dive.principle_results[principle]
    updated = PrincipleResult(
        average=current.average,
        suggested_level=current.suggested_level,
        final_level=new_level,
        override_note=note,
    )
    results = dict(session.deep_dive.principle_results)
    results[principle] = updated
    assessment = DeepDiveAssessment(
        company=session.deep_dive.company,
        bank_version=session.deep_dive.bank_version,
        answers=session.deep_dive.answers,
        principle_results=results,
    )
    draft = AuditDraft(
        actor=actor,
        action=AuditAction.FINAL_LEVEL_OVERRIDE,
        before={"principle": principle, "level": current.final_level.value},
        after={"principle": principle, "level": new_level.value},
        note=note,
    )
    saved = store.save_session(
        session.replace(deep_dive=assessment), expected_revision=session.revision, audit=[draft]
    )
    return saved, updated


def update_session_config(
    store: SessionStore,
    session_id: str,
    config: ScoringConfig,
    actor: str,
    note: str = "session config updated",
) -> Session:
    """Swap the session's config snapshot and rescore every use case default
    under the new thresholds. Audited as a config change."""
    session = store.get_session(session_id)
    rescored = tuple(rescore_profile(p, config) for p in session.use_case_profiles)
    draft = AuditDraft(
        actor=actor,
        action=AuditAction.CONFIG_CHANGE,
        before=session.config.to_dict(),
        after=config.to_dict(),
        note=note,
    )
    return store.save_session(
        session.replace(config=config, use_case_profiles=rescored),
        expected_revision=session.revision,
        audit=[draft],
    )


def _principle_results(
    bank: BankManifest,
    answers: Mapping[str, RubricScore],
    previous: Mapping[str, PrincipleResult],
) -> dict[str, PrincipleResult]:
    by_principle: dict[str, list[int]] = {}
    for qid, score in answers.items():
        principle = bank.question_by_id(qid).principle
        by_principle.setdefault(principle, []).append(score.value)
    results: dict[str, PrincipleResult] = {}
    for principle, values in by_principle.items():
        average, suggested = principle_result(values)
        prior = previous.get(principle)
        if prior is not None and prior.final_level is not prior.suggested_level:
            # keep the analyst's standing override against the fresh average
            results[principle] = PrincipleResult(
                average=average,
                suggested_level=suggested,
                final_level=prior.final_level,
                override_note=prior.override_note,
            )
        else:
            results[principle] = PrincipleResult(
                average=average, suggested_level=suggested, final_level=suggested
            )
    return results


def _score_digest(score: ProfileScore) -> dict[str, Any]:
    return {
        "impacted_topics": score.impacted_topics,
        "impact_level": score.impact_level.value,
        "total": score.breakdown.total,
        "level": score.breakdown.level.value,
    }


def _deep_dive_digest(assessment: DeepDiveAssessment | None) -> dict[str, Any] | None:
    if assessment is None:
        return None
    return {
        "answered": len(assessment.answers),
        "principles": {
            pid: {"average": r.average, "final_level": r.final_level.value}
            for pid, r in sorted(assessment.principle_results.items())
        },
    }
