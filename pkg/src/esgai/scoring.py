"""Deterministic scoring rules.

Every function here is pure: no I/O, no clock, no state. The classifiers
partition their whole input range (boundary semantics follow the inclusive
lower bounds of the level tables), so every finite score maps to exactly one
level.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Mapping, Sequence

from .errors import DomainError
from .model import (
    NON_GOVERNANCE_TOPICS,
    AuditAction,
    EsgTopic,
    FinalLevel,
    GovernanceLevel,
    ImpactLevel,
    ImpactMark,
    ImpactScope,
    MaterialityLevel,
    RegulatoryFlag,
    RubricBand,
    RubricScore,
    ScoringConfig,
    UseCaseProfile,
)


@dataclass(frozen=True)
class MaterialityBreakdown:
    """The three encoded inputs, their weighted total, and the level."""

    risk_score: float
    impact_score: float
    scope_score: float
    total: float
    level: MaterialityLevel

    def to_dict(self) -> dict[str, Any]:
        return {
            "risk_score": self.risk_score,
            "impact_score": self.impact_score,
            "scope_score": self.scope_score,
            "total": self.total,
            "level": self.level.value,
        }


@dataclass(frozen=True)
class AuditDraft:
    """An audit entry minus id and timestamp, which the store assigns."""

    actor: str
    action: AuditAction
    before: Any
    after: Any
    note: str


# ---------------------------------------------------------------------------
# Use-case materiality
# ---------------------------------------------------------------------------

def impact_level(marks: Mapping[EsgTopic, ImpactMark]) -> tuple[int, ImpactLevel]:
    """Count the impacted topics and classify.

    A topic counts as impacted when marked positive, negative or both.
    Requires a mark for each of the nine non-governance topics and nothing
    else.
    """
    given = set(marks)
    expected = set(NON_GOVERNANCE_TOPICS)
    if given != expected:
        missing = sorted(t.value for t in expected - given)
        extra = sorted(t.value for t in given - expected)
        raise DomainError(
            "marks.topic_set",
            "impact marks must cover exactly the nine non-governance topics",
            details={"missing": missing, "unexpected": extra},
        )
    n = sum(1 for mark in marks.values() if mark.impacted)
    return n, impact_level_for(n)


def impact_level_for(n: int) -> ImpactLevel:
    if n >= 8:
        return ImpactLevel.HIGH
    if n > 3:
        return ImpactLevel.MEDIUM
    return ImpactLevel.LOW


def materiality(
    flag: RegulatoryFlag,
    impact: ImpactLevel,
    scope: ImpactScope,
    cfg: ScoringConfig,
) -> MaterialityBreakdown:
    """Combine the encoded regulatory, impact and scope scores into the
    weighted total and classify it against the configured thresholds."""
    r = cfg.regulatory_encoding[flag]
    i = cfg.impact_encoding[impact]
    s = cfg.scope_encoding[scope]
    w1, w2, w3 = cfg.use_case_weights
    total = w1 * r + w2 * i + w3 * s
    return MaterialityBreakdown(
        risk_score=r,
        impact_score=i,
        scope_score=s,
        total=total,
        level=materiality_level_for(total, cfg),
    )


def materiality_level_for(total: float, cfg: ScoringConfig) -> MaterialityLevel:
    if total >= cfg.t_high:
        return MaterialityLevel.HIGH
    if total >= cfg.t_low:
        return MaterialityLevel.MEDIUM
    return MaterialityLevel.LOW


@dataclass(frozen=True)
class ProfileScore:
    """Everything derived for one use case under a given config."""

    impacted_topics: int
    impact_level: ImpactLevel
    breakdown: MaterialityBreakdown

    def to_dict(self) -> dict[str, Any]:
        return {
            "impacted_topics": self.impacted_topics,
            "impact_level": self.impact_level.value,
            "breakdown": self.breakdown.to_dict(),
        }


def score_profile(profile: UseCaseProfile, cfg: ScoringConfig) -> ProfileScore:
    n, level = impact_level(profile.impact_marks)
    breakdown = materiality(profile.regulatory_flag, level, profile.impact_scope, cfg)
    return ProfileScore(impacted_topics=n, impact_level=level, breakdown=breakdown)


def rescore_profile(profile: UseCaseProfile, cfg: ScoringConfig, **changes: Any) -> UseCaseProfile:
    """Return a copy with the given field changes and a freshly computed
    default materiality. Adjusted levels and notes survive untouched."""
    fields = profile.to_dict()
    for key, value in changes.items():
        if key not in ("impact_marks", "impact_scope", "regulatory_flag", "description"):
            raise DomainError("profile.field", f"cannot change field {key!r} through rescoring")
        fields[key] = value
    marks = changes.get("impact_marks", profile.impact_marks)
    flag = changes.get("regulatory_flag", profile.regulatory_flag)
    scope = changes.get("impact_scope", profile.impact_scope)
    n, level = impact_level(marks)
    breakdown = materiality(flag, level, scope, cfg)
    return UseCaseProfile(
        sector=profile.sector,
        name=profile.name,
        description=changes.get("description", profile.description),
        regulatory_flag=flag,
        impact_marks=dict(marks),
        impact_scope=scope,
        materiality_default=breakdown.level,
        materiality_adjusted=profile.materiality_adjusted,
        override_note=profile.override_note,
    )


def override_materiality(
    profile: UseCaseProfile,
    new_level: MaterialityLevel,
    note: str,
    actor: str,
) -> tuple[UseCaseProfile, AuditDraft]:
    """Record a human override of the default materiality level.

    The computed default is preserved unchanged; the override lands in
    ``materiality_adjusted`` and the returned draft carries everything the
    audit trail needs except the store-assigned id and timestamp. An override
    equal to the default is accepted and still audited.
    """
    if not note.strip():
        raise DomainError("override.note.required", "an override requires a non-empty note")
    before = profile.materiality_effective
    updated = UseCaseProfile(
        sector=profile.sector,
        name=profile.name,
        description=profile.description,
        regulatory_flag=profile.regulatory_flag,
        impact_marks=dict(profile.impact_marks),
        impact_scope=profile.impact_scope,
        materiality_default=profile.materiality_default,
        materiality_adjusted=new_level,
        override_note=note,
    )
    draft = AuditDraft(
        actor=actor,
        action=AuditAction.MATERIALITY_OVERRIDE,
        before={"use_case": profile.id, "level": before.value},
        after={"use_case": profile.id, "level": new_level.value},
        note=note,
    )
    return updated, draft


# ---------------------------------------------------------------------------
# Governance indicators
# ---------------------------------------------------------------------------

def governance_score(judgments: Sequence[bool], cfg: ScoringConfig) -> tuple[float, GovernanceLevel]:
    """Weighted sum of the ten binary indicator judgments plus its level."""
    if len(judgments) != 10:
        raise DomainError("judgments.count", f"exactly 10 judgments required, got {len(judgments)}")
    total = sum(w for met, w in zip(judgments, cfg.governance_weights) if met)
    return total, governance_level_for(total)


def governance_level_for(total: float) -> GovernanceLevel:
    # The medium band is open at 8 rather than closed at 7 so that non-unit
    # weights cannot fall into a gap; identical on integer sums.
    if total >= 8:
        return GovernanceLevel.HIGH
    if total > 3:
        return GovernanceLevel.MEDIUM
    return GovernanceLevel.LOW


# ---------------------------------------------------------------------------
# Deep-dive rubric
# ---------------------------------------------------------------------------

def rubric_band(value: int) -> RubricBand:
    """Band for a 0-5 disclosure score: 0 not-disclosed, 1 minimal,
    2-4 moderate, 5 comprehensive."""
    if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value <= 5:
        raise DomainError("rubric.value.range", f"score must be an integer in 0..5, got {value!r}")
    return RubricScore(value).band


def principle_result(scores: Sequence[int]) -> tuple[float, FinalLevel]:
    """Average the answered sub-question scores for a principle and suggest
    a level. Refuses to score an unanswered principle: an empty answer set
    is missing evidence, not a zero."""
    if not scores:
        raise DomainError("principle.no_answers", "cannot score a principle with no answered sub-questions")
    for value in scores:
        rubric_band(value)
    average = sum(scores) / len(scores)
    return average, final_level_for(average)


def final_level_for(average: float) -> FinalLevel:
    if average >= 4.5:
        return FinalLevel.STRONG
    if average >= 3:
        return FinalLevel.MODERATE
    if average >= 1.5:
        return FinalLevel.WEAK
    return FinalLevel.UNACCEPTABLE


# ---------------------------------------------------------------------------
# Suggested performance metrics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationMetrics:
    """Accuracy, precision, recall and f-score from a confusion matrix.

    A component whose denominator is zero is reported as absent (``None``),
    never as zero: an undefined ratio carries no information.
    """

    accuracy: float | None
    precision: float | None
    recall: float | None
    fscore: float | None

    def to_dict(self) -> dict[str, float | None]:
        return {
            "accuracy": self.accuracy,
            "precision": self.precision,
            "recall": self.recall,
            "fscore": self.fscore,
        }


def classification_metrics(tp: int, tn: int, fp: int, fn: int) -> ClassificationMetrics:
    for name, value in (("tp", tp), ("tn", tn), ("fp", fp), ("fn", fn)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise DomainError("metrics.count.negative", f"{name} must be a non-negative integer, got {value!r}")
    total = tp + tn + fp + fn
    accuracy = (tp + tn) / total if total > 0 else None
    precision = tp / (tp + fp) if tp + fp > 0 else None
    recall = tp / (tp + fn) if tp + fn > 0 else None
    fscore = None
    if precision is not None and recall is not None and precision + recall > 0:
        fscore = 2 * (precision * recall) / (precision + recall)
    return ClassificationMetrics(accuracy=accuracy, precision=precision, recall=recall, fscore=fscore)
