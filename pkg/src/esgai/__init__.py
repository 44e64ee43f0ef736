"""Assessment workbench for responsible-AI investing: use-case materiality
analysis, a ten-indicator governance scorer, and a filterable deep-dive
rubric engine with audited overrides."""

from .errors import ConflictError, DomainError, NotFoundError, ValidationError, Violation
from .model import (
    DEFAULT_CONFIG,
    GOVERNANCE_INDICATORS,
    NON_GOVERNANCE_TOPICS,
    DeepDiveAssessment,
    EsgTopic,
    FinalLevel,
    GovernanceAssessment,
    GovernanceLevel,
    ImpactLevel,
    ImpactMark,
    ImpactScope,
    IndicatorJudgment,
    MaterialityLevel,
    PrincipleResult,
    RegulatoryFlag,
    RubricBand,
    RubricScore,
    ScoringConfig,
    SessionStatus,
    UseCaseProfile,
    validate,
)
from .scoring import (
    ClassificationMetrics,
    MaterialityBreakdown,
    ProfileScore,
    classification_metrics,
    governance_score,
    impact_level,
    materiality,
    override_materiality,
    principle_result,
    rubric_band,
    score_profile,
)
from .bank import (
    BankManifest,
    FilterCriteria,
    GuideMetric,
    KeyQuestion,
    PRINCIPLES,
    Principle,
    SubQuestion,
    filter_questions,
    load_bank,
    mapping_matrix,
    provenance_stats,
)
from .store import AuditEntry, Session, SessionStore

__version__ = "0.1.0"

__all__ = [
    "AuditEntry",
    "BankManifest",
    "ClassificationMetrics",
    "ConflictError",
    "DEFAULT_CONFIG",
    "DeepDiveAssessment",
    "DomainError",
    "EsgTopic",
    "FilterCriteria",
    "FinalLevel",
    "GOVERNANCE_INDICATORS",
    "GovernanceAssessment",
    "GovernanceLevel",
    "GuideMetric",
    "ImpactLevel",
    "ImpactMark",
    "ImpactScope",
    "IndicatorJudgment",
    "KeyQuestion",
    "MaterialityBreakdown",
    "MaterialityLevel",
    "NON_GOVERNANCE_TOPICS",
    "NotFoundError",
    "PRINCIPLES",
    "Principle",
    "PrincipleResult",
    "ProfileScore",
    "RegulatoryFlag",
    "RubricBand",
    "RubricScore",
    "ScoringConfig",
    "Session",
    "SessionStatus",
    "SessionStore",
    "SubQuestion",
    "UseCaseProfile",
    "ValidationError",
    "Violation",
    "classification_metrics",
    "filter_questions",
    "governance_score",
    "impact_level",
    "load_bank",
    "mapping_matrix",
    "materiality",
    "override_materiality",
    "principle_result",
    "provenance_stats",
    "rubric_band",
    "score_profile",
    "validate",
]
