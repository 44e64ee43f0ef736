"""Domain types for the assessment workbench.

Pure data: enums for the closed vocabularies, frozen dataclasses for the
records, and a JSON codec with stable field names. Constructors enforce the
record invariants; :func:`validate` reports every breach of an encoded
payload without raising. The canonical field names and enum spellings are
documented in ``docs/types.schema.json``.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Iterable, Mapping

from .errors import ValidationError, Violation


def canonical_json(value: Any) -> str:
    """Stable JSON encoding: sorted keys, no extra whitespace."""
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def sha256_of(value: Any) -> str:
    return hashlib.sha256(canonical_json(value).encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# Closed vocabularies
# ---------------------------------------------------------------------------

class RegulatoryFlag(str, Enum):
    """Default regulatory risk tier of an AI use case."""

    UNACCEPTABLE = "unacceptable"
    HIGH = "high"
    MEDIUM = "medium"
    LOW = "low"
    NOT_DETERMINED = "not-determined"


class ImpactMark(str, Enum):
    """Per-topic judgment: opportunity, threat, both, or not applicable."""

    POSITIVE = "positive"
    NEGATIVE = "negative"
    BOTH = "both"
    NOT_APPLICABLE = "not-applicable"

    @property
    def glyph(self) -> str:
        return _MARK_GLYPHS[self]

    @property
    def impacted(self) -> bool:
        return self is not ImpactMark.NOT_APPLICABLE


_MARK_GLYPHS = {
    ImpactMark.POSITIVE: "+",
    ImpactMark.NEGATIVE: "-",
    ImpactMark.BOTH: "+/-",
    ImpactMark.NOT_APPLICABLE: "N/A",
}


class ImpactScope(str, Enum):
    """Reach of an AI risk. A narrower company-level scope exists in the
    documentation but never scores; only these two participate in scoring."""

    INDUSTRY = "industry"
    SYSTEMIC = "systemic"


class Pillar(str, Enum):
    ENVIRONMENTAL = "environmental"
    SOCIAL = "social"
    GOVERNANCE = "governance"


class EsgTopic(str, Enum):
    """The 12 standard ESG topics. The set is closed; the pillar is encoded
    in the id prefix (E/S/G)."""

    E1 = "E1"
    E2 = "E2"
    E3 = "E3"
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"
    S4 = "S4"
    S5 = "S5"
    S6 = "S6"
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"

    @property
    def pillar(self) -> Pillar:
        return {"E": Pillar.ENVIRONMENTAL, "S": Pillar.SOCIAL, "G": Pillar.GOVERNANCE}[self.value[0]]

    @property
    def slug(self) -> str:
        return _TOPIC_SLUGS[self]

    @property
    def title(self) -> str:
        return self.slug.replace("-", " ").capitalize()

    @classmethod
    def parse(cls, raw: str) -> "EsgTopic":
        """Accept either the short id (``E1``) or the slug (``carbon-emissions``)."""
        text = raw.strip()
        if text.upper() in cls.__members__:
            return cls[text.upper()]
        wanted = text.lower().replace(" ", "-").replace("/", "-")
        for topic, slug in _TOPIC_SLUGS.items():
            if slug == wanted:
                return topic
        raise ValidationError([Violation("enum.unknown", "esg_topic", f"unknown ESG topic {raw!r}")])


_TOPIC_SLUGS = {
    EsgTopic.E1: "carbon-emissions",
    EsgTopic.E2: "resource-efficiency",
    EsgTopic.E3: "ecosystem-impact",
    EsgTopic.S1: "diversity-equity-inclusion",
    EsgTopic.S2: "human-rights",
    EsgTopic.S3: "labour-management",
    EsgTopic.S4: "customer-and-community",
    EsgTopic.S5: "data-privacy-cybersecurity",
    EsgTopic.S6: "health-and-safety",
    EsgTopic.G1: "board-and-management",
    EsgTopic.G2: "policy",
    EsgTopic.G3: "disclosure-and-reporting",
}

#: Topics eligible for impact marking (governance topics are assessed at the
#: industry level and never carry marks).
NON_GOVERNANCE_TOPICS: tuple[EsgTopic, ...] = tuple(
    t for t in EsgTopic if t.pillar is not Pillar.GOVERNANCE
)


# Three level scales share a shape but are distinct types on purpose: they
# come from three different classifiers and must not cross-assign.

class MaterialityLevel(str, Enum):
    HIGH = "high"
    MEDIUM = "medium"
    LOW = "low"


class ImpactLevel(str, Enum):
    HIGH = "high"
    MEDIUM = "medium"
    LOW = "low"


class GovernanceLevel(str, Enum):
    HIGH = "high"
    MEDIUM = "medium"
    LOW = "low"


class FinalLevel(str, Enum):
    """Outcome scale for a deep-dive principle."""

    UNACCEPTABLE = "unacceptable"
    WEAK = "weak"
    MODERATE = "moderate"
    STRONG = "strong"


class RubricBand(str, Enum):
    NOT_DISCLOSED = "not-disclosed"
    MINIMAL = "minimal"
    MODERATE = "moderate"
    COMPREHENSIVE = "comprehensive"


class AuditAction(str, Enum):
    MATERIALITY_OVERRIDE = "materiality-override"
    FINAL_LEVEL_OVERRIDE = "final-level-override"
    SCORE_EDIT = "score-edit"
    CONFIG_CHANGE = "config-change"


class SessionStatus(str, Enum):
    DRAFT = "draft"
    IN_REVIEW = "in-review"
    FINALIZED = "finalized"


# ---------------------------------------------------------------------------
# Governance indicator registry (4 categories, 10 indicators)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GovernanceIndicator:
    id: str
    name: str
    category: str
    description: str


GOVERNANCE_INDICATORS: tuple[GovernanceIndicator, ...] = (
    GovernanceIndicator(
        "board-accountability", "Board accountability", "board-oversight",
        "RAI is explicitly part of the responsibility of the board or a relevant board subcommittee.",
    ),
    GovernanceIndicator(
        "board-capability", "Board capability", "board-oversight",
        "At least one director with strong technology-related experience.",
    ),
    GovernanceIndicator(
        "public-rai-policy", "Public RAI policy", "rai-commitment",
        "A public RAI policy aligned with relevant regulations and standards.",
    ),
    GovernanceIndicator(
        "sensitive-use-cases", "Sensitive use cases", "rai-commitment",
        "Sensitive, high-risk use cases are addressed as part of the RAI policy.",
    ),
    GovernanceIndicator(
        "rai-target", "RAI target", "rai-commitment",
        "The RAI policy or commitment is supported with clear targets.",
    ),
    GovernanceIndicator(
        "rai-responsibility", "RAI responsibility", "rai-implementation",
        "RAI oversight sits with a dedicated role or as part of another function.",
    ),
    GovernanceIndicator(
        "employee-awareness", "Employee awareness", "rai-implementation",
        "A program raises employee awareness of AI alongside ethical and ESG considerations.",
    ),
    GovernanceIndicator(
        "system-integration", "System integration", "rai-implementation",
        "The RAI policy is integrated throughout existing business processes.",
    ),
    GovernanceIndicator(
        "ai-incidents", "AI incidents", "rai-implementation",
        "RAI issues and incidents are tracked and reported internally.",
    ),
    GovernanceIndicator(
        "rai-metrics", "RAI metrics", "rai-metrics",
        "RAI metrics associated with the policy are identified and reported externally.",
    ),
)

GOVERNANCE_INDICATOR_IDS: tuple[str, ...] = tuple(i.id for i in GOVERNANCE_INDICATORS)


# ---------------------------------------------------------------------------
# Decoding helpers
# ---------------------------------------------------------------------------

class _Decoder:
    """Collects violations while picking fields out of a payload, so a single
    decode pass reports everything that is wrong."""

    def __init__(self, kind: str):
        self.kind = kind
        self.violations: list[Violation] = []

    def fail(self, code: str, path: str, message: str) -> None:
        self.violations.append(Violation(code, path, message))

    def obj(self, payload: Any) -> Mapping[str, Any]:
        if not isinstance(payload, Mapping):
            self.fail("payload.type", "", f"{self.kind}: expected an object, got {type(payload).__name__}")
            return {}
        return payload

    def text(self, payload: Mapping[str, Any], key: str, required: bool = True, default: str = "") -> str:
        value = payload.get(key)
        if value is None:
            if required:
                self.fail("field.missing", key, f"missing required field {key!r}")
            return default
        if not isinstance(value, str):
            self.fail("field.type", key, f"{key!r} must be a string")
            return default
        return value

    def number(self, payload: Mapping[str, Any], key: str, required: bool = True, default: float = 0.0) -> float:
        value = payload.get(key)
        if value is None:
            if required:
                self.fail("field.missing", key, f"missing required field {key!r}")
            return default
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
            self.fail("field.type", key, f"{key!r} must be a finite number")
            return default
        return float(value)

    def integer(self, payload: Mapping[str, Any], key: str, required: bool = True, default: int = 0) -> int:
        value = payload.get(key)
        if value is None:
            if required:
                self.fail("field.missing", key, f"missing required field {key!r}")
            return default
        if isinstance(value, bool) or not isinstance(value, int):
            self.fail("field.type", key, f"{key!r} must be an integer")
            return default
        return value

    def boolean(self, payload: Mapping[str, Any], key: str) -> bool:
        value = payload.get(key)
        if not isinstance(value, bool):
            self.fail("field.type", key, f"{key!r} must be a boolean")
            return False
        return value

    def member(self, enum_cls: type[Enum], raw: Any, path: str) -> Any:
        try:
            return enum_cls(raw)
        except ValueError:
            allowed = ", ".join(m.value for m in enum_cls)  # type: ignore[attr-defined]
            self.fail("enum.unknown", path, f"unknown value {raw!r} (expected one of: {allowed})")
            return None

    def done(self) -> None:
        if self.violations:
            raise ValidationError(self.violations)


# ---------------------------------------------------------------------------
# Records
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RubricScore:
    """A 0-5 disclosure score for one sub-question. The band is a pure
    function of the value; it is stored alongside for readability but always
    recomputed on decode."""

    value: int
    evidence: str = ""

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or not 0 <= self.value <= 5:
            raise ValidationError([Violation("rubric.value.range", "value", f"score must be an integer in 0..5, got {self.value!r}")])

    @property
    def band(self) -> RubricBand:
        if self.value == 0:
            return RubricBand.NOT_DISCLOSED
        if self.value == 1:
            return RubricBand.MINIMAL
        if self.value == 5:
            return RubricBand.COMPREHENSIVE
        return RubricBand.MODERATE

    def to_dict(self) -> dict[str, Any]:
        return {"value": self.value, "band": self.band.value, "evidence": self.evidence}

    @classmethod
    def from_dict(cls, payload: Any) -> "RubricScore":
        d = _Decoder("RubricScore")
        data = d.obj(payload)
        value = d.integer(data, "value")
        evidence = d.text(data, "evidence", required=False)
        if not d.violations and not 0 <= value <= 5:
            d.fail("rubric.value.range", "value", f"score must be in 0..5, got {value}")
        d.done()
        return cls(value=value, evidence=evidence)


@dataclass(frozen=True)
class ScoringConfig:
    """Weights, thresholds and numeric encodings used by the classifiers.

    Defaults: unit weights, thresholds 2/1, and encodings chosen so that
    high-risk or systemic cases trend high-material while medium/medium/
    industry cases land medium. The encodings are a documented default, not
    ground truth, and every value is user-configurable.
    """

    use_case_weights: tuple[float, float, float] = (1.0, 1.0, 1.0)
    t_high: float = 2.0
    t_low: float = 1.0
    regulatory_encoding: Mapping[RegulatoryFlag, float] = field(
        default_factory=lambda: {
            RegulatoryFlag.UNACCEPTABLE: 1.5,
            RegulatoryFlag.HIGH: 1.0,
            RegulatoryFlag.MEDIUM: 0.5,
            RegulatoryFlag.NOT_DETERMINED: 0.5,
            RegulatoryFlag.LOW: 0.0,
        }
    )
    impact_encoding: Mapping[ImpactLevel, float] = field(
        default_factory=lambda: {
            ImpactLevel.HIGH: 1.0,
            ImpactLevel.MEDIUM: 0.5,
            ImpactLevel.LOW: 0.0,
        }
    )
    scope_encoding: Mapping[ImpactScope, float] = field(
        default_factory=lambda: {
            ImpactScope.SYSTEMIC: 1.0,
            ImpactScope.INDUSTRY: 0.5,
        }
    )
    governance_weights: tuple[float, ...] = (1.0,) * 10

    def __post_init__(self) -> None:
        violations: list[Violation] = []
        if len(self.use_case_weights) != 3:
            violations.append(Violation("config.weights.count", "use_case_weights", "exactly three weights required"))
        if any(w < 0 for w in self.use_case_weights):
            violations.append(Violation("config.weights.negative", "use_case_weights", "weights must be non-negative"))
        if not self.t_low < self.t_high:
            violations.append(Violation("config.thresholds", "t_low", f"t_low ({self.t_low}) must be below t_high ({self.t_high})"))
        if len(self.governance_weights) != 10:
            violations.append(Violation("config.weights.count", "governance_weights", "exactly ten governance weights required"))
        if any(w < 0 for w in self.governance_weights):
            violations.append(Violation("config.weights.negative", "governance_weights", "weights must be non-negative"))
        for flag in RegulatoryFlag:
            value = self.regulatory_encoding.get(flag)
            if value is None:
                violations.append(Violation("config.encoding.missing", f"regulatory_encoding.{flag.value}", "missing encoding"))
            elif not 0 <= value <= 1.5:
                violations.append(Violation("config.encoding.range", f"regulatory_encoding.{flag.value}", f"value {value} outside [0, 1.5]"))
        for level in ImpactLevel:
            value = self.impact_encoding.get(level)
            if value is None:
                violations.append(Violation("config.encoding.missing", f"impact_encoding.{level.value}", "missing encoding"))
            elif not 0 <= value <= 1:
                violations.append(Violation("config.encoding.range", f"impact_encoding.{level.value}", f"value {value} outside [0, 1]"))
        for scope in ImpactScope:
            value = self.scope_encoding.get(scope)
            if value is None:
                violations.append(Violation("config.encoding.missing", f"scope_encoding.{scope.value}", "missing encoding"))
            elif not 0 <= value <= 1:
                violations.append(Violation("config.encoding.range", f"scope_encoding.{scope.value}", f"value {value} outside [0, 1]"))
        if violations:
            raise ValidationError(violations)

    def to_dict(self) -> dict[str, Any]:
        return {
            "use_case_weights": list(self.use_case_weights),
            "t_high": self.t_high,
            "t_low": self.t_low,
            "regulatory_encoding": {k.value: v for k, v in sorted(self.regulatory_encoding.items())},
            "impact_encoding": {k.value: v for k, v in sorted(self.impact_encoding.items())},
            "scope_encoding": {k.value: v for k, v in sorted(self.scope_encoding.items())},
            "governance_weights": list(self.governance_weights),
        }

    @classmethod
    def from_dict(cls, payload: Any) -> "ScoringConfig":
        d = _Decoder("ScoringConfig")
        data = d.obj(payload)
        defaults = cls()

        weights = data.get("use_case_weights", list(defaults.use_case_weights))
        if not isinstance(weights, (list, tuple)) or len(weights) != 3 or not all(
            isinstance(w, (int, float)) and not isinstance(w, bool) for w in weights
        ):
            d.fail("field.type", "use_case_weights", "expected a list of three numbers")
            weights = defaults.use_case_weights
        t_high = d.number(data, "t_high", required=False, default=defaults.t_high)
        t_low = d.number(data, "t_low", required=False, default=defaults.t_low)

        def enc(key: str, enum_cls: type[Enum], fallback: Mapping) -> dict:
            raw = data.get(key)
            if raw is None:
                return dict(fallback)
            table = d.obj(raw)
            out = dict(fallback)
            for k, v in table.items():
                member = d.member(enum_cls, k, f"{key}.{k}")
                if member is None:
                    continue
                if isinstance(v, bool) or not isinstance(v, (int, float)):
                    d.fail("field.type", f"{key}.{k}", "encoding value must be a number")
                    continue
                out[member] = float(v)
            return out

        regulatory = enc("regulatory_encoding", RegulatoryFlag, defaults.regulatory_encoding)
        impact = enc("impact_encoding", ImpactLevel, defaults.impact_encoding)
        scope = enc("scope_encoding", ImpactScope, defaults.scope_encoding)

        gweights = data.get("governance_weights", list(defaults.governance_weights))
        if not isinstance(gweights, (list, tuple)) or not all(
            isinstance(w, (int, float)) and not isinstance(w, bool) for w in gweights
        ):
            d.fail("field.type", "governance_weights", "expected a list of numbers")
            gweights = defaults.governance_weights
        d.done()
        return cls(
            use_case_weights=tuple(float(w) for w in weights),  # type: ignore[arg-type]
            t_high=t_high,
            t_low=t_low,
            regulatory_encoding=regulatory,
            impact_encoding=impact,
            scope_encoding=scope,
            governance_weights=tuple(float(w) for w in gweights),
        )


DEFAULT_CONFIG = ScoringConfig()


def _freeze_marks(marks: Mapping[EsgTopic, ImpactMark]) -> dict[EsgTopic, ImpactMark]:
    return {topic: marks[topic] for topic in NON_GOVERNANCE_TOPICS if topic in marks}


@dataclass(frozen=True)
class UseCaseProfile:
    """One AI use case: its regulatory flag, per-topic impact marks, scope,
    and the computed/overridden materiality levels. The computed default is
    never destroyed by an override."""

    sector: str
    name: str
    description: str
    regulatory_flag: RegulatoryFlag
    impact_marks: Mapping[EsgTopic, ImpactMark]
    impact_scope: ImpactScope
    materiality_default: MaterialityLevel
    materiality_adjusted: MaterialityLevel | None = None
    override_note: str | None = None

    def __post_init__(self) -> None:
        violations = _check_profile(
            {t.value for t in self.impact_marks}, self.materiality_adjusted is not None, self.override_note
        )
        if violations:
            raise ValidationError(violations)
        object.__setattr__(self, "impact_marks", _freeze_marks(self.impact_marks))

    @property
    def id(self) -> str:
        return use_case_id(self.sector, self.name)

    @property
    def materiality_effective(self) -> MaterialityLevel:
        return self.materiality_adjusted or self.materiality_default

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UseCaseProfile):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def to_dict(self) -> dict[str, Any]:
        return {
            "sector": self.sector,
            "name": self.name,
            "description": self.description,
            "regulatory_flag": self.regulatory_flag.value,
            "impact_marks": {t.value: self.impact_marks[t].value for t in NON_GOVERNANCE_TOPICS},
            "impact_scope": self.impact_scope.value,
            "materiality_default": self.materiality_default.value,
            "materiality_adjusted": self.materiality_adjusted.value if self.materiality_adjusted else None,
            "override_note": self.override_note,
        }

    @classmethod
    def from_dict(cls, payload: Any) -> "UseCaseProfile":
        d = _Decoder("UseCaseProfile")
        data = d.obj(payload)
        sector = d.text(data, "sector")
        name = d.text(data, "name")
        description = d.text(data, "description", required=False)
        flag = d.member(RegulatoryFlag, data.get("regulatory_flag"), "regulatory_flag")
        raw_marks = data.get("impact_marks")
        marks: dict[EsgTopic, ImpactMark] = {}
        seen_ids: set[str] = set()
        if not isinstance(raw_marks, Mapping):
            d.fail("field.type", "impact_marks", "impact_marks must be an object")
        else:
            for key, value in raw_marks.items():
                topic = d.member(EsgTopic, key, f"impact_marks.{key}")
                mark = d.member(ImpactMark, value, f"impact_marks.{key}")
                if topic is None or mark is None:
                    continue
                seen_ids.add(topic.value)
                marks[topic] = mark
        scope = d.member(ImpactScope, data.get("impact_scope"), "impact_scope")
        default = d.member(MaterialityLevel, data.get("materiality_default"), "materiality_default")
        adjusted = None
        if data.get("materiality_adjusted") is not None:
            adjusted = d.member(MaterialityLevel, data.get("materiality_adjusted"), "materiality_adjusted")
        note = data.get("override_note")
        if note is not None and not isinstance(note, str):
            d.fail("field.type", "override_note", "override_note must be a string")
            note = None
        d.violations.extend(_check_profile(seen_ids, adjusted is not None, note))
        d.done()
        return cls(
            sector=sector,
            name=name,
            description=description,
            regulatory_flag=flag,
            impact_marks=marks,
            impact_scope=scope,
            materiality_default=default,
            materiality_adjusted=adjusted,
            override_note=note,
        )


def _check_profile(mark_topic_ids: set[str], has_adjusted: bool, note: str | None) -> list[Violation]:
    violations: list[Violation] = []
    expected = {t.value for t in NON_GOVERNANCE_TOPICS}
    if len(mark_topic_ids) != len(expected):
        violations.append(
            Violation("impact_marks.count", "impact_marks", f"expected marks for all {len(expected)} non-governance topics, got {len(mark_topic_ids)}")
        )
    extra = mark_topic_ids - expected
    if extra:
        violations.append(Violation("impact_marks.topic", "impact_marks", f"governance topics cannot carry marks: {sorted(extra)}"))
    if has_adjusted and not (note or "").strip():
        violations.append(Violation("override.note.required", "override_note", "a materiality override requires a non-empty note"))
    return violations


def use_case_id(sector: str, name: str) -> str:
    """Stable address for a use case within a session: sector and name slugs."""

    def slug(text: str) -> str:
        out = []
        for ch in text.strip().lower():
            if ch.isalnum():
                out.append(ch)
            elif out and out[-1] != "-":
                out.append("-")
        return "".join(out).strip("-")

    return f"{slug(sector)}/{slug(name)}"


@dataclass(frozen=True)
class IndicatorJudgment:
    indicator: str
    met: bool
    evidence: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"indicator": self.indicator, "met": self.met, "evidence": self.evidence}


@dataclass(frozen=True)
class GovernanceAssessment:
    """Ten yes/no indicator judgments with evidence, plus the weighted score
    and level computed from them."""

    company: str
    judgments: tuple[IndicatorJudgment, ...]
    score: float
    level: GovernanceLevel

    def __post_init__(self) -> None:
        violations = _check_judgments([j.indicator for j in self.judgments])
        if violations:
            raise ValidationError(violations)
        object.__setattr__(self, "judgments", tuple(self.judgments))

    def to_dict(self) -> dict[str, Any]:
        return {
            "company": self.company,
            "judgments": [j.to_dict() for j in self.judgments],
            "score": self.score,
            "level": self.level.value,
        }

    @classmethod
    def from_dict(cls, payload: Any) -> "GovernanceAssessment":
        d = _Decoder("GovernanceAssessment")
        data = d.obj(payload)
        company = d.text(data, "company")
        raw = data.get("judgments")
        judgments: list[IndicatorJudgment] = []
        ids: list[str] = []
        if not isinstance(raw, list):
            d.fail("field.type", "judgments", "judgments must be a list")
        else:
            for i, item in enumerate(raw):
                if not isinstance(item, Mapping):
                    d.fail("field.type", f"judgments[{i}]", "judgment must be an object")
                    continue
                indicator = item.get("indicator")
                if not isinstance(indicator, str):
                    d.fail("field.type", f"judgments[{i}].indicator", "indicator must be a string")
                    continue
                ids.append(indicator)
                met = item.get("met")
                if not isinstance(met, bool):
                    d.fail("field.type", f"judgments[{i}].met", "met must be a boolean")
                    met = False
                evidence = item.get("evidence", "")
                if not isinstance(evidence, str):
                    d.fail("field.type", f"judgments[{i}].evidence", "evidence must be a string")
                    evidence = ""
                judgments.append(IndicatorJudgment(indicator=indicator, met=met, evidence=evidence))
        score = d.number(data, "score")
        level = d.member(GovernanceLevel, data.get("level"), "level")
        d.violations.extend(_check_judgments(ids))
        d.done()
        return cls(company=company, judgments=tuple(judgments), score=score, level=level)


def _check_judgments(indicator_ids: list[str]) -> list[Violation]:
    violations: list[Violation] = []
    if len(indicator_ids) != 10:
        violations.append(Violation("judgments.count", "judgments", f"exactly 10 judgments required, got {len(indicator_ids)}"))
    dupes = sorted({i for i in indicator_ids if indicator_ids.count(i) > 1})
    if dupes:
        violations.append(Violation("judgments.duplicate", "judgments", f"duplicate indicator ids: {dupes}"))
    unknown = sorted(set(indicator_ids) - set(GOVERNANCE_INDICATOR_IDS))
    if unknown:
        violations.append(Violation("judgments.unknown_indicator", "judgments", f"unknown indicator ids: {unknown}"))
    return violations


@dataclass(frozen=True)
class PrincipleResult:
    """Per-principle outcome of a deep dive: the average of answered scores,
    the level that average suggests, and the analyst's final call."""

    average: float
    suggested_level: FinalLevel
    final_level: FinalLevel
    override_note: str | None = None

    def __post_init__(self) -> None:
        if self.final_level is not self.suggested_level and not (self.override_note or "").strip():
            raise ValidationError(
                [Violation("override.note.required", "override_note", "a final-level override requires a non-empty note")]
            )

    def to_dict(self) -> dict[str, Any]:
        return {
            "average": self.average,
            "suggested_level": self.suggested_level.value,
            "final_level": self.final_level.value,
            "override_note": self.override_note,
        }

    @classmethod
    def from_dict(cls, payload: Any) -> "PrincipleResult":
        d = _Decoder("PrincipleResult")
        data = d.obj(payload)
        average = d.number(data, "average")
        suggested = d.member(FinalLevel, data.get("suggested_level"), "suggested_level")
        final = d.member(FinalLevel, data.get("final_level"), "final_level")
        note = data.get("override_note")
        if note is not None and not isinstance(note, str):
            d.fail("field.type", "override_note", "override_note must be a string")
            note = None
        if suggested is not None and final is not None and final is not suggested and not (note or "").strip():
            d.fail("override.note.required", "override_note", "a final-level override requires a non-empty note")
        d.done()
        return cls(average=average, suggested_level=suggested, final_level=final, override_note=note)


@dataclass(frozen=True)
class DeepDiveAssessment:
    """Rubric answers keyed by sub-question id, plus per-principle results.

    Whether each answer id actually exists in the named bank version is
    checked by the bank module, which owns the question corpus.
    """

    company: str
    bank_version: str
    answers: Mapping[str, RubricScore]
    principle_results: Mapping[str, PrincipleResult]

    def __post_init__(self) -> None:
        object.__setattr__(self, "answers", dict(self.answers))
        object.__setattr__(self, "principle_results", dict(self.principle_results))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DeepDiveAssessment):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def to_dict(self) -> dict[str, Any]:
        return {
            "company": self.company,
            "bank_version": self.bank_version,
            "answers": {k: v.to_dict() for k, v in sorted(self.answers.items())},
            "principle_results": {k: v.to_dict() for k, v in sorted(self.principle_results.items())},
        }

    @classmethod
    def from_dict(cls, payload: Any) -> "DeepDiveAssessment":
        d = _Decoder("DeepDiveAssessment")
        data = d.obj(payload)
        company = d.text(data, "company")
        bank_version = d.text(data, "bank_version")
        answers: dict[str, RubricScore] = {}
        raw_answers = data.get("answers", {})
        if not isinstance(raw_answers, Mapping):
            d.fail("field.type", "answers", "answers must be an object")
        else:
            for key, value in raw_answers.items():
                try:
                    answers[str(key)] = RubricScore.from_dict(value)
                except ValidationError as exc:
                    d.violations.extend(Violation(v.code, f"answers.{key}.{v.path}", v.message) for v in exc.violations)
        results: dict[str, PrincipleResult] = {}
        raw_results = data.get("principle_results", {})
        if not isinstance(raw_results, Mapping):
            d.fail("field.type", "principle_results", "principle_results must be an object")
        else:
            for key, value in raw_results.items():
                try:
                    results[str(key)] = PrincipleResult.from_dict(value)
                except ValidationError as exc:
                    d.violations.extend(Violation(v.code, f"principle_results.{key}.{v.path}", v.message) for v in exc.violations)
        d.done()
        return cls(company=company, bank_version=bank_version, answers=answers, principle_results=results)


# ---------------------------------------------------------------------------
# Payload validation without raising
# ---------------------------------------------------------------------------

_DECODERS = {
    "rubric_score": RubricScore.from_dict,
    "scoring_config": ScoringConfig.from_dict,
    "use_case_profile": UseCaseProfile.from_dict,
    "governance_assessment": GovernanceAssessment.from_dict,
    "principle_result": PrincipleResult.from_dict,
    "deep_dive_assessment": DeepDiveAssessment.from_dict,
}


def validate(kind: str, payload: Any) -> list[Violation]:
    """Check an encoded record against every invariant of its type.

    Returns the full violation list (empty when the payload is valid) instead
    of raising, so callers can surface all problems at once.
    """
    decoder = _DECODERS.get(kind)
    if decoder is None:
        raise KeyError(f"unknown record kind {kind!r}; expected one of {sorted(_DECODERS)}")
    try:
        decoder(payload)
    except ValidationError as exc:
        return list(exc.violations)
    return []


def record_kinds() -> tuple[str, ...]:
    return tuple(sorted(_DECODERS))
