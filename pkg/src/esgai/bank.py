"""Question-bank ingestion, validation, filtering and statistics.

A bank is a single JSON document (schema in ``docs/bank.schema.json``)
holding key questions, sub-questions and guide metrics. Banks declare their
completeness: ``sample`` banks may hold any subset, ``complete`` banks must
carry the full corpus (42 sub-questions, 43 metrics, 8 key questions,
27 distinct indicators) and the expected high-risk / foundation-model
selections. Loaded banks are immutable snapshots.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from .errors import DomainError, NotFoundError, ValidationError, Violation
from .model import EsgTopic


class OrgType(str, Enum):
    DEVELOPER = "developer"
    PURCHASER = "purchaser"
    BOTH = "both"


class SystemCategory(str, Enum):
    HIGH_RISK = "high-risk"
    FOUNDATION_MODEL = "foundation-model"
    LIMITED = "limited"
    MINIMAL = "minimal"


#: Only these categories carry mandatory/optional obligations.
OBLIGATION_CATEGORIES = (SystemCategory.HIGH_RISK, SystemCategory.FOUNDATION_MODEL)


class Obligation(str, Enum):
    MANDATORY = "mandatory"
    OPTIONAL = "optional"


class Provenance(str, Enum):
    EU_AI_ACT = "eu-ai-act"
    NIST = "nist"
    OTHER = "other"


class MetricDirection(str, Enum):
    SMALLER_BETTER = "smaller-better"
    BIGGER_BETTER = "bigger-better"
    CONTEXTUAL = "contextual"


@dataclass(frozen=True)
class Principle:
    id: str
    name: str


PRINCIPLES: tuple[Principle, ...] = (
    Principle("HSE", "Human, societal and environmental wellbeing"),
    Principle("HV", "Human-centred values"),
    Principle("FAR", "Fairness"),
    Principle("PRV", "Privacy protection and security"),
    Principle("REL", "Reliability and safety"),
    Principle("TRN", "Transparency and explainability"),
    Principle("CON", "Contestability"),
    Principle("ACC", "Accountability"),
)

PRINCIPLE_IDS: tuple[str, ...] = tuple(p.id for p in PRINCIPLES)
PRINCIPLE_ORDER: dict[str, int] = {p.id: i for i, p in enumerate(PRINCIPLES)}
PRINCIPLE_NAMES: dict[str, str] = {p.id: p.name for p in PRINCIPLES}


@dataclass(frozen=True)
class KeyQuestion:
    id: str
    principle: str
    text: str

    def to_dict(self) -> dict[str, Any]:
        return {"id": self.id, "principle": self.principle, "text": self.text}


@dataclass(frozen=True)
class SubQuestion:
    """One assessable sub-question with its filter tags.

    Empty ``org_types`` or ``system_categories`` means the question applies
    to every org type / system category.
    """

    id: str
    principle: str
    key_question: str
    indicator: str
    text: str
    esg_topics: frozenset[EsgTopic] = frozenset()
    org_types: frozenset[OrgType] = frozenset()
    system_categories: frozenset[SystemCategory] = frozenset()
    obligation: Mapping[SystemCategory, Obligation] = field(default_factory=dict)
    provenance: frozenset[Provenance] = frozenset()
    metrics: tuple[str, ...] = ()

    def applies_to_org(self, org: OrgType) -> bool:
        if not self.org_types:
            return True
        covered: set[OrgType] = set()
        for tag in self.org_types:
            if tag is OrgType.BOTH:
                covered.update({OrgType.DEVELOPER, OrgType.PURCHASER})
            else:
                covered.add(tag)
        if org is OrgType.BOTH:
            return {OrgType.DEVELOPER, OrgType.PURCHASER} <= covered
        return org in covered

    def applies_to_category(self, category: SystemCategory) -> bool:
        return not self.system_categories or category in self.system_categories

    def obligation_for(self, category: SystemCategory) -> Obligation | None:
        return self.obligation.get(category)

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "principle": self.principle,
            "key_question": self.key_question,
            "indicator": self.indicator,
            "text": self.text,
            "esg_topics": sorted(t.value for t in self.esg_topics),
            "org_types": sorted(o.value for o in self.org_types),
            "system_categories": sorted(c.value for c in self.system_categories),
            "obligation": {c.value: o.value for c, o in sorted(self.obligation.items())},
            "provenance": sorted(p.value for p in self.provenance),
            "metrics": list(self.metrics),
        }


@dataclass(frozen=True)
class GuideMetric:
    id: str
    name: str
    guide: str
    direction: MetricDirection
    mandatory_for: frozenset[SystemCategory] = frozenset()

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "name": self.name,
            "guide": self.guide,
            "direction": self.direction.value,
            "mandatory_for": sorted(c.value for c in self.mandatory_for),
        }


class Completeness(str, Enum):
    SAMPLE = "sample"
    COMPLETE = "complete"


@dataclass(frozen=True)
class BankManifest:
    version: str
    completeness: Completeness
    notes: str
    key_questions: tuple[KeyQuestion, ...]
    questions: tuple[SubQuestion, ...]
    metrics: tuple[GuideMetric, ...]

    def question_by_id(self, qid: str) -> SubQuestion:
        for q in self.questions:
            if q.id == qid:
                return q
        raise DomainError("bank.question.not_found", f"unknown sub-question id {qid!r}")

    def metric_by_id(self, mid: str) -> GuideMetric:
        for m in self.metrics:
            if m.id == mid:
                return m
        raise DomainError("bank.metric.not_found", f"unknown metric id {mid!r}")

    @property
    def indicators(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for q in self.questions:
            seen.setdefault(q.indicator)
        return tuple(seen)

    def to_dict(self) -> dict[str, Any]:
        return {
            "version": self.version,
            "completeness": self.completeness.value,
            "notes": self.notes,
            "key_questions": [k.to_dict() for k in self.key_questions],
            "questions": [q.to_dict() for q in self.questions],
            "metrics": [m.to_dict() for m in self.metrics],
        }


# ---------------------------------------------------------------------------
# Loading
# ---------------------------------------------------------------------------

def load_bank(source: str | Path | Mapping[str, Any]) -> BankManifest:
    """Parse and fully validate a bank document.

    ``source`` may be a path, a JSON string, or an already-parsed mapping.
    All violations are collected and raised together, each with a path (and
    a line number for JSON parse errors).
    """
    if isinstance(source, Mapping):
        payload: Any = source
    else:
        text: str
        if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source and source.endswith(".json")):
            path = Path(source)
            if not path.exists():
                raise NotFoundError("bank.file.not_found", f"bank file not found: {path}")
            text = path.read_text(encoding="utf-8")
        else:
            text = str(source)
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(
                [Violation("bank.parse", f"line {exc.lineno}, column {exc.colno}", exc.msg)], code="bank.parse"
            ) from exc

    violations: list[Violation] = []
    violations.extend(_schema_violations(payload))
    if violations:
        raise ValidationError(violations, code="bank.schema")

    manifest = _decode_bank(payload, violations)
    violations.extend(_semantic_violations(manifest))
    if violations:
        raise ValidationError(violations, code="bank.invalid")
    return manifest


def _schema_violations(payload: Any) -> list[Violation]:
    import jsonschema

    schema = _bank_schema()
    validator = jsonschema.Draft202012Validator(schema)
    out = []
    for error in sorted(validator.iter_errors(payload), key=lambda e: list(e.absolute_path)):
        path = "/".join(str(p) for p in error.absolute_path) or "(root)"
        out.append(Violation("bank.schema", path, error.message))
    return out


_SCHEMA_CACHE: dict[str, Any] = {}


def _bank_schema() -> Mapping[str, Any]:
    if "schema" not in _SCHEMA_CACHE:
        from importlib import resources

        with resources.files("esgai.data").joinpath("bank.schema.json").open("r", encoding="utf-8") as fh:
            _SCHEMA_CACHE["schema"] = json.load(fh)
    return _SCHEMA_CACHE["schema"]


def _decode_bank(payload: Mapping[str, Any], violations: list[Violation]) -> BankManifest:
    key_questions = tuple(
        KeyQuestion(id=k["id"], principle=k["principle"], text=k["text"])
        for k in payload.get("key_questions", [])
    )
    questions = []
    for q in payload.get("questions", []):
        questions.append(
            SubQuestion(
                id=q["id"],
                principle=q["principle"],
                key_question=q["key_question"],
                indicator=q["indicator"],
                text=q["text"],
                esg_topics=frozenset(EsgTopic(t) for t in q.get("esg_topics", [])),
                org_types=frozenset(OrgType(o) for o in q.get("org_types", [])),
                system_categories=frozenset(SystemCategory(c) for c in q.get("system_categories", [])),
                obligation={SystemCategory(c): Obligation(o) for c, o in q.get("obligation", {}).items()},
                provenance=frozenset(Provenance(p) for p in q.get("provenance", [])),
                metrics=tuple(q.get("metrics", [])),
            )
        )
    metrics = tuple(
        GuideMetric(
            id=m["id"],
            name=m["name"],
            guide=m.get("guide", ""),
            direction=MetricDirection(m["direction"]),
            mandatory_for=frozenset(SystemCategory(c) for c in m.get("mandatory_for", [])),
        )
        for m in payload.get("metrics", [])
    )
    return BankManifest(
        version=payload["version"],
        completeness=Completeness(payload["completeness"]),
        notes=payload.get("notes", ""),
        key_questions=key_questions,
        questions=tuple(questions),
        metrics=metrics,
    )


def _semantic_violations(bank: BankManifest) -> list[Violation]:
    out: list[Violation] = []

    def dupes(ids: Iterable[str], path: str) -> None:
        seen: set[str] = set()
        for i in ids:
            if i in seen:
                out.append(Violation("bank.duplicate_id", path, f"duplicate id {i!r}"))
            seen.add(i)

    dupes((q.id for q in bank.questions), "questions")
    dupes((m.id for m in bank.metrics), "metrics")
    dupes((k.id for k in bank.key_questions), "key_questions")

    key_ids = {k.id for k in bank.key_questions}
    metric_ids = {m.id for m in bank.metrics}
    for k in bank.key_questions:
        if k.principle not in PRINCIPLE_ORDER:
            out.append(Violation("bank.unknown_principle", f"key_questions/{k.id}", f"unknown principle {k.principle!r}"))
    for q in bank.questions:
        where = f"questions/{q.id}"
        if q.principle not in PRINCIPLE_ORDER:
            out.append(Violation("bank.unknown_principle", where, f"unknown principle {q.principle!r}"))
        if q.key_question not in key_ids:
            out.append(Violation("bank.dangling.key_question", where, f"key question {q.key_question!r} not defined"))
        for mid in q.metrics:
            if mid not in metric_ids:
                out.append(Violation("bank.dangling.metric", where, f"metric {mid!r} not defined"))
        for category in q.obligation:
            if category not in OBLIGATION_CATEGORIES:
                out.append(Violation("bank.obligation.category", where, f"category {category.value!r} cannot carry an obligation"))
            elif category not in q.system_categories:
                out.append(Violation("bank.obligation.category", where, f"obligation for untagged category {category.value!r}"))
        for category in q.system_categories:
            if category in OBLIGATION_CATEGORIES and category not in q.obligation:
                out.append(Violation("bank.obligation.missing", where, f"{category.value} questions must state mandatory or optional"))

    if bank.completeness is Completeness.COMPLETE:
        out.extend(_completeness_violations(bank))
    return out


def _completeness_violations(bank: BankManifest) -> list[Violation]:
    out: list[Violation] = []
    if len(bank.questions) != 42:
        out.append(Violation("bank.count.sub_questions", "questions", f"a complete bank carries 42 sub-questions, found {len(bank.questions)}"))
    if len(bank.metrics) != 43:
        out.append(Violation("bank.count.metrics", "metrics", f"a complete bank carries 43 guide metrics, found {len(bank.metrics)}"))
    if len(bank.key_questions) != 8:
        out.append(Violation("bank.count.key_questions", "key_questions", f"a complete bank carries 8 key questions, found {len(bank.key_questions)}"))
    indicator_count = len(set(bank.indicators))
    if indicator_count != 27:
        out.append(Violation("bank.count.indicators", "questions", f"a complete bank spans 27 distinct indicators, found {indicator_count}"))

    def selection(category: SystemCategory) -> tuple[int, int]:
        mandatory = optional = 0
        for q in bank.questions:
            if category in q.system_categories:
                if q.obligation.get(category) is Obligation.MANDATORY:
                    mandatory += 1
                else:
                    optional += 1
        return mandatory, optional

    hr = selection(SystemCategory.HIGH_RISK)
    if hr != (17, 5):
        out.append(Violation("bank.selection.high_risk", "questions", f"high-risk selection must be 17 mandatory + 5 optional, found {hr[0]} + {hr[1]}"))
    fm = selection(SystemCategory.FOUNDATION_MODEL)
    if fm != (13, 8):
        out.append(Violation("bank.selection.foundation_model", "questions", f"foundation-model selection must be 13 mandatory + 8 additional, found {fm[0]} + {fm[1]}"))
    return out


# ---------------------------------------------------------------------------
# Filtering
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FilterCriteria:
    org_type: OrgType | None = None
    system_category: SystemCategory | None = None
    esg_topic: EsgTopic | None = None
    principles: frozenset[str] | None = None

    @classmethod
    def parse(
        cls,
        org_type: str | None = None,
        system_category: str | None = None,
        esg_topic: str | None = None,
        principles: Sequence[str] | None = None,
    ) -> "FilterCriteria":
        """Build criteria from raw strings, rejecting unknown values."""
        try:
            org = OrgType(org_type) if org_type else None
        except ValueError:
            raise DomainError("filter.unknown_value", f"unknown org type {org_type!r}", details={"allowed": [o.value for o in OrgType]})
        try:
            category = SystemCategory(system_category) if system_category else None
        except ValueError:
            raise DomainError("filter.unknown_value", f"unknown system category {system_category!r}", details={"allowed": [c.value for c in SystemCategory]})
        topic = None
        if esg_topic:
            try:
                topic = EsgTopic.parse(esg_topic)
            except ValidationError:
                raise DomainError("filter.unknown_value", f"unknown ESG topic {esg_topic!r}", details={"allowed": [t.value for t in EsgTopic]})
        pset = None
        if principles:
            unknown = [p for p in principles if p.upper() not in PRINCIPLE_ORDER]
            if unknown:
                raise DomainError("filter.unknown_value", f"unknown principles {unknown}", details={"allowed": list(PRINCIPLE_IDS)})
            pset = frozenset(p.upper() for p in principles)
        return cls(org_type=org, system_category=category, esg_topic=topic, principles=pset)


def filter_questions(bank: BankManifest, criteria: FilterCriteria | None = None) -> list[SubQuestion]:
    """Conjunction of the given criteria; no criteria returns everything.

    Ordering is deterministic: principle order first, then position in the
    bank file.
    """
    criteria = criteria or FilterCriteria()
    order = {q.id: i for i, q in enumerate(bank.questions)}
    selected = []
    for q in bank.questions:
        if criteria.org_type is not None and not q.applies_to_org(criteria.org_type):
            continue
        if criteria.system_category is not None and not q.applies_to_category(criteria.system_category):
            continue
        if criteria.esg_topic is not None and criteria.esg_topic not in q.esg_topics:
            continue
        if criteria.principles is not None and q.principle not in criteria.principles:
            continue
        selected.append(q)
    selected.sort(key=lambda q: (PRINCIPLE_ORDER[q.principle], order[q.id]))
    return selected


# ---------------------------------------------------------------------------
# Statistics
# ---------------------------------------------------------------------------

def display_percent(count: int, total: int) -> int:
    """Integer display share, round half up. Raw counts stay authoritative."""
    from decimal import ROUND_HALF_UP, Decimal

    if total == 0:
        return 0
    return int((Decimal(count) * 100 / Decimal(total)).quantize(Decimal("1"), rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class ProvenanceStats:
    """How many questions trace to which regulatory sources. Percentages are
    display values (round half up); the raw counts are always retained."""

    nist_only: int
    eu_only: int
    both: int
    other: int

    @property
    def total(self) -> int:
        return self.nist_only + self.eu_only + self.both + self.other

    @property
    def combined(self) -> int:
        return self.nist_only + self.eu_only + self.both

    @property
    def nist_only_pct(self) -> int:
        return display_percent(self.nist_only, self.total)

    @property
    def eu_only_pct(self) -> int:
        return display_percent(self.eu_only, self.total)

    @property
    def both_pct(self) -> int:
        return display_percent(self.both, self.total)

    @property
    def other_pct(self) -> int:
        return display_percent(self.other, self.total)

    @property
    def combined_pct(self) -> int:
        return display_percent(self.combined, self.total)

    def to_dict(self) -> dict[str, Any]:
        return {
            "counts": {
                "nist_only": self.nist_only,
                "eu_only": self.eu_only,
                "both": self.both,
                "other": self.other,
                "combined": self.combined,
                "total": self.total,
            },
            "shares_pct": {
                "nist_only": self.nist_only_pct,
                "eu_only": self.eu_only_pct,
                "both": self.both_pct,
                "combined": self.combined_pct,
            },
        }


def provenance_stats(bank: BankManifest) -> ProvenanceStats:
    nist_only = eu_only = both = other = 0
    for q in bank.questions:
        has_eu = Provenance.EU_AI_ACT in q.provenance
        has_nist = Provenance.NIST in q.provenance
        if has_eu and has_nist:
            both += 1
        elif has_eu:
            eu_only += 1
        elif has_nist:
            nist_only += 1
        else:
            other += 1
    return ProvenanceStats(nist_only=nist_only, eu_only=eu_only, both=both, other=other)


def mapping_matrix(bank: BankManifest) -> list[list[int]]:
    """8x12 grid: cell (principle, topic) counts the sub-questions under that
    principle tagged with that topic."""
    topics = list(EsgTopic)
    matrix = [[0] * len(topics) for _ in PRINCIPLES]
    for q in bank.questions:
        row = PRINCIPLE_ORDER[q.principle]
        for topic in q.esg_topics:
            matrix[row][topics.index(topic)] += 1
    return matrix
