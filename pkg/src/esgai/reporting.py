"""Report rendering: deterministic tables in CSV, markdown and JSON.

Reports are recomputable: the JSON bundle carries sha256 hashes of its
inputs, and every level in a table can be re-derived by feeding the row's
raw inputs back through the scoring rules. CSV renders exactly one section
(CSV is a single table); markdown renders all sections with tables that
mirror the CSV cell-for-cell; JSON renders the full bundle.

CSV dialect: comma-separated, every field quoted, UTF-8, LF newlines,
header row always present.

Scores are computed in full precision and only rounded (two decimals,
trailing zeros trimmed) at this display boundary.
"""

from __future__ import annotations

import csv
import io
from typing import Any, Mapping, Sequence

from .bank import BankManifest, PRINCIPLE_NAMES, PRINCIPLES, mapping_matrix, provenance_stats
from .errors import DomainError
from .model import EsgTopic, RegulatoryFlag, sha256_of
from .scoring import score_profile
from .store import Session

#: Marker for rows that need analyst follow-up (undetermined regulatory
#: flags, undisclosed mandatory metrics).
ACTION_MARKER = "▲"

SESSION_SECTIONS = ("materiality", "governance", "deep-dive", "metrics")
BANK_SECTIONS = ("mapping", "provenance")
FORMATS = ("json", "csv", "markdown")


def fmt_number(value: float) -> str:
    """Two-decimal display with trailing zeros trimmed; classification never
    uses this rounded form."""
    text = f"{value:.2f}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


# ---------------------------------------------------------------------------
# Section tables (header + string rows)
# ---------------------------------------------------------------------------

def materiality_table(session: Session) -> dict[str, Any]:
    header = [
        "sector", "use_case", "flag", "N", "impact_level", "scope",
        "F", "default", "adjusted", "overridden", "action",
    ]
    rows = []
    for profile in session.use_case_profiles:
        score = score_profile(profile, session.config)
        overridden = profile.materiality_adjusted is not None
        rows.append([
            profile.sector,
            profile.name,
            profile.regulatory_flag.value,
            str(score.impacted_topics),
            score.impact_level.value,
            profile.impact_scope.value,
            fmt_number(score.breakdown.total),
            profile.materiality_default.value,
            (profile.materiality_adjusted or profile.materiality_default).value,
            "yes" if overridden else "no",
            ACTION_MARKER if profile.regulatory_flag is RegulatoryFlag.NOT_DETERMINED else "",
        ])
    return {"header": header, "rows": rows}


def governance_table(session: Session) -> dict[str, Any]:
    assessment = session.governance
    header = ["company"]
    if assessment is not None:
        header += [j.indicator for j in assessment.judgments]
    else:
        from .model import GOVERNANCE_INDICATOR_IDS

        header += list(GOVERNANCE_INDICATOR_IDS)
    header += ["F", "level"]
    rows = []
    if assessment is not None:
        rows.append(
            [assessment.company]
            + ["yes" if j.met else "no" for j in assessment.judgments]
            + [fmt_number(assessment.score), assessment.level.value]
        )
    return {"header": header, "rows": rows}


def deep_dive_table(session: Session, bank: BankManifest | None = None) -> dict[str, Any]:
    header = ["principle", "name", "answered", "average", "suggested", "final", "overridden", "evidence_excerpt"]
    rows = []
    assessment = session.deep_dive
    if assessment is None:
        return {"header": header, "rows": rows}
    # per-principle answer tallies need the bank to resolve question ids;
    # without it those cells render empty
    answered_by_principle: dict[str, int] = {}
    excerpt_by_principle: dict[str, str] = {}
    if bank is not None:
        for q in bank.questions:
            answer = assessment.answers.get(q.id)
            if answer is None:
                continue
            answered_by_principle[q.principle] = answered_by_principle.get(q.principle, 0) + 1
            evidence = answer.evidence.strip()
            if evidence and q.principle not in excerpt_by_principle:
                excerpt_by_principle[q.principle] = evidence[:80]
    for principle in PRINCIPLES:
        result = assessment.principle_results.get(principle.id)
        if result is None:
            continue
        answered = answered_by_principle.get(principle.id)
        rows.append([
            principle.id,
            PRINCIPLE_NAMES[principle.id],
            str(answered) if answered is not None else "",
            fmt_number(result.average),
            result.suggested_level.value,
            result.final_level.value,
            "yes" if result.final_level is not result.suggested_level else "no",
            excerpt_by_principle.get(principle.id, ""),
        ])
    return {"header": header, "rows": rows}


def metrics_table(session: Session, bank: BankManifest) -> dict[str, Any]:
    """Disclosure status of every metric the bank marks as mandatory for
    high-risk or foundation-model AI. A metric counts as covered once any
    sub-question referencing it is answered above not-disclosed."""
    header = ["metric", "name", "mandatory_for", "status", "action"]
    rows = []
    answers = session.deep_dive.answers if session.deep_dive else {}
    for metric in bank.metrics:
        if not metric.mandatory_for:
            continue
        referencing = [q.id for q in bank.questions if metric.id in q.metrics]
        covered = any(answers[qid].value >= 1 for qid in referencing if qid in answers)
        rows.append([
            metric.id,
            metric.name,
            ",".join(sorted(c.value for c in metric.mandatory_for)),
            "covered" if covered else "gap",
            "" if covered else ACTION_MARKER,
        ])
    return {"header": header, "rows": rows}


def mapping_table(bank: BankManifest) -> dict[str, Any]:
    header = ["principle"] + [t.value for t in EsgTopic]
    matrix = mapping_matrix(bank)
    rows = [[p.id] + [str(cell) for cell in row] for p, row in zip(PRINCIPLES, matrix)]
    return {"header": header, "rows": rows}


def provenance_table(bank: BankManifest) -> dict[str, Any]:
    stats = provenance_stats(bank)
    header = ["group", "count", "share_pct"]
    rows = [
        ["nist-only", str(stats.nist_only), str(stats.nist_only_pct)],
        ["eu-only", str(stats.eu_only), str(stats.eu_only_pct)],
        ["both", str(stats.both), str(stats.both_pct)],
        ["other", str(stats.other), str(stats.other_pct)],
        ["combined", str(stats.combined), str(stats.combined_pct)],
        ["total", str(stats.total), "100" if stats.total else "0"],
    ]
    return {"header": header, "rows": rows}


# ---------------------------------------------------------------------------
# Bundles and rendering
# ---------------------------------------------------------------------------

def report_bundle(
    target: Session | BankManifest,
    bank: BankManifest | None = None,
) -> dict[str, Any]:
    """Full machine-readable report with input hashes."""
    if isinstance(target, Session):
        sections: dict[str, Any] = {
            "materiality": materiality_table(target),
            "governance": governance_table(target),
            "deep-dive": deep_dive_table(target, bank),
        }
        if bank is not None:
            sections["metrics"] = metrics_table(target, bank)
        inputs: dict[str, Any] = {
            "session": {"id": target.id, "revision": target.revision, "sha256": sha256_of(target.to_dict())},
            "config_sha256": sha256_of(target.config.to_dict()),
        }
        if bank is not None:
            inputs["bank"] = {"version": bank.version, "sha256": sha256_of(bank.to_dict())}
        return {"kind": "session", "inputs": inputs, "sections": sections}

    if isinstance(target, BankManifest):
        return {
            "kind": "bank",
            "inputs": {"bank": {"version": target.version, "sha256": sha256_of(target.to_dict())}},
            "sections": {
                "mapping": mapping_table(target),
                "provenance": provenance_table(target),
            },
        }
    raise DomainError("report.target", f"cannot report on {type(target).__name__}")


def render(
    target: Session | BankManifest,
    fmt: str = "markdown",
    section: str | None = None,
    bank: BankManifest | None = None,
) -> str:
    if fmt not in FORMATS:
        raise DomainError("report.format", f"unsupported format {fmt!r}", details={"allowed": list(FORMATS)})
    bundle = report_bundle(target, bank=bank)
    sections = bundle["sections"]
    if section is not None and section not in sections:
        raise DomainError("report.section", f"unknown section {section!r}", details={"allowed": list(sections)})

    if fmt == "json":
        import json

        if section is not None:
            bundle = {**bundle, "sections": {section: sections[section]}}
        return json.dumps(bundle, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    if fmt == "csv":
        chosen = section or ("materiality" if bundle["kind"] == "session" else "mapping")
        return _csv_table(sections[chosen])

    parts = []
    wanted = [section] if section else list(sections)
    for name in wanted:
        parts.append(f"## {name}")
        parts.append(_markdown_table(sections[name]))
    parts.append(f"inputs: {_inputs_line(bundle['inputs'])}")
    return "\n\n".join(parts) + "\n"


def _csv_table(table: Mapping[str, Any]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, quoting=csv.QUOTE_ALL, lineterminator="\n")
    writer.writerow(table["header"])
    for row in table["rows"]:
        writer.writerow(row)
    return out.getvalue()


def _markdown_table(table: Mapping[str, Any]) -> str:
    header: Sequence[str] = table["header"]
    lines = [
        "| " + " | ".join(header) + " |",
        "| " + " | ".join("---" for _ in header) + " |",
    ]
    for row in table["rows"]:
        lines.append("| " + " | ".join(row) + " |")
    return "\n".join(lines)


def _inputs_line(inputs: Mapping[str, Any]) -> str:
    bits = []
    if "session" in inputs:
        bits.append(f"session {inputs['session']['id']}@r{inputs['session']['revision']} sha256:{inputs['session']['sha256'][:12]}")
    if "bank" in inputs:
        bits.append(f"bank {inputs['bank']['version']} sha256:{inputs['bank']['sha256'][:12]}")
    if "config_sha256" in inputs:
        bits.append(f"config sha256:{inputs['config_sha256'][:12]}")
    return ", ".join(bits)
