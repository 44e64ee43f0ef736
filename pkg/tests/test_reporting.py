"""Report rendering: structure, determinism, and round-trip fidelity."""

import csv
import io
import json

import pytest

from esgai import reporting, seeds, workflow
from esgai.errors import DomainError
from esgai.model import (
    GOVERNANCE_INDICATOR_IDS,
    ImpactLevel,
    ImpactScope,
    RegulatoryFlag,
    ScoringConfig,
)
from esgai.scoring import materiality
from esgai.store import SessionStore

# The expected principle-by-topic grid, stated cell for cell.
EXPECTED_GRID = {
    "HSE": [3, 3, 3, 4, 4, 4, 3, 3, 3, 1, 1, 2],
    "HV": [0, 0, 0, 4, 4, 4, 4, 4, 4, 1, 2, 1],
    "FAR": [0, 0, 0, 4, 3, 2, 1, 0, 0, 0, 0, 1],
    "PRV": [0, 0, 0, 0, 4, 2, 4, 6, 0, 0, 4, 0],
    "REL": [0, 1, 1, 1, 1, 0, 2, 4, 1, 2, 1, 0],
    "TRN": [0, 0, 0, 0, 0, 6, 6, 0, 0, 0, 1, 6],
    "CON": [0, 0, 1, 1, 2, 1, 1, 0, 1, 0, 0, 0],
    "ACC": [1, 1, 1, 1, 1, 2, 1, 1, 1, 4, 5, 2],
}


@pytest.fixture
def store(tmp_path):
    return SessionStore(tmp_path / "store")


@pytest.fixture
def seed_session(store):
    return store.create_session(
        company="acme",
        bank_version="complete-1.0",
        config=ScoringConfig(),
        use_case_profiles=seeds.seed_use_cases(),
        session_id="s-report",
    )


def parse_csv(text):
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


class TestMaterialityMatrix:
    def test_seed_matrix_has_27_rows_and_expected_columns(self, seed_session):
        header, rows = parse_csv(reporting.render(seed_session, "csv", section="materiality"))
        assert header == [
            "sector", "use_case", "flag", "N", "impact_level", "scope",
            "F", "default", "adjusted", "overridden", "action",
        ]
        assert len(rows) == 27

    def test_not_determined_rows_flagged_for_follow_up(self, seed_session):
        _, rows = parse_csv(reporting.render(seed_session, "csv", section="materiality"))
        flagged = [r for r in rows if r[10] == reporting.ACTION_MARKER]
        assert len(flagged) == 2
        assert all(r[2] == "not-determined" for r in flagged)

    def test_adjusted_shown_alongside_default(self, store, seed_session):
        workflow.apply_override(
            store, "s-report", "energy/energy-efficiency", "high", "storm exposure", actor="lee"
        )
        session = store.get_session("s-report")
        _, rows = parse_csv(reporting.render(session, "csv", section="materiality"))
        row = next(r for r in rows if r[1] == "Energy efficiency" and r[0] == "Energy")
        assert row[7] == "medium"   # default survives
        assert row[8] == "high"    # adjusted beside it
        assert row[9] == "yes"
        untouched = next(r for r in rows if r[1] == "Fraud detection" and r[0] == "Financials")
        assert untouched[8] == untouched[7]
        assert untouched[9] == "no"

    def test_fidelity_levels_recompute_from_row_inputs(self, seed_session):
        _, rows = parse_csv(reporting.render(seed_session, "csv", section="materiality"))
        cfg = seed_session.config
        for row in rows:
            flag = RegulatoryFlag(row[2])
            impact = ImpactLevel(row[4])
            scope = ImpactScope(row[5])
            breakdown = materiality(flag, impact, scope, cfg)
            assert reporting.fmt_number(breakdown.total) == row[6]
            assert breakdown.level.value == row[7]

    def test_empty_session_reports_zero_rows(self, store):
        empty = store.create_session(
            company="none", bank_version="sample-1.0", config=ScoringConfig(),
            use_case_profiles=[], session_id="s-empty",
        )
        header, rows = parse_csv(reporting.render(empty, "csv"))
        assert rows == []
        assert header[0] == "sector"


class TestDeterminism:
    def test_renders_are_byte_identical(self, seed_session):
        bank = seeds.complete_bank()
        for fmt in ("json", "csv", "markdown"):
            a = reporting.render(seed_session, fmt, bank=bank)
            b = reporting.render(seed_session, fmt, bank=bank)
            assert a == b
        assert reporting.render(bank, "csv") == reporting.render(bank, "csv")

    def test_markdown_mirrors_csv_cell_for_cell(self, seed_session):
        header, rows = parse_csv(reporting.render(seed_session, "csv", section="materiality"))
        markdown = reporting.render(seed_session, "markdown", section="materiality")
        lines = [l for l in markdown.splitlines() if l.startswith("|")]
        md_header = [c.strip() for c in lines[0].strip("|").split("|")]
        assert md_header == header
        md_rows = [[c.strip() for c in line.strip("|").split("|")] for line in lines[2:]]
        assert md_rows == rows


class TestBankReports:
    def test_mapping_csv_equals_expected_grid(self):
        header, rows = parse_csv(reporting.render(seeds.complete_bank(), "csv", section="mapping"))
        assert header == ["principle", "E1", "E2", "E3", "S1", "S2", "S3", "S4", "S5", "S6", "G1", "G2", "G3"]
        assert len(rows) == 8
        for row in rows:
            assert [int(c) for c in row[1:]] == EXPECTED_GRID[row[0]]

    def test_provenance_section(self):
        header, rows = parse_csv(reporting.render(seeds.complete_bank(), "csv", section="provenance"))
        table = {r[0]: (int(r[1]), int(r[2])) for r in rows}
        assert table["nist-only"] == (6, 14)
        assert table["eu-only"] == (10, 24)
        assert table["both"] == (12, 29)
        assert table["combined"] == (28, 67)
        assert table["total"] == (42, 100)


class TestSessionSections:
    def test_governance_section(self, store, seed_session):
        judgments = [
            {"indicator": ind, "met": i < 5, "evidence": ""}
            for i, ind in enumerate(GOVERNANCE_INDICATOR_IDS)
        ]
        workflow.set_governance(store, "s-report", judgments, actor="lee")
        session = store.get_session("s-report")
        header, rows = parse_csv(reporting.render(session, "csv", section="governance"))
        assert header == ["company"] + list(GOVERNANCE_INDICATOR_IDS) + ["F", "level"]
        assert rows[0][0] == "acme"
        assert rows[0][-2:] == ["5", "medium"]
        assert rows[0][1:11].count("yes") == 5

    def test_deep_dive_and_metrics_sections(self, store, seed_session):
        bank = seeds.complete_bank()
        workflow.record_answers(
            store, "s-report", bank,
            {
                "q-hse-1": {"value": 4, "evidence": "sustainability report p.12"},
                "q-hse-2": {"value": 0},
                "q-acc-1": {"value": 3, "evidence": "risk framework"},
            },
            actor="lee",
        )
        session = store.get_session("s-report")
        header, rows = parse_csv(reporting.render(session, "csv", section="deep-dive", bank=bank))
        by_principle = {r[0]: r for r in rows}
        assert by_principle["HSE"][2] == "2"
        assert by_principle["HSE"][3] == "2"
        assert by_principle["HSE"][4] == "weak"
        assert by_principle["HSE"][7].startswith("sustainability report")
        assert by_principle["ACC"][3] == "3"

        header, rows = parse_csv(reporting.render(session, "csv", section="metrics", bank=bank))
        status = {r[0]: (r[3], r[4]) for r in rows}
        assert len(rows) == 6  # the externally mandated metrics
        assert status["energy-usage"] == ("covered", "")
        assert status["ghg-emissions"] == ("gap", reporting.ACTION_MARKER)
        assert status["training-time"] == ("gap", reporting.ACTION_MARKER)

    def test_json_bundle_carries_input_hashes(self, seed_session):
        bank = seeds.complete_bank()
        bundle = json.loads(reporting.render(seed_session, "json", bank=bank))
        assert bundle["kind"] == "session"
        assert len(bundle["inputs"]["session"]["sha256"]) == 64
        assert len(bundle["inputs"]["bank"]["sha256"]) == 64
        assert set(bundle["sections"]) == {"materiality", "governance", "deep-dive", "metrics"}


class TestRenderErrors:
    def test_unsupported_format(self, seed_session):
        with pytest.raises(DomainError) as err:
            reporting.render(seed_session, "pdf")
        assert err.value.code == "report.format"

    def test_unknown_section(self, seed_session):
        with pytest.raises(DomainError) as err:
            reporting.render(seed_session, "csv", section="heatmap")
        assert err.value.code == "report.section"


class TestNumberFormat:
    @pytest.mark.parametrize(
        "value,expected",
        [(3.0, "3"), (0.5, "0.5"), (0.909090909, "0.91"), (1.25, "1.25"), (0.0, "0"), (-0.0, "0"), (10.10, "10.1")],
    )
    def test_two_decimal_trimmed(self, value, expected):
        assert reporting.fmt_number(value) == expected
