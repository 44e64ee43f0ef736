"""Domain type invariants and the JSON codec."""

import pytest

from esgai.errors import ValidationError
from esgai.model import (
    GOVERNANCE_INDICATOR_IDS,
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
    Pillar,
    PrincipleResult,
    RegulatoryFlag,
    RubricScore,
    ScoringConfig,
    UseCaseProfile,
    use_case_id,
    validate,
)


def full_marks(mark=ImpactMark.NOT_APPLICABLE):
    return {t: mark for t in NON_GOVERNANCE_TOPICS}


def make_profile(**overrides):
    base = dict(
        sector="Financials",
        name="Fraud detection",
        description="Detect and prevent fraud.",
        regulatory_flag=RegulatoryFlag.MEDIUM,
        impact_marks=full_marks(ImpactMark.POSITIVE),
        impact_scope=ImpactScope.INDUSTRY,
        materiality_default=MaterialityLevel.MEDIUM,
    )
    base.update(overrides)
    return UseCaseProfile(**base)


def make_governance():
    return GovernanceAssessment(
        company="acme",
        judgments=tuple(
            IndicatorJudgment(indicator=i, met=(k % 2 == 0), evidence=f"note {k}")
            for k, i in enumerate(GOVERNANCE_INDICATOR_IDS)
        ),
        score=5.0,
        level=GovernanceLevel.MEDIUM,
    )


def make_deep_dive():
    return DeepDiveAssessment(
        company="acme",
        bank_version="complete-1.0",
        answers={"q-hse-1": RubricScore(3, "policy plus process"), "q-acc-1": RubricScore(0)},
        principle_results={
            "HSE": PrincipleResult(average=3.0, suggested_level=FinalLevel.MODERATE, final_level=FinalLevel.MODERATE),
            "ACC": PrincipleResult(
                average=0.0,
                suggested_level=FinalLevel.UNACCEPTABLE,
                final_level=FinalLevel.WEAK,
                override_note="private briefing showed controls exist",
            ),
        },
    )


class TestEnums:
    def test_variant_counts(self):
        assert len(RegulatoryFlag) == 5
        assert len(ImpactMark) == 4
        assert len(ImpactScope) == 2
        assert len(EsgTopic) == 12
        assert len(MaterialityLevel) == len(ImpactLevel) == len(GovernanceLevel) == 3
        assert len(FinalLevel) == 4

    def test_pillar_derived_from_prefix(self):
        assert EsgTopic.E2.pillar is Pillar.ENVIRONMENTAL
        assert EsgTopic.S5.pillar is Pillar.SOCIAL
        assert EsgTopic.G3.pillar is Pillar.GOVERNANCE
        assert len(NON_GOVERNANCE_TOPICS) == 9
        assert all(t.pillar is not Pillar.GOVERNANCE for t in NON_GOVERNANCE_TOPICS)

    def test_topic_parse_accepts_id_and_slug(self):
        assert EsgTopic.parse("E1") is EsgTopic.E1
        assert EsgTopic.parse("carbon-emissions") is EsgTopic.E1
        assert EsgTopic.parse("Carbon emissions") is EsgTopic.E1
        assert EsgTopic.parse("s5") is EsgTopic.S5
        with pytest.raises(ValidationError):
            EsgTopic.parse("water-usage")

    def test_levels_are_distinct_types(self):
        assert MaterialityLevel.HIGH is not ImpactLevel.HIGH
        assert ImpactLevel.HIGH is not GovernanceLevel.HIGH

    def test_mark_glyphs(self):
        assert [m.glyph for m in ImpactMark] == ["+", "-", "+/-", "N/A"]

    def test_unknown_variant_rejected_at_decode(self):
        payload = make_profile().to_dict()
        payload["regulatory_flag"] = "severe"
        violations = validate("use_case_profile", payload)
        assert any(v.code == "enum.unknown" and v.path == "regulatory_flag" for v in violations)


class TestGovernanceRegistry:
    def test_ten_indicators_in_four_categories(self):
        assert len(GOVERNANCE_INDICATORS) == 10
        categories = {}
        for ind in GOVERNANCE_INDICATORS:
            categories.setdefault(ind.category, []).append(ind.id)
        assert len(categories["board-oversight"]) == 2
        assert len(categories["rai-commitment"]) == 3
        assert len(categories["rai-implementation"]) == 4
        assert len(categories["rai-metrics"]) == 1


class TestRoundTrips:
    def test_use_case_profile(self):
        p = make_profile(
            materiality_adjusted=MaterialityLevel.HIGH, override_note="regulator attention"
        )
        assert UseCaseProfile.from_dict(p.to_dict()) == p

    def test_governance_assessment(self):
        g = make_governance()
        assert GovernanceAssessment.from_dict(g.to_dict()) == g

    def test_deep_dive_assessment(self):
        d = make_deep_dive()
        assert DeepDiveAssessment.from_dict(d.to_dict()) == d

    def test_rubric_score(self):
        for value in range(6):
            score = RubricScore(value, evidence=f"e{value}")
            assert RubricScore.from_dict(score.to_dict()) == score

    def test_scoring_config(self):
        cfg = ScoringConfig(use_case_weights=(2.0, 1.0, 0.5), t_high=3.0, t_low=0.5)
        assert ScoringConfig.from_dict(cfg.to_dict()) == cfg


class TestProfileInvariants:
    def test_requires_all_nine_marks(self):
        marks = full_marks()
        del marks[EsgTopic.S6]
        with pytest.raises(ValidationError) as err:
            make_profile(impact_marks=marks)
        assert any(v.code == "impact_marks.count" for v in err.value.violations)

    def test_rejects_governance_topic_marks(self):
        marks = full_marks()
        marks[EsgTopic.G2] = ImpactMark.POSITIVE
        with pytest.raises(ValidationError) as err:
            make_profile(impact_marks=marks)
        assert any(v.code == "impact_marks.topic" for v in err.value.violations)

    def test_override_requires_note(self):
        with pytest.raises(ValidationError) as err:
            make_profile(materiality_adjusted=MaterialityLevel.LOW)
        assert any(v.code == "override.note.required" for v in err.value.violations)

    def test_validate_reports_without_raising(self):
        payload = make_profile().to_dict()
        payload["impact_marks"] = {k: v for k, v in list(payload["impact_marks"].items())[:8]}
        violations = validate("use_case_profile", payload)
        assert [v.code for v in violations] == ["impact_marks.count"]
        assert validate("use_case_profile", make_profile().to_dict()) == []

    def test_use_case_id_is_stable_slug(self):
        assert use_case_id("Health care", "Health research / testing") == "health-care/health-research-testing"


class TestGovernanceInvariants:
    def test_duplicate_indicator_rejected(self):
        payload = make_governance().to_dict()
        payload["judgments"][1]["indicator"] = payload["judgments"][0]["indicator"]
        violations = validate("governance_assessment", payload)
        assert any(v.code == "judgments.duplicate" for v in violations)

    def test_count_enforced(self):
        payload = make_governance().to_dict()
        payload["judgments"] = payload["judgments"][:9]
        violations = validate("governance_assessment", payload)
        assert any(v.code == "judgments.count" for v in violations)

    def test_unknown_indicator_rejected(self):
        payload = make_governance().to_dict()
        payload["judgments"][0]["indicator"] = "board-charisma"
        violations = validate("governance_assessment", payload)
        assert any(v.code == "judgments.unknown_indicator" for v in violations)


class TestRubricScore:
    def test_band_is_pure_function_of_value(self):
        bands = [RubricScore(v).band.value for v in range(6)]
        assert bands == ["not-disclosed", "minimal", "moderate", "moderate", "moderate", "comprehensive"]

    @pytest.mark.parametrize("value", [-1, 6])
    def test_out_of_range(self, value):
        with pytest.raises(ValidationError):
            RubricScore(value)

    def test_decode_recomputes_band(self):
        payload = {"value": 5, "band": "minimal", "evidence": ""}
        # stored band is advisory; the decoded record derives it from value
        assert RubricScore.from_dict(payload).band.value == "comprehensive"


class TestDeepDiveInvariants:
    def test_final_differs_from_suggested_requires_note(self):
        with pytest.raises(ValidationError) as err:
            PrincipleResult(average=2.0, suggested_level=FinalLevel.WEAK, final_level=FinalLevel.MODERATE)
        assert any(v.code == "override.note.required" for v in err.value.violations)

    def test_validate_collects_nested_violations(self):
        payload = make_deep_dive().to_dict()
        payload["answers"]["q-hse-1"]["value"] = 9
        payload["principle_results"]["ACC"]["override_note"] = ""
        violations = validate("deep_dive_assessment", payload)
        codes = {v.code for v in violations}
        assert "rubric.value.range" in codes
        assert "override.note.required" in codes


class TestScoringConfigInvariants:
    def test_threshold_ordering(self):
        with pytest.raises(ValidationError) as err:
            ScoringConfig(t_high=1.0, t_low=2.0)
        assert any(v.code == "config.thresholds" for v in err.value.violations)

    def test_negative_weights_rejected(self):
        with pytest.raises(ValidationError):
            ScoringConfig(use_case_weights=(1.0, -0.5, 1.0))

    def test_encoding_ranges(self):
        with pytest.raises(ValidationError) as err:
            ScoringConfig(
                regulatory_encoding={
                    RegulatoryFlag.UNACCEPTABLE: 2.0,
                    RegulatoryFlag.HIGH: 1.0,
                    RegulatoryFlag.MEDIUM: 0.5,
                    RegulatoryFlag.NOT_DETERMINED: 0.5,
                    RegulatoryFlag.LOW: 0.0,
                }
            )
        assert any(v.code == "config.encoding.range" for v in err.value.violations)

    def test_defaults(self):
        cfg = ScoringConfig()
        assert cfg.use_case_weights == (1.0, 1.0, 1.0)
        assert (cfg.t_high, cfg.t_low) == (2.0, 1.0)
        assert cfg.governance_weights == (1.0,) * 10
        assert cfg.regulatory_encoding[RegulatoryFlag.NOT_DETERMINED] == 0.5
