"""Scoring rules against independently written oracles.

The oracles in this file re-state the level tables directly (lookup dicts
plus if-chains) and never call into the engine's helpers, so an engine bug
cannot hide behind its own logic.
"""

import itertools
import random

import pytest

from esgai.errors import DomainError
from esgai.model import (
    NON_GOVERNANCE_TOPICS,
    AuditAction,
    EsgTopic,
    ImpactLevel,
    ImpactMark,
    ImpactScope,
    MaterialityLevel,
    RegulatoryFlag,
    RubricBand,
    ScoringConfig,
    UseCaseProfile,
    canonical_json,
)
from esgai import scoring

# Independent restatement of the default encodings and thresholds.
ORACLE_RISK = {"unacceptable": 1.5, "high": 1.0, "medium": 0.5, "not-determined": 0.5, "low": 0.0}
ORACLE_IMPACT = {"high": 1.0, "medium": 0.5, "low": 0.0}
ORACLE_SCOPE = {"systemic": 1.0, "industry": 0.5}


def oracle_impact_level(n):
    if n >= 8:
        return "high"
    if 3 < n <= 7:
        return "medium"
    return "low"


def oracle_materiality_level(f, t_high=2.0, t_low=1.0):
    if f >= t_high:
        return "high"
    if t_low <= f < t_high:
        return "medium"
    return "low"


def oracle_governance_level(f):
    if f >= 8:
        return "high"
    if 3 < f < 8:
        return "medium"
    return "low"


def oracle_final_level(avg):
    if avg >= 4.5:
        return "strong"
    if 3 <= avg < 4.5:
        return "moderate"
    if 1.5 <= avg < 3:
        return "weak"
    return "unacceptable"


def marks_with(n_impacted):
    """First n topics marked positive, the rest not applicable."""
    return {
        topic: (ImpactMark.POSITIVE if i < n_impacted else ImpactMark.NOT_APPLICABLE)
        for i, topic in enumerate(NON_GOVERNANCE_TOPICS)
    }


# ---------------------------------------------------------------------------
# Impact level
# ---------------------------------------------------------------------------

class TestImpactLevel:
    def test_all_topics_impacted(self):
        n, level = scoring.impact_level({t: ImpactMark.BOTH for t in NON_GOVERNANCE_TOPICS})
        assert n == 9
        assert level is ImpactLevel.HIGH

    def test_nothing_impacted(self):
        n, level = scoring.impact_level(marks_with(0))
        assert n == 0
        assert level is ImpactLevel.LOW

    @pytest.mark.parametrize("n,expected", [(8, "high"), (7, "medium"), (4, "medium"), (3, "low")])
    def test_boundaries(self, n, expected):
        got_n, level = scoring.impact_level(marks_with(n))
        assert got_n == n
        assert level.value == expected

    def test_every_count_matches_oracle(self):
        for n in range(10):
            _, level = scoring.impact_level(marks_with(n))
            assert level.value == oracle_impact_level(n)

    def test_random_mark_vectors_reduce_to_count(self):
        rng = random.Random(20240901)
        marks_pool = list(ImpactMark)
        for _ in range(1000):
            vector = {t: rng.choice(marks_pool) for t in NON_GOVERNANCE_TOPICS}
            expected_n = sum(1 for m in vector.values() if m.value != "not-applicable")
            n, level = scoring.impact_level(vector)
            assert n == expected_n
            assert level.value == oracle_impact_level(expected_n)

    def test_wrong_topic_set_rejected(self):
        partial = marks_with(9)
        del partial[EsgTopic.E1]
        with pytest.raises(DomainError) as err:
            scoring.impact_level(partial)
        assert err.value.code == "marks.topic_set"

        with_governance = dict(marks_with(9))
        with_governance[EsgTopic.G1] = ImpactMark.POSITIVE
        with pytest.raises(DomainError):
            scoring.impact_level(with_governance)


# ---------------------------------------------------------------------------
# Materiality
# ---------------------------------------------------------------------------

class TestMateriality:
    def test_high_high_systemic(self):
        b = scoring.materiality(
            RegulatoryFlag.HIGH, ImpactLevel.HIGH, ImpactScope.SYSTEMIC, ScoringConfig()
        )
        assert (b.risk_score, b.impact_score, b.scope_score) == (1.0, 1.0, 1.0)
        assert b.total == 3.0
        assert b.level is MaterialityLevel.HIGH

    def test_low_low_industry(self):
        b = scoring.materiality(
            RegulatoryFlag.LOW, ImpactLevel.LOW, ImpactScope.INDUSTRY, ScoringConfig()
        )
        assert b.total == 0.5
        assert b.level is MaterialityLevel.LOW

    def test_exhaustive_combinations_match_oracle(self):
        cfg = ScoringConfig()
        combos = list(itertools.product(RegulatoryFlag, ImpactLevel, ImpactScope))
        assert len(combos) == 30
        for flag, impact, scope in combos:
            b = scoring.materiality(flag, impact, scope, cfg)
            f = ORACLE_RISK[flag.value] + ORACLE_IMPACT[impact.value] + ORACLE_SCOPE[scope.value]
            assert b.total == pytest.approx(f)
            assert b.level.value == oracle_materiality_level(f)

    @pytest.mark.parametrize("c", [0.5, 2.0, 10.0])
    def test_joint_rescaling_leaves_levels_unchanged(self, c):
        base = ScoringConfig()
        scaled = ScoringConfig(use_case_weights=(c, c, c), t_high=2.0 * c, t_low=1.0 * c)
        for flag, impact, scope in itertools.product(RegulatoryFlag, ImpactLevel, ImpactScope):
            assert (
                scoring.materiality(flag, impact, scope, base).level
                is scoring.materiality(flag, impact, scope, scaled).level
            )

    def test_breakdown_total_is_weighted_sum(self):
        cfg = ScoringConfig(use_case_weights=(2.0, 0.5, 3.0), t_high=4.0, t_low=2.0)
        b = scoring.materiality(RegulatoryFlag.UNACCEPTABLE, ImpactLevel.MEDIUM, ImpactScope.SYSTEMIC, cfg)
        assert b.total == pytest.approx(2.0 * 1.5 + 0.5 * 0.5 + 3.0 * 1.0)

    def test_raising_one_encoding_never_lowers_level(self):
        order = {"low": 0, "medium": 1, "high": 2}
        steps = [0.0, 0.25, 0.5, 0.75, 1.0]
        for base_r in steps:
            for base_i in steps:
                for base_s in steps:
                    for axis in ("r", "i", "s"):
                        for bump in (0.1, 0.5):
                            r, i, s = base_r, base_i, base_s
                            if axis == "r":
                                r = min(r + bump, 1.5)
                            elif axis == "i":
                                i = min(i + bump, 1.0)
                            else:
                                s = min(s + bump, 1.0)
                            low = _level_with_encodings(base_r, base_i, base_s)
                            high = _level_with_encodings(r, i, s)
                            assert order[high.value] >= order[low.value]

    def test_threshold_partition_is_total_and_disjoint(self):
        cfg = ScoringConfig()
        grid = [x / 10 for x in range(-5, 41)] + [1.0, 2.0, cfg.t_low, cfg.t_high]
        for f in grid:
            memberships = [f >= 2.0, 1.0 <= f < 2.0, f < 1.0]
            assert sum(memberships) == 1
            expected = ["high", "medium", "low"][memberships.index(True)]
            assert scoring.materiality_level_for(f, cfg).value == expected


def _level_with_encodings(r, i, s):
    cfg = ScoringConfig(
        regulatory_encoding={
            RegulatoryFlag.UNACCEPTABLE: 1.5,
            RegulatoryFlag.HIGH: r,
            RegulatoryFlag.MEDIUM: 0.5,
            RegulatoryFlag.NOT_DETERMINED: 0.5,
            RegulatoryFlag.LOW: 0.0,
        },
        impact_encoding={ImpactLevel.HIGH: i, ImpactLevel.MEDIUM: 0.5, ImpactLevel.LOW: 0.0},
        scope_encoding={ImpactScope.SYSTEMIC: s, ImpactScope.INDUSTRY: 0.5},
    )
    return scoring.materiality(RegulatoryFlag.HIGH, ImpactLevel.HIGH, ImpactScope.SYSTEMIC, cfg).level


# ---------------------------------------------------------------------------
# Materiality override
# ---------------------------------------------------------------------------

def sample_profile(default=MaterialityLevel.MEDIUM):
    return UseCaseProfile(
        sector="Energy",
        name="Energy efficiency",
        description="Demand-side energy management.",
        regulatory_flag=RegulatoryFlag.MEDIUM,
        impact_marks=marks_with(5),
        impact_scope=ImpactScope.INDUSTRY,
        materiality_default=default,
    )


class TestOverride:
    def test_override_preserves_default(self):
        profile = sample_profile(MaterialityLevel.MEDIUM)
        updated, draft = scoring.override_materiality(
            profile, MaterialityLevel.HIGH, "sector regulator signal", actor="lee"
        )
        assert updated.materiality_default is MaterialityLevel.MEDIUM
        assert updated.materiality_adjusted is MaterialityLevel.HIGH
        assert updated.override_note == "sector regulator signal"
        assert draft.action is AuditAction.MATERIALITY_OVERRIDE
        assert draft.before == {"use_case": profile.id, "level": "medium"}
        assert draft.after == {"use_case": profile.id, "level": "high"}
        assert draft.actor == "lee"
        # the original is untouched
        assert profile.materiality_adjusted is None

    def test_override_equal_to_default_is_still_audited(self):
        profile = sample_profile(MaterialityLevel.MEDIUM)
        updated, draft = scoring.override_materiality(
            profile, MaterialityLevel.MEDIUM, "confirmed after review", actor="lee"
        )
        assert updated.materiality_adjusted is MaterialityLevel.MEDIUM
        assert draft.before == draft.after

    def test_empty_note_rejected(self):
        profile = sample_profile()
        with pytest.raises(DomainError) as err:
            scoring.override_materiality(profile, MaterialityLevel.HIGH, "   ", actor="lee")
        assert err.value.code == "override.note.required"


# ---------------------------------------------------------------------------
# Governance score
# ---------------------------------------------------------------------------

class TestGovernance:
    def test_all_met(self):
        f, level = scoring.governance_score([True] * 10, ScoringConfig())
        assert f == 10
        assert level.value == "high"

    def test_exactly_three_met(self):
        f, level = scoring.governance_score([True] * 3 + [False] * 7, ScoringConfig())
        assert f == 3
        assert level.value == "low"

    def test_exactly_five_met(self):
        f, level = scoring.governance_score([True] * 5 + [False] * 5, ScoringConfig())
        assert f == 5
        assert level.value == "medium"

    def test_all_1024_vectors_match_oracle(self):
        cfg = ScoringConfig()
        for bits in itertools.product([False, True], repeat=10):
            f, level = scoring.governance_score(bits, cfg)
            assert f == sum(bits)
            assert level.value == oracle_governance_level(sum(bits))

    def test_boundaries(self):
        assert scoring.governance_level_for(3).value == "low"
        assert scoring.governance_level_for(8).value == "high"
        assert scoring.governance_level_for(7.5).value == "medium"

    def test_partition_total_and_disjoint(self):
        grid = [x / 4 for x in range(0, 45)] + [3.0, 8.0]
        for f in grid:
            memberships = [f >= 8, 3 < f < 8, f <= 3]
            assert sum(memberships) == 1
            expected = ["high", "medium", "low"][memberships.index(True)]
            assert scoring.governance_level_for(f).value == expected

    def test_wrong_count_rejected(self):
        with pytest.raises(DomainError) as err:
            scoring.governance_score([True] * 9, ScoringConfig())
        assert err.value.code == "judgments.count"

    def test_non_unit_weights_have_no_gap(self):
        cfg = ScoringConfig(governance_weights=(0.77,) * 10)
        f, level = scoring.governance_score([True] * 10, cfg)
        assert f == pytest.approx(7.7)
        assert level.value == "medium"


# ---------------------------------------------------------------------------
# Rubric and principle results
# ---------------------------------------------------------------------------

class TestRubric:
    @pytest.mark.parametrize(
        "value,band",
        [
            (0, "not-disclosed"),
            (1, "minimal"),
            (2, "moderate"),
            (3, "moderate"),
            (4, "moderate"),
            (5, "comprehensive"),
        ],
    )
    def test_bands(self, value, band):
        assert scoring.rubric_band(value).value == band

    @pytest.mark.parametrize("value", [-1, 6, 2.5, "3"])
    def test_out_of_range_rejected(self, value):
        with pytest.raises(DomainError):
            scoring.rubric_band(value)


class TestPrincipleResult:
    def test_all_zero(self):
        avg, level = scoring.principle_result([0, 0, 0])
        assert avg == 0.0
        assert level.value == "unacceptable"

    def test_strong_boundary_inclusive(self):
        avg, level = scoring.principle_result([5, 4, 4, 5])
        assert avg == 4.5
        assert level.value == "strong"

    def test_moderate_boundary(self):
        avg, level = scoring.principle_result([3, 3, 3])
        assert avg == 3.0
        assert level.value == "moderate"

    def test_weak_boundary(self):
        avg, level = scoring.principle_result([1, 2])
        assert avg == 1.5
        assert level.value == "weak"

    def test_empty_refused(self):
        with pytest.raises(DomainError) as err:
            scoring.principle_result([])
        assert err.value.code == "principle.no_answers"

    def test_random_lists_match_oracle(self):
        rng = random.Random(7)
        for _ in range(10_000):
            scores = [rng.randint(0, 5) for _ in range(rng.randint(1, 12))]
            avg, level = scoring.principle_result(scores)
            assert avg == pytest.approx(sum(scores) / len(scores))
            memberships = [avg >= 4.5, 3 <= avg < 4.5, 1.5 <= avg < 3, avg < 1.5]
            assert sum(memberships) == 1
            assert level.value == oracle_final_level(avg)

    def test_boundary_partition(self):
        for avg in [0.0, 1.4999, 1.5, 2.9999, 3.0, 4.4999, 4.5, 5.0]:
            assert scoring.final_level_for(avg).value == oracle_final_level(avg)


# ---------------------------------------------------------------------------
# Classification metrics
# ---------------------------------------------------------------------------

class TestClassificationMetrics:
    def test_hand_computed_example(self):
        m = scoring.classification_metrics(tp=50, tn=40, fp=5, fn=5)
        assert m.accuracy == pytest.approx(0.90)
        assert m.precision == pytest.approx(50 / 55)
        assert m.recall == pytest.approx(50 / 55)
        assert m.fscore == pytest.approx(50 / 55)
        assert round(m.precision, 4) == 0.9091

    def test_perfect_classifier(self):
        m = scoring.classification_metrics(tp=10, tn=0, fp=0, fn=0)
        assert m.precision == 1.0
        assert m.recall == 1.0
        assert m.fscore == 1.0

    def test_zero_tp_guards_fscore(self):
        m = scoring.classification_metrics(tp=0, tn=1, fp=2, fn=3)
        assert m.precision == 0.0
        assert m.recall == 0.0
        assert m.fscore is None

    def test_all_zero_input(self):
        m = scoring.classification_metrics(0, 0, 0, 0)
        assert m.accuracy is None
        assert m.precision is None
        assert m.recall is None
        assert m.fscore is None

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            scoring.classification_metrics(-1, 0, 0, 0)


# ---------------------------------------------------------------------------
# Determinism
# ---------------------------------------------------------------------------

def test_identical_inputs_encode_identically():
    cfg = ScoringConfig()
    a = scoring.materiality(RegulatoryFlag.NOT_DETERMINED, ImpactLevel.MEDIUM, ImpactScope.SYSTEMIC, cfg)
    b = scoring.materiality(RegulatoryFlag.NOT_DETERMINED, ImpactLevel.MEDIUM, ImpactScope.SYSTEMIC, cfg)
    assert canonical_json(a.to_dict()) == canonical_json(b.to_dict())
    f1, l1 = scoring.governance_score([True, False] * 5, cfg)
    f2, l2 = scoring.governance_score([True, False] * 5, cfg)
    assert (f1, l1) == (f2, l2)
