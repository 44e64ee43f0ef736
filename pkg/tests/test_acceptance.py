"""Acceptance suite: one test per release criterion, each printing a PASS
line with the checked bound. Oracles are restated locally so the suite is
self-contained.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import itertools
import json
import random
import time

import pytest

from esgai import reporting, seeds
from esgai.bank import FilterCriteria, Obligation, SystemCategory, filter_questions, load_bank, mapping_matrix, provenance_stats
from esgai.cli import main as cli_main
from esgai.errors import ValidationError
from esgai.model import (
    NON_GOVERNANCE_TOPICS,
    EsgTopic,
    ImpactLevel,
    ImpactMark,
    ImpactScope,
    MaterialityLevel,
    RegulatoryFlag,
    ScoringConfig,
)
from esgai import scoring
from esgai.scoring import override_materiality
from esgai.store import SessionStore


def ok(line: str) -> None:
    print(f"ACCEPTANCE PASS: {line}")


def marks_with(n):
    return {
        t: (ImpactMark.NEGATIVE if i < n else ImpactMark.NOT_APPLICABLE)
        for i, t in enumerate(NON_GOVERNANCE_TOPICS)
    }


def test_impact_level_classifier_exact_and_randomized():
    start = time.perf_counter()
    for n in range(10):
        got_n, level = scoring.impact_level(marks_with(n))
        expected = "low" if n <= 3 else ("medium" if n <= 7 else "high")
        assert got_n == n
        assert level.value == expected

    rng = random.Random(424242)
    pool = list(ImpactMark)
    for _ in range(1000):
        vector = {t: rng.choice(pool) for t in NON_GOVERNANCE_TOPICS}
        expected_n = sum(1 for m in vector.values() if m is not ImpactMark.NOT_APPLICABLE)
        got_n, level = scoring.impact_level(vector)
        assert got_n == expected_n
        expected = "low" if expected_n <= 3 else ("medium" if expected_n <= 7 else "high")
        assert level.value == expected
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    ok(f"impact-level classifier exact for N=0..9 and 1000 random mark vectors ({elapsed:.3f}s < 1s)")


def test_materiality_oracle_equivalence_and_rescaling():
    risk = {"unacceptable": 1.5, "high": 1.0, "medium": 0.5, "not-determined": 0.5, "low": 0.0}
    impact = {"high": 1.0, "medium": 0.5, "low": 0.0}
    scope = {"systemic": 1.0, "industry": 0.5}

    def oracle(f, t_high, t_low):
        if f >= t_high:
            return "high"
        if t_low <= f < t_high:
            return "medium"
        return "low"

    start = time.perf_counter()
    combos = list(itertools.product(RegulatoryFlag, ImpactLevel, ImpactScope))
    assert len(combos) == 30
    base = ScoringConfig()
    baseline_levels = []
    for flag, ilevel, iscope in combos:
        b = scoring.materiality(flag, ilevel, iscope, base)
        f = risk[flag.value] + impact[ilevel.value] + scope[iscope.value]
        assert b.level.value == oracle(f, 2.0, 1.0)
        baseline_levels.append(b.level)

    for c in (0.5, 2.0, 10.0):
        scaled = ScoringConfig(use_case_weights=(c, c, c), t_high=2.0 * c, t_low=1.0 * c)
        for combo, expected_level in zip(combos, baseline_levels):
            assert scoring.materiality(*combo, scaled).level is expected_level
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    ok(f"materiality matches brute-force oracle on all 30 combos; levels invariant under joint rescaling x0.5/x2/x10 ({elapsed:.3f}s < 1s)")


def test_governance_oracle_equivalence_and_boundaries():
    def oracle(f):
        if f >= 8:
            return "high"
        if 3 < f <= 7:
            return "medium"
        return "low"

    start = time.perf_counter()
    cfg = ScoringConfig()
    for bits in itertools.product([False, True], repeat=10):
        f, level = scoring.governance_score(bits, cfg)
        assert f == sum(bits)
        assert level.value == oracle(sum(bits))
    assert scoring.governance_level_for(3).value == "low"
    assert scoring.governance_level_for(8).value == "high"
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    ok(f"governance level matches brute-force classifier on all 1024 indicator vectors; F=3 low, F=8 high ({elapsed:.3f}s < 1s)")


def test_rubric_bands_and_final_level_boundaries():
    bands = [scoring.rubric_band(v).value for v in range(6)]
    assert bands == ["not-disclosed", "minimal", "moderate", "moderate", "moderate", "comprehensive"]

    assert scoring.final_level_for(1.5).value == "weak"
    assert scoring.final_level_for(3.0).value == "moderate"
    assert scoring.final_level_for(4.5).value == "strong"
    assert scoring.final_level_for(1.4999999).value == "unacceptable"
    assert scoring.final_level_for(2.9999999).value == "weak"
    assert scoring.final_level_for(4.4999999).value == "moderate"

    rng = random.Random(90210)
    for _ in range(10_000):
        values = [rng.randint(0, 5) for _ in range(rng.randint(1, 15))]
        average, level = scoring.principle_result(values)
        assert average == pytest.approx(sum(values) / len(values))
        memberships = [average >= 4.5, 3 <= average < 4.5, 1.5 <= average < 3, average < 1.5]
        assert sum(memberships) == 1
        expected = ["strong", "moderate", "weak", "unacceptable"][memberships.index(True)]
        assert level.value == expected
    ok("rubric bands exact for 0..5; final-level boundaries inclusive at 1.5/3/4.5; 10000 random score lists partition once and agree with recomputed means")


def test_seed_dataset_reproduces_published_distribution():
    profiles = seeds.seed_use_cases()
    assert len(profiles) == 27
    sectors = {}
    for p in profiles:
        sectors.setdefault(p.sector, []).append(p)
    assert len(sectors) == 9
    assert all(len(v) == 3 for v in sectors.values())

    high = [p for p in profiles if p.regulatory_flag is RegulatoryFlag.HIGH]
    assert sorted(p.sector for p in high) == ["Energy", "Energy", "Health care", "Health care"]
    nd = [p for p in profiles if p.regulatory_flag is RegulatoryFlag.NOT_DETERMINED]
    assert len(nd) == 2 and {p.sector for p in nd} == {"Information technology"}
    assert sum(1 for p in profiles if p.regulatory_flag is RegulatoryFlag.UNACCEPTABLE) == 0
    assert sum(1 for p in profiles if p.regulatory_flag is RegulatoryFlag.LOW) == 0
    ok("seed dataset: 27 use cases in 9 sectors; 4 high flags (2 Energy, 2 Health care), 2 not-determined (IT), no unacceptable, no low")


def test_bank_rules():
    sample = seeds.sample_bank()
    assert sample.completeness.value == "sample"

    complete = seeds.complete_bank()
    assert (len(complete.questions), len(complete.metrics), len(complete.key_questions),
            len(set(complete.indicators))) == (42, 43, 8, 27)

    broken = complete.to_dict()
    broken["questions"] = broken["questions"][:41]
    with pytest.raises(ValidationError):
        load_bank(broken)

    hr = filter_questions(complete, FilterCriteria(system_category=SystemCategory.HIGH_RISK))
    hr_mandatory = sum(1 for q in hr if q.obligation_for(SystemCategory.HIGH_RISK) is Obligation.MANDATORY)
    assert (hr_mandatory, len(hr) - hr_mandatory) == (17, 5)

    fm = filter_questions(complete, FilterCriteria(system_category=SystemCategory.FOUNDATION_MODEL))
    fm_mandatory = sum(1 for q in fm if q.obligation_for(SystemCategory.FOUNDATION_MODEL) is Obligation.MANDATORY)
    assert (fm_mandatory, len(fm) - fm_mandatory) == (13, 8)

    for bank in (sample, complete):
        carbon = filter_questions(bank, FilterCriteria(esg_topic=EsgTopic.E1))
        assert len(carbon) == 4
        assert [q.principle for q in carbon[:3]] == ["HSE", "HSE", "HSE"]
    ok("bank rules: sample validates; complete enforces 42/43/8/27; high-risk 17+5; foundation-model 13+8; carbon filter returns 4 (first three HSE)")


def test_provenance_shares_round_half_up():
    stats = provenance_stats(seeds.complete_bank())
    assert (stats.nist_only, stats.eu_only, stats.both, stats.other) == (6, 10, 12, 14)
    assert stats.total == 42
    assert stats.nist_only_pct == 14
    assert stats.eu_only_pct == 24
    assert stats.both_pct == 29
    assert stats.combined == 28
    assert stats.combined_pct == 67
    ok("provenance counts 6/10/12/14 over 42 display as 14%/24%/29% with 67% combined under round-half-up")


def test_principle_topic_grid_cell_for_cell():
    expected = {
        "HSE": [3, 3, 3, 4, 4, 4, 3, 3, 3, 1, 1, 2],
        "HV": [0, 0, 0, 4, 4, 4, 4, 4, 4, 1, 2, 1],
        "FAR": [0, 0, 0, 4, 3, 2, 1, 0, 0, 0, 0, 1],
        "PRV": [0, 0, 0, 0, 4, 2, 4, 6, 0, 0, 4, 0],
        "REL": [0, 1, 1, 1, 1, 0, 2, 4, 1, 2, 1, 0],
        "TRN": [0, 0, 0, 0, 0, 6, 6, 0, 0, 0, 1, 6],
        "CON": [0, 0, 1, 1, 2, 1, 1, 0, 1, 0, 0, 0],
        "ACC": [1, 1, 1, 1, 1, 2, 1, 1, 1, 4, 5, 2],
    }
    matrix = mapping_matrix(seeds.complete_bank())
    order = ["HSE", "HV", "FAR", "PRV", "REL", "TRN", "CON", "ACC"]
    checked = 0
    for pid, row in zip(order, matrix):
        for got, want in zip(row, expected[pid]):
            assert got == want, (pid, row, expected[pid])
            checked += 1
    assert checked == 96
    assert expected["ACC"][-3:] == [4, 5, 2]
    assert matrix[order.index("PRV")][list(EsgTopic).index(EsgTopic.S5)] == 6
    ok("principle-by-topic grid equals the published mapping cell for cell (96 cells, ACC row ends 4/5/2, PRV-S5=6)")


def test_determinism_and_durability(tmp_path, capsys):
    store_dir = tmp_path / "store"
    store = SessionStore(store_dir)
    session = store.create_session(
        company="acme", bank_version="complete-1.0", config=ScoringConfig(),
        use_case_profiles=seeds.seed_use_cases(), session_id="s-accept",
    )

    # identical inputs render byte-identically through the real CLI
    argv = ["--store", str(store_dir), "report", "s-accept", "--format", "csv"]
    assert cli_main(argv) == 0
    first = capsys.readouterr().out
    assert cli_main(argv) == 0
    second = capsys.readouterr().out
    assert first == second and len(first) > 0

    # an override keeps the default and lands in the audit trail
    profile = session.profile_by_id("energy/energy-efficiency")
    updated, draft = override_materiality(profile, MaterialityLevel.HIGH, "grid concentration", actor="lee")
    store.save_session(session.with_profile(updated), expected_revision=1, audit=[draft])

    # a fresh store instance on the same directory sees identical state
    reopened = SessionStore(store_dir)
    loaded = reopened.get_session("s-accept")
    assert loaded.to_dict() == store.get_session("s-accept").to_dict()
    survivor = loaded.profile_by_id("energy/energy-efficiency")
    assert survivor.materiality_default is MaterialityLevel.MEDIUM
    assert survivor.materiality_adjusted is MaterialityLevel.HIGH
    log = reopened.audit_log("s-accept")
    assert len(log) == 1 and log[0].before["level"] == "medium" and log[0].after["level"] == "high"
    ok("report runs are byte-identical; sessions round-trip across restart; overrides preserve the default and the audit entry")
