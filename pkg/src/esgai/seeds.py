"""Access to the bundled datasets: two question banks and the sector
use-case seed list (9 sectors, 3 use cases each).

Seed profiles are skeletons: regulatory flags are pre-populated, impact
marks start as not-applicable and the scope as industry, ready for an
analyst to fill in. Their default materiality is computed from that
starting state.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .bank import BankManifest, load_bank
from .model import (
    DEFAULT_CONFIG,
    NON_GOVERNANCE_TOPICS,
    ImpactMark,
    ImpactScope,
    RegulatoryFlag,
    ScoringConfig,
    UseCaseProfile,
)
from .scoring import impact_level, materiality


def _read_data(name: str) -> str:
    return resources.files("esgai.data").joinpath(name).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def sample_bank() -> BankManifest:
    return load_bank(json.loads(_read_data("sample_bank.json")))


@lru_cache(maxsize=None)
def complete_bank() -> BankManifest:
    return load_bank(json.loads(_read_data("complete_bank.json")))


def shipped_banks() -> dict[str, BankManifest]:
    banks = [sample_bank(), complete_bank()]
    return {b.version: b for b in banks}


def seed_use_cases(cfg: ScoringConfig | None = None) -> list[UseCaseProfile]:
    """The 27 bundled use-case skeletons with computed default materiality."""
    cfg = cfg or DEFAULT_CONFIG
    profiles = []
    for record in json.loads(_read_data("seed_use_cases.json")):
        marks = {t: ImpactMark.NOT_APPLICABLE for t in NON_GOVERNANCE_TOPICS}
        scope = ImpactScope.INDUSTRY
        flag = RegulatoryFlag(record["regulatory_flag"])
        _, level = impact_level(marks)
        breakdown = materiality(flag, level, scope, cfg)
        profiles.append(
            UseCaseProfile(
                sector=record["sector"],
                name=record["name"],
                description=record["description"],
                regulatory_flag=flag,
                impact_marks=marks,
                impact_scope=scope,
                materiality_default=breakdown.level,
            )
        )
    return profiles
