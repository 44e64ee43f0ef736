#!/usr/bin/env python3
"""Author the bundled data files.

Builds the sample bank, the synthetic complete bank and the seed use-case
dataset under ``src/esgai/data/``, then re-loads them through the package
loader and asserts every structural expectation (counts, selections, the
principle-by-topic grid, provenance shares) before anything is written.

The complete bank's question wording, indicator names and tag assignments
are synthetic test fixtures; the file's ``notes`` field says so.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from esgai import bank as bank_mod  # noqa: E402
from esgai.model import EsgTopic  # noqa: E402

DATA_DIR = ROOT / "src" / "esgai" / "data"

TOPICS = [t.value for t in EsgTopic]

# Target principle-by-topic tag grid (rows HSE..ACC, columns E1..G3).
TARGET_GRID = {
    "HSE": {"E1": 3, "E2": 3, "E3": 3, "S1": 4, "S2": 4, "S3": 4, "S4": 3, "S5": 3, "S6": 3, "G1": 1, "G2": 1, "G3": 2},
    "HV": {"S1": 4, "S2": 4, "S3": 4, "S4": 4, "S5": 4, "S6": 4, "G1": 1, "G2": 2, "G3": 1},
    "FAR": {"S1": 4, "S2": 3, "S3": 2, "S4": 1, "G3": 1},
    "PRV": {"S2": 4, "S3": 2, "S4": 4, "S5": 6, "G2": 4},
    "REL": {"E2": 1, "E3": 1, "S1": 1, "S2": 1, "S4": 2, "S5": 4, "S6": 1, "G1": 2, "G2": 1},
    "TRN": {"S3": 6, "S4": 6, "G2": 1, "G3": 6},
    "CON": {"E3": 1, "S1": 1, "S2": 2, "S3": 1, "S4": 1, "S6": 1},
    "ACC": {"E1": 1, "E2": 1, "E3": 1, "S1": 1, "S2": 1, "S3": 2, "S4": 1, "S5": 1, "S6": 1, "G1": 4, "G2": 5, "G3": 2},
}

KEY_QUESTIONS = [
    ("kq-hse", "HSE", "Does the company understand and manage the environmental and societal impacts of its AI use?"),
    ("kq-hv", "HV", "Does the company design and operate AI in line with human-centred values?"),
    ("kq-far", "FAR", "Does the company ensure its AI systems produce fair and inclusive outcomes?"),
    ("kq-prv", "PRV", "Does the company protect privacy and security throughout the AI lifecycle?"),
    ("kq-rel", "REL", "Does the company ensure its AI systems operate reliably and safely?"),
    ("kq-trn", "TRN", "Is the company transparent about where and how it uses AI?"),
    ("kq-con", "CON", "Can people contest and seek redress for AI-driven decisions?"),
    ("kq-acc", "ACC", "Does the company have designated responsibility for AI and RAI within the organisation?"),
]

# (suffix, indicator, text, pinned_topics, pinned_metrics)
QUESTIONS = {
    "HSE": [
        ("1", "environmental-footprint",
         "Does the company measure and disclose the energy consumption of its AI systems across training and operation?",
         ["E1"], ["energy-usage"]),
        ("2", "environmental-footprint",
         "Does the company track and report greenhouse gas emissions attributable to its AI workloads?",
         ["E1"], ["ghg-emissions"]),
        ("3", "environmental-footprint",
         "Does the company account for waste generated or saved through the development and operation of its AI systems?",
         ["E1"], ["waste-footprint"]),
        ("4", "wellbeing-impact-assessment",
         "Does the company assess the impact of its AI use cases on human and societal wellbeing before deployment?",
         [], ["wellbeing-assessment-rate"]),
        ("5", "community-engagement",
         "Does the company evaluate both the opportunities and the threats its AI applications pose to the communities it serves?",
         [], ["community-consultations"]),
        ("6", "societal-benefit",
         "Does the company direct AI capability toward measurable social or environmental benefit?",
         [], ["social-benefit-projects"]),
    ],
    "HV": [
        ("1", "human-oversight",
         "Does the company keep humans in or on the loop for AI decisions that affect individuals?",
         [], ["human-review-rate"]),
        ("2", "value-alignment",
         "Does the company check that AI system objectives remain aligned with stated company values?",
         [], ["value-alignment-reviews"]),
        ("3", "autonomy-preservation",
         "Does the company protect user autonomy by avoiding manipulative or coercive AI-driven design?",
         [], ["dark-pattern-findings"]),
        ("4", "autonomy-preservation",
         "Does the company review AI-driven personalisation for respect of individual choice?",
         [], ["personalisation-opt-out-rate"]),
        ("5", "human-oversight",
         "Does the company involve diverse teams in the design and review of AI systems?",
         [], ["diverse-team-share"]),
    ],
    "FAR": [
        ("1", "bias-management",
         "Does the company test its AI models for bias across protected attributes before and after release?",
         [], ["bias-audit-frequency"]),
        ("2", "inclusive-data",
         "Does the company curate diverse, representative and up-to-date datasets for model training?",
         [], ["representation-gap"]),
        ("3", "equitable-outcomes",
         "Does the company monitor deployed AI for unequal outcomes across customer groups?",
         [], ["outcome-disparity"]),
        ("4", "bias-management",
         "Does the company remediate identified fairness issues within a defined timeframe?",
         [], ["remediation-time"]),
    ],
    "PRV": [
        ("1", "privacy-by-design",
         "Does the company apply privacy-by-design practices when building AI systems that process personal data?",
         [], ["dpia-coverage"]),
        ("2", "data-governance",
         "Does the company obtain and track consent for personal data used in AI training?",
         [], ["consent-coverage"]),
        ("3", "security-controls",
         "Does the company protect AI training data and models against unauthorised access?",
         [], ["breach-count"]),
        ("4", "security-controls",
         "Does the company run adversarial and penetration testing against its AI systems?",
         [], ["security-test-frequency"]),
        ("5", "data-protection",
         "Does the company minimise personal data collection for AI purposes to what is necessary?",
         [], ["data-minimisation-ratio"]),
        ("6", "data-governance",
         "Does the company govern data flows to and from third-party AI services?",
         [], ["third-party-data-flows"]),
    ],
    "REL": [
        ("1", "performance-monitoring",
         "Does the company define and monitor accuracy and error metrics for its production AI systems?",
         [], ["system-performance"]),
        ("2", "safety-testing",
         "Does the company validate AI systems against safety requirements before deployment?",
         [], ["safety-validation-coverage"]),
        ("3", "failure-recovery",
         "Does the company maintain fallback and recovery procedures for AI system failures?",
         [], ["mean-time-to-recovery"]),
        ("4", "safety-testing",
         "Does the company re-test AI systems after significant model or data changes?",
         [], ["retest-coverage"]),
        ("5", "performance-monitoring",
         "Does the company track the reliability of AI services against published service levels?",
         [], ["uptime"]),
    ],
    "TRN": [
        ("1", "disclosure-practices",
         "Does the company tell people when they are interacting with an AI system?",
         [], ["ai-disclosure-rate"]),
        ("2", "explainability",
         "Does the company explain the main factors behind AI decisions to affected users?",
         [], ["explanation-coverage"]),
        ("3", "documentation",
         "Does the company publish the intended purpose and limitations of its AI systems?",
         [], ["purpose-statement-coverage"]),
        ("4", "stakeholder-communication",
         "Does the company communicate AI-related changes to workers whose tasks are affected?",
         [], ["stakeholder-briefings"]),
        ("5", "disclosure-practices",
         "Does the company disclose its use of AI in customer-facing channels and periodic reporting?",
         [], ["reporting-disclosures"]),
        ("6", "documentation",
         "Does the company maintain technical documentation sufficient for external review of its AI systems?",
         [], ["model-size", "training-time"]),
    ],
    "CON": [
        ("1", "redress-mechanisms",
         "Does the company provide a clear channel to contest decisions made or supported by AI?",
         [], ["contest-channel-uptake"]),
        ("2", "human-review",
         "Does the company guarantee timely human review of contested AI decisions?",
         [], ["appeal-resolution-time"]),
        ("3", "appeal-process",
         "Does the company track appeal outcomes and feed them back into model improvement?",
         [], ["appeal-overturn-rate"]),
        ("4", "redress-mechanisms",
         "Does the company inform affected people of their right to challenge AI-driven outcomes?",
         [], ["rights-notification-rate"]),
    ],
    "ACC": [
        ("1", "risk-management",
         "Does the company establish methods and metrics to quantify and measure the risks associated with its AI systems?",
         [], ["ai-risk-metric-count"]),
        ("2", "ai-incident-management",
         "Does the company have a clear reporting system or process in place for serious AI incidents to inform external "
         "stakeholders (e.g., market surveillance authorities, communities) beyond the company?",
         [], ["external-incident-reports"]),
        ("3", "accountability-framework",
         "Does the company have an accountability framework to ensure that AI related roles and responsibilities are clearly defined?",
         [], ["defined-ai-roles-pct"]),
        ("4", "risk-management",
         "Does the company manage third-party and supply-chain risks arising from AI products and services it buys or embeds?",
         TOPICS, ["supplier-assessment-rate"]),
        ("5", "accountability-framework",
         "Does the company assign board-level ownership for the outcomes of high-risk AI systems?",
         [], ["board-rai-reviews"]),
        ("6", "risk-management",
         "Does the company audit adherence to its RAI policy across business units?",
         [], ["policy-audit-frequency"]),
    ],
}

NAMED_METRICS = [
    ("energy-usage", "Energy usage",
     "Energy consumed for AI: data centres, models, systems, training pipelines and devices. The smaller, the better.",
     "smaller-better", ["high-risk", "foundation-model"]),
    ("ghg-emissions", "Greenhouse gas emissions",
     "Gas emissions for AI: data centres, models, systems, training pipelines and devices. The smaller, the better.",
     "smaller-better", ["high-risk", "foundation-model"]),
    ("waste-footprint", "Tonnes of waste generated or saved",
     "Waste generated or saved during development and operation of AI systems and devices. Smaller generated / bigger saved, the better.",
     "contextual", ["high-risk", "foundation-model"]),
    ("system-performance", "AI system performance",
     "Whether information processed by AI systems is free from errors, inconsistencies or biases; includes accuracy "
     "((tp + tn) / total predictions), precision (tp / (tp + fp)), recall (tp / (tp + fn)) and f-score "
     "(2 x precision x recall / (precision + recall)).",
     "bigger-better", ["high-risk", "foundation-model"]),
    ("model-size", "Size of AI system (model)",
     "Cost drivers for model training, including AI model and data size.",
     "contextual", ["foundation-model"]),
    ("training-time", "Time to AI model training",
     "Time spent training AI models. The smaller, the better.",
     "smaller-better", ["foundation-model"]),
    ("ai-risk-metric-count", "Number of AI risk metrics",
     "AI risk metrics in use, e.g. risk exposure index, risk severity score.",
     "bigger-better", []),
    ("external-incident-reports", "Number of AI incidents informed to external stakeholders",
     "Serious AI incidents reported beyond the company.",
     "contextual", []),
    ("defined-ai-roles-pct", "Percentage of defined AI roles and responsibilities",
     "Share of AI-related roles and responsibilities that are clearly defined.",
     "bigger-better", []),
]

SYNTHETIC_METRICS = [
    ("wellbeing-assessment-rate", "Share of use cases with a wellbeing impact assessment", "bigger-better"),
    ("community-consultations", "Number of community consultations held", "bigger-better"),
    ("social-benefit-projects", "Number of AI projects with a stated social benefit", "bigger-better"),
    ("human-review-rate", "Share of consequential AI decisions with human review", "bigger-better"),
    ("value-alignment-reviews", "Number of value-alignment reviews per year", "bigger-better"),
    ("dark-pattern-findings", "Dark-pattern findings per design review", "smaller-better"),
    ("personalisation-opt-out-rate", "Share of users exercising personalisation opt-outs", "contextual"),
    ("diverse-team-share", "Share of AI teams meeting diversity targets", "bigger-better"),
    ("bias-audit-frequency", "Bias audits per AI system per year", "bigger-better"),
    ("representation-gap", "Representation gap across protected groups in training data", "smaller-better"),
    ("outcome-disparity", "Outcome disparity between customer groups", "smaller-better"),
    ("remediation-time", "Mean time to remediate a fairness finding", "smaller-better"),
    ("dpia-coverage", "Share of AI systems with a completed privacy impact assessment", "bigger-better"),
    ("consent-coverage", "Share of training data with documented consent", "bigger-better"),
    ("breach-count", "Number of AI-related data breaches", "smaller-better"),
    ("security-test-frequency", "AI security tests per system per year", "bigger-better"),
    ("data-minimisation-ratio", "Ratio of collected to necessary personal data", "smaller-better"),
    ("third-party-data-flows", "Share of third-party AI data flows under contract controls", "bigger-better"),
    ("safety-validation-coverage", "Share of AI systems validated against safety requirements", "bigger-better"),
    ("mean-time-to-recovery", "Mean time to recover from AI failures", "smaller-better"),
    ("retest-coverage", "Share of model changes followed by safety re-testing", "bigger-better"),
    ("uptime", "AI service availability", "bigger-better"),
    ("ai-disclosure-rate", "Share of AI touchpoints disclosed to users", "bigger-better"),
    ("explanation-coverage", "Share of AI decisions with an available explanation", "bigger-better"),
    ("purpose-statement-coverage", "Share of AI systems with a published purpose and limitations statement", "bigger-better"),
    ("stakeholder-briefings", "Stakeholder briefings on AI changes per year", "bigger-better"),
    ("reporting-disclosures", "Number of AI uses disclosed in periodic reporting", "bigger-better"),
    ("contest-channel-uptake", "Number of contested AI decisions received", "contextual"),
    ("appeal-resolution-time", "Mean time to resolve an appeal", "smaller-better"),
    ("appeal-overturn-rate", "Share of appeals overturning the original decision", "contextual"),
    ("rights-notification-rate", "Share of affected people notified of contest rights", "bigger-better"),
    ("supplier-assessment-rate", "Share of AI suppliers assessed for RAI practices", "bigger-better"),
    ("board-rai-reviews", "Board-level RAI reviews per year", "bigger-better"),
    ("policy-audit-frequency", "RAI policy audits per year", "bigger-better"),
]


def assign_topics(principle: str, entries) -> list[set[str]]:
    """Greedy spread: each topic's remaining quota goes to the questions with
    the fewest tags so far (pins honoured first)."""
    target = TARGET_GRID[principle]
    tags = [set(pinned) for _, _, _, pinned, _ in entries]
    for topic in TOPICS:
        quota = target.get(topic, 0) - sum(1 for t in tags if topic in t)
        if quota < 0:
            raise SystemExit(f"{principle}: pinned tags exceed target for {topic}")
        candidates = sorted(
            (i for i, t in enumerate(tags) if topic not in t),
            key=lambda i: (len(tags[i]), i),
        )
        for i in candidates[:quota]:
            tags[i].add(topic)
    got = {topic: sum(1 for t in tags if topic in t) for topic in TOPICS}
    want = {topic: target.get(topic, 0) for topic in TOPICS}
    if got != want:
        raise SystemExit(f"{principle}: grid mismatch {got} != {want}")
    return tags


def build_complete_bank() -> dict:
    questions = []
    for pid, _ in [(p.id, p.name) for p in bank_mod.PRINCIPLES]:
        entries = QUESTIONS[pid]
        topic_sets = assign_topics(pid, entries)
        for (suffix, indicator, text, _, metrics), topics in zip(entries, topic_sets):
            questions.append(
                {
                    "id": f"q-{pid.lower()}-{suffix}",
                    "principle": pid,
                    "key_question": f"kq-{pid.lower()}",
                    "indicator": indicator,
                    "text": text,
                    "esg_topics": sorted(topics, key=TOPICS.index),
                    "org_types": [],
                    "system_categories": [],
                    "obligation": {},
                    "provenance": [],
                    "metrics": metrics,
                }
            )
    assert len(questions) == 42

    # Spread categorical assignments with a fixed stride permutation so no
    # principle monopolises a bucket.
    perm = [(i * 11) % 42 for i in range(42)]
    both, eu_only = perm[0:12], perm[12:22]
    nist_only, other = perm[22:28], perm[28:42]
    for i in both:
        questions[i]["provenance"] = ["eu-ai-act", "nist"]
    for i in eu_only:
        questions[i]["provenance"] = ["eu-ai-act"]
    for i in nist_only:
        questions[i]["provenance"] = ["nist"]
    for i in other:
        questions[i]["provenance"] = ["other"]

    high_risk = both + eu_only                      # 22, the EU-aligned set
    hr_mandatory = set(perm[0:17])
    fm_list = both + nist_only + other[0:3]         # 21
    fm_mandatory = set(fm_list[0:13])
    for i in high_risk:
        q = questions[i]
        q["system_categories"].append("high-risk")
        q["obligation"]["high-risk"] = "mandatory" if i in hr_mandatory else "optional"
    for i in fm_list:
        q = questions[i]
        q["system_categories"].append("foundation-model")
        q["obligation"]["foundation-model"] = "mandatory" if i in fm_mandatory else "optional"
    untagged = [i for i in range(42) if not questions[i]["system_categories"]]
    for pos, i in enumerate(untagged):
        questions[i]["system_categories"].append("limited" if pos % 2 == 0 else "minimal")

    org_cycle = ["both", "developer", "purchaser"]
    for i, q in enumerate(questions):
        q["org_types"] = [org_cycle[i % 3]]
        q["system_categories"].sort()

    metrics = [
        {"id": mid, "name": name, "guide": guide, "direction": direction, "mandatory_for": mandatory}
        for mid, name, guide, direction, mandatory in NAMED_METRICS
    ] + [
        {"id": mid, "name": name, "guide": "", "direction": direction, "mandatory_for": []}
        for mid, name, direction in SYNTHETIC_METRICS
    ]
    assert len(metrics) == 43

    return {
        "version": "complete-1.0",
        "completeness": "complete",
        "notes": (
            "Synthetic full corpus for testing and demonstration. Question wording, indicator names, "
            "tag assignments and provenance labels are constructed fixtures, not authoritative content."
        ),
        "key_questions": [{"id": kid, "principle": pid, "text": text} for kid, pid, text in KEY_QUESTIONS],
        "questions": questions,
        "metrics": metrics,
    }


def build_sample_bank(complete: dict) -> dict:
    by_id = {q["id"]: q for q in complete["questions"]}

    def pick(qid: str, esg_topics, provenance, system_categories, obligation, org_types) -> dict:
        q = dict(by_id[qid])
        q.update(
            esg_topics=esg_topics,
            provenance=provenance,
            system_categories=system_categories,
            obligation=obligation,
            org_types=org_types,
        )
        return q

    questions = [
        pick("q-hse-1", ["E1", "E2"], ["eu-ai-act"], [], {}, []),
        pick("q-hse-2", ["E1"], ["other"], ["high-risk"], {"high-risk": "optional"}, ["developer"]),
        pick("q-hse-3", ["E1", "E3"], ["nist"], [], {}, []),
        pick("q-acc-1", ["G2"], ["eu-ai-act", "nist"], ["high-risk"], {"high-risk": "mandatory"}, ["both"]),
        pick("q-acc-2", ["G3"], ["eu-ai-act"], ["high-risk"], {"high-risk": "mandatory"}, []),
        pick("q-acc-3", ["G1"], ["nist"], [], {}, ["purchaser"]),
        pick("q-acc-4", list(TOPICS), ["other"], [], {}, []),
    ]
    sample_metric_ids = {"energy-usage", "ghg-emissions", "waste-footprint", "system-performance",
                         "model-size", "training-time", "ai-risk-metric-count",
                         "external-incident-reports", "defined-ai-roles-pct"}
    for q in questions:
        q["metrics"] = [m for m in q["metrics"] if m in sample_metric_ids]
    metrics = [m for m in complete["metrics"] if m["id"] in sample_metric_ids]
    assert len(metrics) == 9

    return {
        "version": "sample-1.0",
        "completeness": "sample",
        "notes": "Illustrative excerpt bank covering two principles; ships with the toolkit for exploration and tests.",
        "key_questions": [
            {"id": kid, "principle": pid, "text": text}
            for kid, pid, text in KEY_QUESTIONS
            if pid in ("HSE", "ACC")
        ],
        "questions": questions,
        "metrics": metrics,
    }


SEED_USE_CASES = [
    ("Information technology", "Product development", "AI tools for new products or using AI to power existing features.", "not-determined"),
    ("Information technology", "Automation", "Automation of tasks using AI in business processes.", "not-determined"),
    ("Information technology", "Risk management", "AI to predict when a system might fail or identify vulnerabilities.", "medium"),
    ("Health care", "Health research / testing", "AI aids in the generation of valuable insights and expediting various processes.", "high"),
    ("Health care", "Clinical care", "AI for synthesising and summarising patient records, early diagnosis or identification of test results.", "high"),
    ("Health care", "Product development", "AI for the innovation of health applications and medical devices.", "medium"),
    ("Financials", "Insurance pricing", "AI can model and calculate prices and terms for insurance products.", "medium"),
    ("Financials", "Fraud detection", "AI can detect and prevent fraud, protecting customers and banks.", "medium"),
    ("Financials", "Credit scoring / approval", "AI can augment decisions around who gets access to capital and how much it costs them.", "medium"),
    ("Consumer Discretionary", "Supply chain management", "AI can optimise logistics, predict demand, and improve quality control.", "medium"),
    ("Consumer Discretionary", "Personalised offering", "AI personalises shopping experiences and advice.", "medium"),
    ("Consumer Discretionary", "Instore surveillance", "AI can be used to analyse and derive insights from in-store activity.", "medium"),
    ("Industrials", "Process automation", "AI is significantly advancing process improvement and automation.", "medium"),
    ("Industrials", "Asset maintenance", "AI can enable real-time equipment monitoring, predicting failures and more.", "medium"),
    ("Industrials", "Logistics management", "AI is optimising delivery routes, automating warehouse operations, and providing precise demand forecasting.", "medium"),
    ("Energy", "Energy efficiency", "AI-driven systems in homes or businesses equipped with IoT devices and smart meters can manage energy consumption effectively.", "medium"),
    ("Energy", "Infrastructure maintenance", "AI predicts when equipment in power plants or on the grid might fail, recommending pre-emptive maintenance.", "high"),
    ("Energy", "Energy optimisation", "AI can predict energy demand and supply fluctuations.", "high"),
    ("Real Estate", "Property valuation", "AI algorithms can estimate property values more accurately and efficiently.", "medium"),
    ("Real Estate", "Facility management", "AI algorithms work together to manage building operations such as heating and ventilation.", "medium"),
    ("Real Estate", "Customer services", "AI can transform customer service with chatbots and virtual assistants.", "medium"),
    ("Materials", "Material discovery", "AI accelerates the discovery and development of new materials by analysing complex chemical and physical data.", "medium"),
    ("Materials", "Resource identification", "AI is analysing geological data, satellite imagery, and sensor data from exploration sites to identify promising areas for resource extraction.", "medium"),
    ("Materials", "Health and safety", "AI can use sensing devices to detect unsafe practices or environmental conditions.", "medium"),
    ("Telecommunications", "Asset management", "AI can predict network traffic and optimise the flow of data.", "medium"),
    ("Telecommunications", "Customer service", "AI can provide 24/7 customer support, handle routine inquiries, and troubleshoot common issues.", "medium"),
    ("Telecommunications", "Fraud detection", "AI algorithms can analyse vast amounts of call and data transfer records in real-time.", "medium"),
]


def verify(complete_doc: dict, sample_doc: dict) -> None:
    complete = bank_mod.load_bank(complete_doc)
    sample = bank_mod.load_bank(sample_doc)

    stats = bank_mod.provenance_stats(complete)
    assert (stats.nist_only, stats.eu_only, stats.both, stats.other) == (6, 10, 12, 14), stats
    assert (stats.nist_only_pct, stats.eu_only_pct, stats.both_pct, stats.combined_pct) == (14, 24, 29, 67)

    matrix = bank_mod.mapping_matrix(complete)
    for p, row in zip(bank_mod.PRINCIPLES, matrix):
        want = [TARGET_GRID[p.id].get(t, 0) for t in TOPICS]
        assert row == want, (p.id, row, want)

    for bank in (sample, complete):
        carbon = bank_mod.filter_questions(bank, bank_mod.FilterCriteria(esg_topic=EsgTopic.E1))
        assert len(carbon) == 4, (bank.version, [q.id for q in carbon])
        assert [q.principle for q in carbon[:3]] == ["HSE", "HSE", "HSE"]

    referenced = {m for q in complete.questions for m in q.metrics}
    assert referenced == {m.id for m in complete.metrics}, "every metric must be referenced"


def main() -> None:
    complete_doc = build_complete_bank()
    sample_doc = build_sample_bank(complete_doc)
    verify(complete_doc, sample_doc)

    DATA_DIR.mkdir(parents=True, exist_ok=True)
    for name, doc in [("complete_bank.json", complete_doc), ("sample_bank.json", sample_doc)]:
        (DATA_DIR / name).write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        print(f"wrote {DATA_DIR / name}")

    seeds = [
        {"sector": sector, "name": name, "description": description, "regulatory_flag": flag}
        for sector, name, description, flag in SEED_USE_CASES
    ]
    (DATA_DIR / "seed_use_cases.json").write_text(
        json.dumps(seeds, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    print(f"wrote {DATA_DIR / 'seed_use_cases.json'}")


if __name__ == "__main__":
    main()
