"""Operator command line.

Every command is a thin shell over the library; output is deterministic so
the shipped sample data can be pinned by golden tests. Failures print one
structured JSON error object to stderr and exit with: 1 usage, 2 validation,
3 conflict, 4 not found.

Scoring config resolution: ``--config`` flag, else ``./esgai.config.json``,
else the path in ``$ESGAI_CONFIG``, else built-in defaults. Individual
scoring flags override whatever the file provided.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from . import reporting, seeds, workflow
from .bank import BankManifest, FilterCriteria, Obligation, SystemCategory, filter_questions, load_bank, provenance_stats
from .errors import ConflictError, DomainError, NotFoundError, ValidationError
from .model import ScoringConfig
from .reporting import fmt_number
from .store import Session, SessionStore

DEFAULT_STORE = "./esgai-store"
CONFIG_FILENAME = "esgai.config.json"


def resolve_config(config_path: str | None, **flag_overrides: float | None) -> ScoringConfig:
    payload: dict = {}
    path = None
    if config_path:
        path = Path(config_path)
        if not path.exists():
            raise NotFoundError("config.not_found", f"config file not found: {path}")
    elif Path(CONFIG_FILENAME).exists():
        path = Path(CONFIG_FILENAME)
    elif os.environ.get("ESGAI_CONFIG"):
        env_path = Path(os.environ["ESGAI_CONFIG"])
        if env_path.exists():
            path = env_path
    if path is not None:
        payload = json.loads(path.read_text(encoding="utf-8"))

    weights = list(payload.get("use_case_weights", [1.0, 1.0, 1.0]))
    for i, key in enumerate(("w1", "w2", "w3")):
        if flag_overrides.get(key) is not None:
            weights[i] = flag_overrides[key]
    payload["use_case_weights"] = weights
    for key in ("t_high", "t_low"):
        if flag_overrides.get(key) is not None:
            payload[key] = flag_overrides[key]
    return ScoringConfig.from_dict(payload)


def open_store(store_dir: str) -> SessionStore:
    return SessionStore(store_dir)


def load_session_arg(store_dir: str, ref: str) -> Session:
    """A session argument is a JSON file path when one exists, else an id in
    the store."""
    path = Path(ref)
    if path.exists() and path.is_file():
        return Session.from_dict(json.loads(path.read_text(encoding="utf-8")))
    return open_store(store_dir).get_session(ref)


def resolve_bank(session: Session, bank_file: str | None) -> BankManifest | None:
    if bank_file:
        return load_bank(Path(bank_file))
    return seeds.shipped_banks().get(session.bank_version)


scoring_flags = [
    click.option("--config", "config_path", type=str, default=None, help="Path to a scoring config file."),
    click.option("--t-high", type=float, default=None, help="Override the high materiality threshold."),
    click.option("--t-low", type=float, default=None, help="Override the low materiality threshold."),
    click.option("--w1", type=float, default=None, help="Override the regulatory-score weight."),
    click.option("--w2", type=float, default=None, help="Override the impact-score weight."),
    click.option("--w3", type=float, default=None, help="Override the scope-score weight."),
]


def with_scoring_flags(command):
    for flag in reversed(scoring_flags):
        command = flag(command)
    return command


@click.group()
@click.option("--store", "store_dir", default=DEFAULT_STORE, envvar="ESGAI_STORE", show_default=True,
              help="Session store directory.")
@click.pass_context
def cli(ctx: click.Context, store_dir: str) -> None:
    """Assessment workbench: banks, scoring, sessions, reports, API."""
    ctx.ensure_object(dict)
    ctx.obj["store_dir"] = store_dir


# ---------------------------------------------------------------------------
# bank
# ---------------------------------------------------------------------------

@cli.group()
def bank() -> None:
    """Validate, inspect and filter question banks."""


@bank.command("validate")
@click.argument("file", type=str)
def bank_validate(file: str) -> None:
    manifest = load_bank(Path(file))
    click.echo(
        f"ok: {manifest.version} ({manifest.completeness.value}, "
        f"{len(manifest.questions)} questions, {len(manifest.metrics)} metrics, "
        f"{len(manifest.key_questions)} key questions)"
    )


@bank.command("stats")
@click.argument("file", type=str)
def bank_stats(file: str) -> None:
    manifest = load_bank(Path(file))
    stats = provenance_stats(manifest)
    click.echo(f"total: {stats.total}")
    click.echo(f"nist-only: {stats.nist_only} ({stats.nist_only_pct}%)")
    click.echo(f"eu-only: {stats.eu_only} ({stats.eu_only_pct}%)")
    click.echo(f"both: {stats.both} ({stats.both_pct}%)")
    click.echo(f"other: {stats.other} ({stats.other_pct}%)")
    click.echo(f"combined: {stats.combined} ({stats.combined_pct}%)")


@bank.command("filter")
@click.argument("file", type=str)
@click.option("--org-type", default=None, help="developer, purchaser or both")
@click.option("--category", default=None, help="high-risk, foundation-model, limited or minimal")
@click.option("--esg-topic", default=None, help="Topic id (E1) or slug (carbon-emissions).")
@click.option("--principle", "principles", multiple=True, help="Principle id; repeatable.")
def bank_filter(file: str, org_type: str | None, category: str | None, esg_topic: str | None,
                principles: tuple[str, ...]) -> None:
    manifest = load_bank(Path(file))
    criteria = FilterCriteria.parse(
        org_type=org_type, system_category=category, esg_topic=esg_topic,
        principles=list(principles) or None,
    )
    questions = filter_questions(manifest, criteria)
    if criteria.system_category is not None:
        mandatory = sum(
            1 for q in questions if q.obligation_for(criteria.system_category) is Obligation.MANDATORY
        )
        click.echo(f"{len(questions)} questions ({mandatory} mandatory, {len(questions) - mandatory} optional)")
    else:
        click.echo(f"{len(questions)} questions")
    for q in questions:
        obligation = "-"
        if criteria.system_category is not None:
            tag = q.obligation_for(criteria.system_category)
            obligation = tag.value if tag else "-"
        click.echo(f"{q.id}\t{q.principle}\t{obligation}\t{q.text}")


# ---------------------------------------------------------------------------
# score
# ---------------------------------------------------------------------------

@cli.group()
def score() -> None:
    """Print derived scores for a session (store id or JSON file)."""


@score.command("use-case")
@click.argument("session_ref", metavar="SESSION")
@click.pass_context
def score_use_case(ctx: click.Context, session_ref: str) -> None:
    from .scoring import score_profile

    session = load_session_arg(ctx.obj["store_dir"], session_ref)
    for profile in session.use_case_profiles:
        result = score_profile(profile, session.config)
        line = (
            f"{profile.id} N={result.impacted_topics} impact={result.impact_level.value} "
            f"F={fmt_number(result.breakdown.total)} default={profile.materiality_default.value}"
        )
        if profile.materiality_adjusted is not None:
            line += f" adjusted={profile.materiality_adjusted.value}"
        click.echo(line)


@score.command("governance")
@click.argument("session_ref", metavar="SESSION")
@click.pass_context
def score_governance(ctx: click.Context, session_ref: str) -> None:
    session = load_session_arg(ctx.obj["store_dir"], session_ref)
    if session.governance is None:
        raise DomainError("governance.missing", "session has no governance judgments yet")
    from .scoring import governance_score

    total, level = governance_score([j.met for j in session.governance.judgments], session.config)
    click.echo(f"F={fmt_number(total)} level={level.value}")


@score.command("deep-dive")
@click.argument("session_ref", metavar="SESSION")
@click.pass_context
def score_deep_dive(ctx: click.Context, session_ref: str) -> None:
    session = load_session_arg(ctx.obj["store_dir"], session_ref)
    if session.deep_dive is None or not session.deep_dive.principle_results:
        raise DomainError("principle.no_answers", "session has no deep-dive answers yet")
    results = session.deep_dive.principle_results
    from .bank import PRINCIPLE_ORDER

    for pid in sorted(results, key=lambda p: PRINCIPLE_ORDER[p]):
        r = results[pid]
        line = f"{pid} avg={fmt_number(r.average)} suggested={r.suggested_level.value} final={r.final_level.value}"
        if r.final_level is not r.suggested_level:
            line += " (override)"
        click.echo(line)


# ---------------------------------------------------------------------------
# sessions / report / data exchange
# ---------------------------------------------------------------------------

@cli.group()
def session() -> None:
    """Create and inspect stored sessions."""


@session.command("new")
@click.option("--company", required=True)
@click.option("--bank", "bank_version", default="complete-1.0", show_default=True)
@click.option("--seed/--no-seed", "with_seed", default=True, show_default=True,
              help="Preload the bundled sector use cases.")
@click.option("--id", "session_id", default=None, help="Explicit session id.")
@with_scoring_flags
@click.pass_context
def session_new(ctx: click.Context, company: str, bank_version: str, with_seed: bool,
                session_id: str | None, config_path: str | None,
                t_high: float | None, t_low: float | None,
                w1: float | None, w2: float | None, w3: float | None) -> None:
    cfg = resolve_config(config_path, t_high=t_high, t_low=t_low, w1=w1, w2=w2, w3=w3)
    store = open_store(ctx.obj["store_dir"])
    profiles = seeds.seed_use_cases(cfg) if with_seed else []
    created = store.create_session(
        company=company, bank_version=bank_version, config=cfg,
        use_case_profiles=profiles, session_id=session_id,
    )
    click.echo(created.id)


@session.command("list")
@click.pass_context
def session_list(ctx: click.Context) -> None:
    for s in open_store(ctx.obj["store_dir"]).list_sessions():
        click.echo(f"{s.id}\t{s.company}\t{s.bank_version}\t{s.status.value}\trev={s.revision}")


@session.command("show")
@click.argument("session_id")
@click.pass_context
def session_show(ctx: click.Context, session_id: str) -> None:
    s = open_store(ctx.obj["store_dir"]).get_session(session_id)
    click.echo(json.dumps(s.to_dict(), indent=2, sort_keys=True, ensure_ascii=False))


@cli.command("report")
@click.argument("session_ref", metavar="SESSION")
@click.option("--format", "fmt", default="markdown", show_default=True,
              type=click.Choice(["json", "csv", "markdown"]))
@click.option("--section", default=None,
              help="One of: materiality, governance, deep-dive, metrics (CSV defaults to materiality).")
@click.option("--bank-file", default=None, help="Bank file overriding the session's bank version.")
@with_scoring_flags
@click.pass_context
def report_cmd(ctx: click.Context, session_ref: str, fmt: str, section: str | None, bank_file: str | None,
               config_path: str | None, t_high: float | None, t_low: float | None,
               w1: float | None, w2: float | None, w3: float | None) -> None:
    """Render a session report. Scoring flags preview alternative configs
    without touching the stored session."""
    sess = load_session_arg(ctx.obj["store_dir"], session_ref)
    if any(v is not None for v in (config_path, t_high, t_low, w1, w2, w3)):
        cfg = resolve_config(config_path, t_high=t_high, t_low=t_low, w1=w1, w2=w2, w3=w3)
        from .scoring import rescore_profile

        sess = sess.replace(
            config=cfg,
            use_case_profiles=tuple(rescore_profile(p, cfg) for p in sess.use_case_profiles),
        )
    bank_manifest = resolve_bank(sess, bank_file)
    click.echo(reporting.render(sess, fmt, section=section, bank=bank_manifest), nl=False)


@cli.command("report-bank")
@click.argument("file", type=str)
@click.option("--format", "fmt", default="markdown", show_default=True,
              type=click.Choice(["json", "csv", "markdown"]))
@click.option("--section", default=None, help="mapping or provenance (CSV defaults to mapping).")
def report_bank(file: str, fmt: str, section: str | None) -> None:
    """Render a bank report (principle-by-topic grid, provenance shares)."""
    manifest = load_bank(Path(file))
    click.echo(reporting.render(manifest, fmt, section=section), nl=False)


@cli.command("export")
@click.argument("session_id")
@click.option("-o", "--output", default=None, help="Write to a file instead of stdout.")
@click.pass_context
def export_cmd(ctx: click.Context, session_id: str, output: str | None) -> None:
    s = open_store(ctx.obj["store_dir"]).get_session(session_id)
    text = json.dumps(s.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


@cli.command("import")
@click.argument("file", type=str)
@click.pass_context
def import_cmd(ctx: click.Context, file: str) -> None:
    path = Path(file)
    if not path.exists():
        raise NotFoundError("import.not_found", f"session file not found: {path}")
    imported = open_store(ctx.obj["store_dir"]).import_session(
        Session.from_dict(json.loads(path.read_text(encoding="utf-8")))
    )
    click.echo(imported.id)


@cli.command("serve")
@click.option("--addr", default="127.0.0.1:8000", show_default=True, help="host:port to bind.")
@click.pass_context
def serve_cmd(ctx: click.Context, addr: str) -> None:
    """Run the HTTP API (and the console, when built)."""
    import uvicorn

    from .api import create_app

    host, _, port = addr.partition(":")
    app = create_app(store_dir=ctx.obj["store_dir"])
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port or 8000), log_level="info")


# ---------------------------------------------------------------------------
# entry point with exit-code mapping
# ---------------------------------------------------------------------------

_EXIT_USAGE = 1
_EXIT_VALIDATION = 2
_EXIT_CONFLICT = 3
_EXIT_NOT_FOUND = 4


def _error_exit(error: DomainError, code: int) -> int:
    sys.stderr.write(json.dumps(error.to_dict(), sort_keys=True, ensure_ascii=False) + "\n")
    return code


def main(argv: list[str] | None = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False, obj={})
        return 0
    except click.UsageError as exc:
        sys.stderr.write(json.dumps({"code": "usage", "message": exc.format_message()}) + "\n")
        return _EXIT_USAGE
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        return _EXIT_USAGE
    except ConflictError as exc:
        return _error_exit(exc, _EXIT_CONFLICT)
    except NotFoundError as exc:
        return _error_exit(exc, _EXIT_NOT_FOUND)
    except (ValidationError, DomainError) as exc:
        return _error_exit(exc, _EXIT_VALIDATION)


if __name__ == "__main__":
    sys.exit(main())
