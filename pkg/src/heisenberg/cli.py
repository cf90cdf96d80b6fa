from __future__ import annotations

import json
import logging
from contextlib import contextmanager
from dataclasses import replace
from importlib.metadata import version
from typing import Iterator, Optional

import click

from heisenberg.config import DEFAULT_LIMITS, LOG_LEVELS, configure_logging
from heisenberg.errors import ExprSyntaxError, HeisenbergError
from heisenberg.evaluator import (
    TABLE_OPS,
    basis_table,
    evaluate_expression,
    format_result_json,
    format_result_text,
    format_table_json,
    format_table_text,
)
from heisenberg.expr import parse
from heisenberg.render import make_console
from heisenberg.rep_oracle import check_cosets
from heisenberg.suites import format_suites_json, format_suites_text, run_suite, run_suites, suite_names

logger = logging.getLogger(__name__)


class InputError(click.ClickException):
    """A user-facing error in an expression, an index or a size limit."""

    exit_code = 2


def _describe(exc: HeisenbergError) -> str:
    if isinstance(exc, ExprSyntaxError) and exc.text:
        line = exc.text.splitlines()[exc.line - 1] if exc.text.splitlines() else ""
        return f"{exc}\n  {line}\n  {' ' * (exc.column - 1)}^"
    return str(exc)


@contextmanager
def user_errors() -> Iterator[None]:
    try:
        yield
    except HeisenbergError as exc:
        raise InputError(_describe(exc)) from exc


def _emit(text: str, json_output: bool) -> None:
    if json_output:
        click.echo(text)
    else:
        make_console().print(text)


@click.group()
@click.version_option(version("heisenberg"))
@click.option(
    "-l",
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default="WARNING",
    show_default=True,
    help="Minimum level of log messages written to stderr.",
)
def run(log_level: str) -> None:
    """Exact computations with the Heisenberg product.

    Examples:
        heisenberg eval "h[2,1] # h[3]"
        heisenberg eval "perm 12 # perm 132" --json
        heisenberg eval "antipode(M[1], 3)"
        heisenberg table --space X --maxdeg 3
        heisenberg verify --suite assoc-perm --max-degree 5
        heisenberg oracle cosets --max 3
    """
    configure_logging(log_level)


@run.command("eval")
@click.argument("expression")
@click.option("--json", "json_output", is_flag=True, help="Output the result as JSON.")
@click.option(
    "--truncate",
    type=click.IntRange(min=0),
    default=None,
    help="Default degree cutoff N for antipode(M), psi_dual and phi.",
)
def eval_command(expression: str, json_output: bool, truncate: Optional[int]) -> None:
    """Evaluate EXPRESSION and print its terms in canonical order."""
    with user_errors():
        doc = evaluate_expression(parse(expression), truncate=truncate)
    _emit(format_result_json(doc) if json_output else format_result_text(doc), json_output)


@run.command()
@click.option("--space", type=click.Choice(["h", "p", "X", "perm"]), required=True, help="Basis to tabulate.")
@click.option("--maxdeg", type=click.IntRange(min=1), required=True, help="Largest total degree of a pair.")
@click.option("--op", type=click.Choice(list(TABLE_OPS)), default="heis", show_default=True, help="Product to tabulate.")
@click.option("--force", is_flag=True, help="Lift the table size guards.")
@click.option("--json", "json_output", is_flag=True, help="Output the table as a JSON list.")
def table(space: str, maxdeg: int, op: str, force: bool, json_output: bool) -> None:
    """Print the product of every basis pair up to a total degree."""
    limits = DEFAULT_LIMITS
    if force:
        limits = replace(
            limits,
            max_table_degree=max(maxdeg, limits.max_table_degree),
            max_perm_degree=max(maxdeg, limits.max_perm_degree),
        )
        if limits != DEFAULT_LIMITS:
            logger.warning("size guard lifted: table up to degree %d", maxdeg)
    with user_errors():
        docs = basis_table(space, maxdeg, op, limits)
    _emit(format_table_json(docs) if json_output else format_table_text(docs), json_output)


@run.command()
@click.option("--suite", type=click.Choice(suite_names()), required=True, help="Suite to run, or all.")
@click.option("--max-degree", type=click.IntRange(min=0), default=None, help="Override the suite's degree bound.")
@click.option("--json", "json_output", is_flag=True, help="Output the results as JSON.")
@click.pass_context
def verify(ctx: click.Context, suite: str, max_degree: Optional[int], json_output: bool) -> None:
    """Run a property suite; exit with status 1 on the first counterexample."""
    with user_errors():
        results = run_suites(suite, max_degree)
    _emit(format_suites_json(results) if json_output else format_suites_text(results), json_output)
    if not all(result.ok for result in results):
        ctx.exit(1)


@run.command()
@click.argument("name", type=click.Choice(["schurweyl", "cosets"]))
@click.option("--max", "p_max", type=click.IntRange(min=0), default=3, show_default=True, help="Largest p and q.")
@click.option("--json", "json_output", is_flag=True, help="Output the report as JSON.")
@click.pass_context
def oracle(ctx: click.Context, name: str, p_max: int, json_output: bool) -> None:
    """Run an exhaustive oracle sweep over σ ∈ S_p, τ ∈ S_q with p, q ≤ --max."""
    with user_errors():
        if name == "schurweyl":
            result = run_suite("schur-weyl", p_max)
            ok = result.ok
            text = format_suites_json([result]) if json_output else format_suites_text([result])
        else:
            report = check_cosets(p_max)
            ok = report.ok
            if json_output:
                text = json.dumps(report.to_dict(), indent=2, ensure_ascii=False)
            else:
                status = "PASS" if ok else "FAIL"
                lines = [f"{status} cosets: {report.cases} cases with p, q ≤ {p_max}"]
                lines.extend(f"  {failure}" for failure in report.failures)
                text = "\n".join(lines)
    _emit(text, json_output)
    if not ok:
        ctx.exit(1)
