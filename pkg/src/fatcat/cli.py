"""Command line interface.

``fatcat check SUITE... --input DOC`` runs one or more verification
suites against a document (a JSON file or a ``builtin:`` instance) and
prints either a human-readable table or deterministic JSON.

Exit codes: 0 all suites pass, 1 at least one violation, 2 the input
could not be loaded or a suite does not apply to it.
"""

from __future__ import annotations

import json
import sys

import click

from .documents import BUILTINS, load_spec
from .errors import FatcatError
from .report import Report
from .suites import SUITES, run_suite


def _print_table(rep: Report) -> None:
    status = "PASS" if rep.ok else "FAIL"
    line = f"{rep.suite:<16} {status}  checks={rep.checks}"
    if rep.elapsed_ms is not None:
        line += f"  elapsed={rep.elapsed_ms:.1f}ms"
    click.echo(line)
    for v in rep.violations[:20]:
        detail = f"  {v.details}" if v.details else ""
        click.echo(f"  violation {v.law} at {v.witness}{detail}")
    if len(rep.violations) > 20:
        click.echo(f"  ... and {len(rep.violations) - 20} more")
    if rep.data:
        for key, value in sorted(rep.data.items()):
            if key in ("table", "labels"):
                continue
            click.echo(f"  {key}: {value}")
        if "labels" in rep.data:
            for row in reversed(rep.data["labels"]):
                click.echo("  " + "  ".join(f"{x:>6}" for x in row))


@click.group()
def main() -> None:
    """Verify categorical laws on finite instances."""


@main.command()
@click.argument("suites", nargs=-1, required=True)
@click.option(
    "--input",
    "input_",
    required=True,
    help="Path to a JSON document, or builtin:NAME.",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["table", "json"]),
    default="table",
    show_default=True,
)
@click.option(
    "--max-size",
    type=int,
    default=None,
    help="Cap on enumerated pasting grids for the interchange suite.",
)
@click.option(
    "--predicate",
    default="translation-pair",
    show_default=True,
    help="Cell predicate for the enrichment suite.",
)
def check(suites, input_, fmt, max_size, predicate) -> None:
    """Run verification SUITES against --input.

    Available suites: axioms, lemma1, interchange, enrichment,
    coherence-base, coherence-fat, crossed-module, biholonomy.
    """
    try:
        doc = load_spec(input_)
        reports = [
            run_suite(doc, suite, max_size=max_size, predicate=predicate)
            for suite in suites
        ]
    except FatcatError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)

    if fmt == "json":
        payload = {
            "input": input_,
            "reports": [rep.to_dict() for rep in reports],
        }
        click.echo(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for rep in reports:
            _print_table(rep)
    sys.exit(0 if all(rep.ok for rep in reports) else 1)


@main.command("list")
def list_builtins() -> None:
    """List builtin instances and available suites."""
    click.echo("suites: " + ", ".join(SUITES))
    click.echo("builtins:")
    for name in sorted(BUILTINS):
        click.echo(f"  builtin:{name}")


if __name__ == "__main__":
    main()
