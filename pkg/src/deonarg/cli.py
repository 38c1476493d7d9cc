"""Command-line interface.

Subcommands: ``args`` (argument listing), ``eval`` (extensions and
justified conclusions), ``trace`` (weak-permission iteration log),
``attacks`` (attack table or DOT graph), ``check`` (structural
verifiers) and ``gen`` (random theory generator).

Exit codes: 0 success, 1 parse error, 2 theory validation error,
3 fixed-point invariant breach, 4 argument-limit exceeded, 5 failed
check.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Any

import click

from .analysis import verify_theorems
from .arguments import ArgumentSet, build_arguments
from .attacks import AttackGraph, compute_attacks
from .model import Theory, TheoryValidationError
from .parser import ParseError, parse_theory, serialize_theory
from .schema import (
    argument_kind,
    arguments_section,
    attacks_section,
    theory_section,
    trace_section,
)
from .semantics import (
    DEFAULT_ARGUMENT_LIMIT,
    ArgumentLimitExceeded,
    evaluate,
    justified_conclusions,
)
from .testkit import GeneratorParams, generate_theory
from .wp import FixpointInvariantError, wp_extension

EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_INVARIANT = 3
EXIT_SIZE = 4
EXIT_CHECK = 5


# ---------------------------------------------------------------------------
# shared plumbing
# ---------------------------------------------------------------------------


def _load_theory(source: str) -> Theory:
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as error:
            click.echo(f"error: cannot read {source}: {error}", err=True)
            sys.exit(EXIT_PARSE)
    try:
        return parse_theory(text)
    except ParseError as error:
        click.echo(f"parse error: {error}", err=True)
        sys.exit(EXIT_PARSE)
    except TheoryValidationError as error:
        for violation in error.violations:
            click.echo(f"validation error: {violation.message}", err=True)
        sys.exit(EXIT_VALIDATION)


def _emit_json(document: dict[str, Any]) -> None:
    click.echo(json.dumps(document, indent=2))


def _id_set(arguments: ArgumentSet, members) -> str:
    ordered = sorted(members, key=arguments.index)
    return "{" + ", ".join(ordered) + "}"


def _conclusion_set(arguments: ArgumentSet, members) -> str:
    rendered = [str(c) for c in justified_conclusions(arguments, members)]
    return "{" + ", ".join(rendered) + "}"


_THEORY_ARGUMENT = click.argument("theory_file", metavar="THEORY")
_GENERALIZED_FLAG = click.option(
    "--imaginary-subargument-attacks",
    is_flag=True,
    help="Let obligations attack natural arguments through their imaginary "
    "subarguments (generalized reading; default targets only the imaginary "
    "argument itself).",
)
_LIMIT_OPTION = click.option(
    "--argument-limit",
    type=int,
    default=DEFAULT_ARGUMENT_LIMIT,
    show_default=True,
    help="Refuse complete/stable enumeration above this many arguments.",
)
_GUARDS_FLAG = click.option(
    "--no-fixpoint-guards",
    is_flag=True,
    help="Drop the exclusion guards from the weak-permission iteration "
    "(diagnostic; breaches the disjointness invariant on some theories).",
)


@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Deontic argumentation engine."""


# ---------------------------------------------------------------------------
# args
# ---------------------------------------------------------------------------


@main.command(name="args")
@_THEORY_ARGUMENT
@click.option(
    "--format", "-f", "fmt", type=click.Choice(["text", "json"]), default="text"
)
def cmd_args(theory_file: str, fmt: str) -> None:
    """List every argument of the theory."""
    theory = _load_theory(theory_file)
    arguments = build_arguments(theory)
    if fmt == "json":
        _emit_json(
            {
                "theory": theory_section(theory),
                "arguments": arguments_section(arguments),
            }
        )
        return
    for identifier in arguments.ids:
        argument = arguments.argument(identifier)
        if argument.is_imaginary:
            tag = "imaginary"
        else:
            kind = argument_kind(argument)
            tag = f"natural/{kind}"
            if argument.top_rule is not None:
                tag += f" {argument.top_rule}"
        subs = " ".join(arguments.sub_ids(identifier))
        click.echo(f"{identifier}: {argument.conclusion} [{tag}] sub={{{subs}}}")


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------


@main.command(name="eval")
@_THEORY_ARGUMENT
@click.option(
    "--semantics",
    "-s",
    type=click.Choice(["grounded", "complete", "stable", "wp"]),
    default="grounded",
    show_default=True,
)
@click.option(
    "--format", "-f", "fmt", type=click.Choice(["text", "json"]), default="text"
)
@_GENERALIZED_FLAG
@_LIMIT_OPTION
@_GUARDS_FLAG
def cmd_eval(
    theory_file: str,
    semantics: str,
    fmt: str,
    imaginary_subargument_attacks: bool,
    argument_limit: int,
    no_fixpoint_guards: bool,
) -> None:
    """Compute extensions and sceptically justified conclusions."""
    theory = _load_theory(theory_file)
    arguments = build_arguments(theory)
    graph = compute_attacks(
        arguments,
        theory=theory,
        imaginary_subargument_attacks=imaginary_subargument_attacks,
    )
    flags: dict[str, Any] = {
        "imaginary_subargument_attacks": imaginary_subargument_attacks,
    }
    if semantics == "wp":
        flags["fixpoint_guards"] = not no_fixpoint_guards
        try:
            extension = wp_extension(graph, fixpoint_guards=not no_fixpoint_guards)
        except FixpointInvariantError as error:
            click.echo(f"invariant breach: {error}", err=True)
            sys.exit(EXIT_INVARIANT)
        result = {
            "semantics": "wp",
            "justified_arguments": sorted(extension.justified, key=arguments.index),
            "rejected_arguments": sorted(extension.rejected, key=arguments.index),
            "justified_conclusions": [
                str(c) for c in justified_conclusions(arguments, extension.justified)
            ],
            "flags": flags,
        }
        if fmt == "json":
            _emit_json(
                {
                    "theory": theory_section(theory),
                    "arguments": arguments_section(arguments),
                    "attacks": attacks_section(graph),
                    "result": result,
                }
            )
            return
        click.echo("semantics: wp")
        click.echo(f"justified arguments: {_id_set(arguments, extension.justified)}")
        click.echo(f"rejected arguments: {_id_set(arguments, extension.rejected)}")
        click.echo(
            f"justified conclusions: {_conclusion_set(arguments, extension.justified)}"
        )
        return
    try:
        outcome = evaluate(graph, semantics, argument_limit=argument_limit)
    except ArgumentLimitExceeded as error:
        click.echo(f"size limit: {error}", err=True)
        sys.exit(EXIT_SIZE)
    if outcome.no_extensions:
        flags["no_stable_extensions"] = True
        click.echo(
            "warning: no stable extensions; the sceptical justified set is vacuous",
            err=True,
        )
    result = {
        "semantics": semantics,
        "extensions": [
            sorted(extension, key=arguments.index) for extension in outcome.extensions
        ],
        "justified_arguments": sorted(outcome.justified, key=arguments.index),
        "justified_conclusions": [
            str(c) for c in justified_conclusions(arguments, outcome.justified)
        ],
        "flags": flags,
    }
    if fmt == "json":
        _emit_json(
            {
                "theory": theory_section(theory),
                "arguments": arguments_section(arguments),
                "attacks": attacks_section(graph),
                "result": result,
            }
        )
        return
    click.echo(f"semantics: {semantics}")
    click.echo(f"extensions: {len(outcome.extensions)}")
    for number, extension in enumerate(outcome.extensions, start=1):
        click.echo(f"extension {number}: {_id_set(arguments, extension)}")
    click.echo(f"justified arguments: {_id_set(arguments, outcome.justified)}")
    click.echo(
        f"justified conclusions: {_conclusion_set(arguments, outcome.justified)}"
    )


# ---------------------------------------------------------------------------
# trace
# ---------------------------------------------------------------------------


@main.command(name="trace")
@_THEORY_ARGUMENT
@click.option(
    "--format", "-f", "fmt", type=click.Choice(["text", "json"]), default="text"
)
@_GENERALIZED_FLAG
@_GUARDS_FLAG
def cmd_trace(
    theory_file: str,
    fmt: str,
    imaginary_subargument_attacks: bool,
    no_fixpoint_guards: bool,
) -> None:
    """Log every weak-permission iteration with reasons."""
    theory = _load_theory(theory_file)
    arguments = build_arguments(theory)
    graph = compute_attacks(
        arguments,
        theory=theory,
        imaginary_subargument_attacks=imaginary_subargument_attacks,
    )
    try:
        extension = wp_extension(graph, fixpoint_guards=not no_fixpoint_guards)
    except FixpointInvariantError as error:
        click.echo(f"invariant breach: {error}", err=True)
        sys.exit(EXIT_INVARIANT)
    if fmt == "json":
        _emit_json(
            {
                "theory": theory_section(theory),
                "arguments": arguments_section(arguments),
                "attacks": attacks_section(graph),
                "result": {
                    "semantics": "wp",
                    "justified_arguments": sorted(
                        extension.justified, key=arguments.index
                    ),
                    "rejected_arguments": sorted(
                        extension.rejected, key=arguments.index
                    ),
                    "justified_conclusions": [
                        str(c)
                        for c in justified_conclusions(arguments, extension.justified)
                    ],
                    "flags": {
                        "imaginary_subargument_attacks": imaginary_subargument_attacks,
                        "fixpoint_guards": not no_fixpoint_guards,
                    },
                },
                "trace": trace_section(extension),
            }
        )
        return
    for step in extension.steps:
        click.echo(f"step {step.index}:")
        for change in step.newly_rejected:
            witnesses = ", ".join(change.witnesses)
            suffix = f": {witnesses}" if witnesses else ""
            click.echo(f"  rejected {change.argument} [{change.clause}{suffix}]")
        for change in step.newly_justified:
            witnesses = ", ".join(change.witnesses)
            suffix = f": {witnesses}" if witnesses else ""
            click.echo(f"  justified {change.argument} [{change.clause}{suffix}]")
    click.echo(f"fixpoint after {extension.iterations} step(s)")
    click.echo(f"justified: {_id_set(arguments, extension.justified)}")
    click.echo(f"rejected: {_id_set(arguments, extension.rejected)}")


# ---------------------------------------------------------------------------
# attacks
# ---------------------------------------------------------------------------


def _dot_graph(arguments: ArgumentSet, graph: AttackGraph) -> str:
    lines = ["digraph attacks {", "  rankdir=LR;"]
    for identifier in arguments.ids:
        argument = arguments.argument(identifier)
        style = ", style=dashed" if argument.is_imaginary else ""
        lines.append(
            f'  "{identifier}" [label="{identifier}: {argument.conclusion}"{style}];'
        )
    for attacker, target in sorted(
        graph.pairs, key=lambda p: (arguments.index(p[0]), arguments.index(p[1]))
    ):
        conditions = ",".join(
            str(c)
            for c in sorted(
                {e.condition for e in graph.records_between(attacker, target)}
            )
        )
        lines.append(f'  "{attacker}" -> "{target}" [label="{conditions}"];')
    lines.append("}")
    return "\n".join(lines)


@main.command(name="attacks")
@_THEORY_ARGUMENT
@click.option(
    "--format", "-f", "fmt", type=click.Choice(["text", "json", "dot"]), default="text"
)
@_GENERALIZED_FLAG
def cmd_attacks(
    theory_file: str, fmt: str, imaginary_subargument_attacks: bool
) -> None:
    """Show the attack relation as a table or DOT graph."""
    theory = _load_theory(theory_file)
    arguments = build_arguments(theory)
    graph = compute_attacks(
        arguments,
        theory=theory,
        imaginary_subargument_attacks=imaginary_subargument_attacks,
    )
    if fmt == "json":
        _emit_json(
            {
                "theory": theory_section(theory),
                "arguments": arguments_section(arguments),
                "attacks": attacks_section(graph),
            }
        )
        return
    if fmt == "dot":
        click.echo(_dot_graph(arguments, graph))
        return
    for identifier in arguments.ids:
        targets = graph.targets_of(identifier)
        if targets:
            click.echo(f"{identifier} -> {', '.join(targets)}")
    for edge in graph.suppressed:
        click.echo(
            f"suppressed: {edge.attacker} -> {edge.target} "
            f"[condition {edge.condition}, witness {edge.witness}]"
        )


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


@main.command(name="check")
@_THEORY_ARGUMENT
@click.option(
    "--format", "-f", "fmt", type=click.Choice(["text", "json"]), default="text"
)
@_GENERALIZED_FLAG
@_LIMIT_OPTION
@_GUARDS_FLAG
def cmd_check(
    theory_file: str,
    fmt: str,
    imaginary_subargument_attacks: bool,
    argument_limit: int,
    no_fixpoint_guards: bool,
) -> None:
    """Re-verify the engine's structural guarantees on the theory."""
    theory = _load_theory(theory_file)
    report = verify_theorems(
        theory,
        imaginary_subargument_attacks=imaginary_subargument_attacks,
        argument_limit=argument_limit,
        fixpoint_guards=not no_fixpoint_guards,
    )
    if fmt == "json":
        _emit_json(
            {
                "theory": theory_section(theory),
                "checks": [
                    {"name": r.name, "status": r.status, "detail": r.detail}
                    for r in report.results
                ],
            }
        )
    else:
        for result in report.results:
            click.echo(f"{result.name}: {result.status} ({result.detail})")
    if report.failed:
        sys.exit(EXIT_CHECK)


# ---------------------------------------------------------------------------
# gen
# ---------------------------------------------------------------------------


@main.command(name="gen")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--atoms", type=int, default=4, show_default=True)
@click.option("--facts", type=int, default=2, show_default=True)
@click.option("--rules", type=int, default=5, show_default=True)
@click.option("--max-body", type=int, default=2, show_default=True)
@click.option("--superiority", type=int, default=0, show_default=True)
@click.option("--obligation-bias", type=float, default=0.3, show_default=True)
@click.option("--permission-weight", type=float, default=0.1, show_default=True)
@click.option("--deontic-body-weight", type=float, default=0.2, show_default=True)
@click.option("--weak-permission-weight", type=float, default=0.15, show_default=True)
@click.option("--acyclic/--no-acyclic", default=True, show_default=True)
@click.option("--inject-conflict", is_flag=True)
@click.option("--empty-obligation-bodies", is_flag=True)
def cmd_gen(
    seed: int,
    atoms: int,
    facts: int,
    rules: int,
    max_body: int,
    superiority: int,
    obligation_bias: float,
    permission_weight: float,
    deontic_body_weight: float,
    weak_permission_weight: float,
    acyclic: bool,
    inject_conflict: bool,
    empty_obligation_bodies: bool,
) -> None:
    """Generate a random theory in the input language."""
    params = GeneratorParams(
        seed=seed,
        atom_count=atoms,
        fact_count=facts,
        rule_count=rules,
        max_body_len=max_body,
        obligation_head_bias=obligation_bias,
        permission_head_weight=permission_weight,
        deontic_body_weight=deontic_body_weight,
        weak_permission_body_weight=weak_permission_weight,
        acyclic=acyclic,
        inject_conflict=inject_conflict,
        empty_obligation_bodies=empty_obligation_bodies,
        superiority_count=superiority,
    )
    click.echo(serialize_theory(generate_theory(params)), nl=False)
