#!/usr/bin/env python3
"""Walk every bundled theory through the full pipeline and print the results.

For each theory: the argument listing, the attack table (with suppressed
records), the grounded/complete/stable extensions, the weak-permission
fixed point with its trace, the conflict diagnostics and the verifier
report.  Useful as a quick end-to-end smoke run and as a worked tour of
the engine's outputs.
"""

from __future__ import annotations

import argparse
import sys
import time

from deonarg import (
    build_arguments,
    compute_attacks,
    conflict_report,
    evaluate,
    facultative_status,
    justified_conclusions,
    parse_theory,
    verify_theorems,
    wp_extension,
)
from deonarg.corpus import BUILTIN_THEORIES


def render_ids(members) -> str:
    ordered = sorted(members, key=lambda i: (i[0], int(i[1:])))
    return "{" + ", ".join(ordered) + "}"


def run_theory(name: str, text: str, *, generalized: bool) -> None:
    print(f"\n=== {name} " + "=" * max(0, 60 - len(name)))
    print(text.rstrip())

    theory = parse_theory(text)
    arguments = build_arguments(theory)
    graph = compute_attacks(arguments, theory, imaginary_subargument_attacks=generalized)

    print(f"\narguments ({len(arguments)}):")
    for identifier, argument in arguments:
        tag = "imaginary" if argument.is_imaginary else f"natural, top rule {argument.top_rule}"
        print(f"  {identifier}: {argument.conclusion}  [{tag}]")

    print(f"\nattacks ({len(graph.edges)} records, {len(graph.suppressed)} suppressed):")
    for edge in graph.edges:
        print(f"  {edge.attacker} > {edge.target}  [condition {edge.condition}, witness {edge.witness}]")
    for record in graph.suppressed:
        print(f"  suppressed {record.attacker} > {record.target}  [condition {record.condition}]")

    for semantics in ("grounded", "complete", "stable"):
        result = evaluate(graph, semantics)
        extensions = ", ".join(render_ids(e) for e in result.extensions) or "(none)"
        print(f"\n{semantics}: {extensions}")
        names = [str(c) for c in justified_conclusions(arguments, result.justified)]
        print(f"  justified conclusions: {', '.join(names) or '(none)'}")

    ext = wp_extension(graph)
    print(f"\nweak-permission fixed point ({ext.iterations} iteration(s)):")
    for step in ext.steps:
        for change in step.newly_rejected:
            extra = f": {', '.join(change.witnesses)}" if change.witnesses else ""
            print(f"  [{step.index}] rejected {change.argument} ({change.clause}{extra})")
        for change in step.newly_justified:
            print(f"  [{step.index}] justified {change.argument} ({change.clause})")
    print(f"  justified: {render_ids(ext.justified)}")
    print(f"  rejected:  {render_ids(ext.rejected)}")

    report = conflict_report(theory, arguments, ext)
    conflicted = ", ".join(sorted(str(l) for l in report.conflicted_literals)) or "(none)"
    wp_conflicted = ", ".join(sorted(str(l) for l in report.wp_conflicted_literals)) or "(none)"
    print(f"\nconflicted literals: {conflicted}")
    print(f"wp-conflicted literals: {wp_conflicted}")
    conclusions = justified_conclusions(arguments, ext.justified)
    for literal in sorted({p.literal for p in report.conflicted}, key=lambda l: l.sort_key()):
        status = facultative_status(literal, conclusions, "wp")
        print(f"  {literal}: {status.status}")

    checks = verify_theorems(theory, imaginary_subargument_attacks=generalized)
    print("\nchecks:")
    for result in checks.results:
        print(f"  {result.name}: {result.status} ({result.detail})")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "names",
        nargs="*",
        metavar="NAME",
        help=f"theories to run (default: all of {', '.join(BUILTIN_THEORIES)})",
    )
    parser.add_argument(
        "--imaginary-subargument-attacks",
        action="store_true",
        help="let attacks on imaginary premises reach the containing arguments",
    )
    options = parser.parse_args(argv)

    unknown = [name for name in options.names if name not in BUILTIN_THEORIES]
    if unknown:
        parser.error(f"unknown theory name(s): {', '.join(unknown)}")
    names = options.names or list(BUILTIN_THEORIES)
    started = time.perf_counter()
    for name in names:
        run_theory(name, BUILTIN_THEORIES[name], generalized=options.imaginary_subargument_attacks)
    print(f"\nran {len(names)} theories in {time.perf_counter() - started:.2f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
