#!/usr/bin/env python3
"""Re-run the seeded property corpora outside pytest and report statistics.

Three corpora mirror the acceptance suite:

* conflict corpus: injected empty-body obligation conflicts, no
  superiority; checks that conflicted literals never justify their weak
  permissions (grounded and stable) and that wp-conflicted literals keep
  both weak permissions in the fixed point;
* no-superiority corpus: free-form bodies without weak-permission
  premises; checks grounded inclusion in the wp-justified set;
* oracle corpus: free-form theories incl. superiority, capped at 15
  arguments; checks engine extensions against subset enumeration.

Every corpus also re-checks disjointness, conflict-freeness and
subargument closure of the fixed point.  Exit code 1 if any property
fails.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter

from dataclasses import dataclass

from deonarg import (
    ArgumentSet,
    AttackGraph,
    Theory,
    build_arguments,
    compute_attacks,
    evaluate,
    grounded_extension,
    is_conflict_free,
    wp_extension,
)
from deonarg.analysis import conflicted_literals, wp_conflicted_literals
from deonarg.testkit import GeneratorParams, brute_force_extensions, generate_theory

ARGUMENT_CAP = 15


@dataclass(frozen=True)
class CorpusCase:
    seed: int
    theory: Theory
    arguments: ArgumentSet
    graph: AttackGraph


def build_corpus(make_params, *, count: int, cap: int | None = ARGUMENT_CAP):
    """Deterministic seed iteration, filtered by argument count only."""
    cases: list[CorpusCase] = []
    seed = 0
    while len(cases) < count:
        theory = generate_theory(make_params(seed))
        arguments = build_arguments(theory)
        if cap is None or len(arguments) <= cap:
            cases.append(CorpusCase(seed, theory, arguments, compute_attacks(arguments, theory)))
        seed += 1
    return tuple(cases)


def conflict_params(seed: int) -> GeneratorParams:
    return GeneratorParams(
        seed=seed,
        atom_count=3,
        rule_count=4,
        empty_obligation_bodies=True,
        acyclic=True,
        inject_conflict=True,
    )


def no_superiority_params(seed: int) -> GeneratorParams:
    return GeneratorParams(seed=seed, weak_permission_body_weight=0.0)


def oracle_params(seed: int) -> GeneratorParams:
    return GeneratorParams(
        seed=seed,
        atom_count=3,
        rule_count=4,
        inject_conflict=True,
        superiority_count=2,
        acyclic=(seed % 2 == 0),
    )


def imaginary_for(arguments, literal):
    from deonarg import perm_w

    (identifier,) = (
        i for i in arguments.concluders(perm_w(literal)) if arguments.argument(i).is_imaginary
    )
    return identifier


def shared_invariants(case, failures: list[str]) -> None:
    ext = wp_extension(case.graph)
    if not ext.justified.isdisjoint(ext.rejected):
        failures.append(f"seed {case.seed}: justified/rejected overlap")
    if not is_conflict_free(case.graph, ext.justified):
        failures.append(f"seed {case.seed}: justified set not conflict-free")
    for identifier in ext.justified:
        if not set(case.arguments.sub_ids(identifier)) <= ext.justified:
            failures.append(f"seed {case.seed}: {identifier} justified without its subarguments")


def run_conflict_corpus(count: int) -> list[str]:
    failures: list[str] = []
    stats: Counter[str] = Counter()
    corpus = build_corpus(conflict_params, count=count)
    for case in corpus:
        shared_invariants(case, failures)
        conflicted = conflicted_literals(case.theory, case.arguments)
        stats["conflicted literals"] += len(conflicted)
        justified_sets = [evaluate(case.graph, "grounded").justified]
        stable = evaluate(case.graph, "stable")
        if stable.no_extensions:
            stats["no stable extension"] += 1
        else:
            justified_sets.append(stable.justified)
        for literal in conflicted:
            for polarity in (literal, literal.negated):
                weak = imaginary_for(case.arguments, polarity)
                if any(weak in justified for justified in justified_sets):
                    failures.append(f"seed {case.seed}: perm_w({polarity}) justified despite conflict")
        ext = wp_extension(case.graph)
        for literal in wp_conflicted_literals(case.theory, case.arguments, ext):
            stats["wp-conflicted literals"] += 1
            for polarity in (literal, literal.negated):
                if imaginary_for(case.arguments, polarity) not in ext.justified:
                    failures.append(f"seed {case.seed}: perm_w({polarity}) lost in the fixed point")
    print(f"  {len(corpus)} theories, {stats['conflicted literals']} conflicted literals, "
          f"{stats['wp-conflicted literals']} wp-conflicted, "
          f"{stats['no stable extension']} without stable extensions")
    return failures


def run_no_superiority_corpus(count: int) -> list[str]:
    failures: list[str] = []
    included = 0
    corpus = build_corpus(no_superiority_params, count=count, cap=None)
    for case in corpus:
        shared_invariants(case, failures)
        grounded = grounded_extension(case.graph)
        ext = wp_extension(case.graph)
        if grounded <= ext.justified:
            included += 1
        else:
            failures.append(f"seed {case.seed}: grounded not within wp-justified")
    print(f"  {len(corpus)} theories, grounded included in wp-justified on {included}")
    return failures


def run_oracle_corpus(count: int) -> list[str]:
    failures: list[str] = []
    corpus = build_corpus(oracle_params, count=count)
    for case in corpus:
        shared_invariants(case, failures)
        oracle = brute_force_extensions(case.graph)
        if grounded_extension(case.graph) != oracle.grounded:
            failures.append(f"seed {case.seed}: grounded disagrees with the oracle")
        for semantics, expected in (("complete", oracle.complete), ("stable", oracle.stable)):
            found = evaluate(case.graph, semantics).extensions
            if len(found) != len(expected) or set(found) != set(expected):
                failures.append(f"seed {case.seed}: {semantics} extensions disagree with the oracle")
    print(f"  {len(corpus)} theories checked against subset enumeration")
    return failures


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=200, help="instances per corpus")
    options = parser.parse_args(argv)

    failures: list[str] = []
    for name, runner in (
        ("conflict corpus", run_conflict_corpus),
        ("no-superiority corpus", run_no_superiority_corpus),
        ("oracle corpus", run_oracle_corpus),
    ):
        print(f"{name}:")
        started = time.perf_counter()
        failures += runner(options.count)
        print(f"  done in {time.perf_counter() - started:.2f}s")

    if failures:
        print(f"\n{len(failures)} failure(s):")
        for failure in failures:
            print(f"  {failure}")
        return 1
    print("\nall properties hold")
    return 0


if __name__ == "__main__":
    sys.exit(main())
