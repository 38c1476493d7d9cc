"""Theory-level diagnostics and structural self-checks.

Detects conflicting obligation rule pairs, classifies literals as
facultative or weakly facultative, and re-verifies the engine's
structural guarantees on a concrete theory.  The verifiers are
production code surfaced through the ``check`` command: they recompute
each guarantee from first principles instead of trusting the engine's
internal invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .arguments import ArgumentSet, build_arguments
from .attacks import AttackGraph, compute_attacks
from .model import (
    Conclusion,
    DeonticLiteral,
    DeonticOperator,
    Literal,
    Theory,
    complement,
    perm,
    perm_w,
)
from .semantics import (
    DEFAULT_ARGUMENT_LIMIT,
    ArgumentLimitExceeded,
    grounded_extension,
    is_conflict_free,
    justified_conclusions,
    stable_extensions,
)
from .wp import FixpointInvariantError, WpExtension, wp_extension

# ---------------------------------------------------------------------------
# conflict detection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConflictPair:
    """Two rules obliging a literal and its complement.

    ``literal`` is reported in positive polarity; ``supporting_rule``
    concludes the obligation of that literal and ``opposing_rule`` the
    obligation of its complement.
    """

    literal: Literal
    supporting_rule: str
    opposing_rule: str


@dataclass(frozen=True)
class ConflictReport:
    conflicted: tuple[ConflictPair, ...]
    wp_conflicted: tuple[ConflictPair, ...]

    @property
    def conflicted_literals(self) -> frozenset[Literal]:
        return frozenset(pair.literal for pair in self.conflicted)

    @property
    def wp_conflicted_literals(self) -> frozenset[Literal]:
        return frozenset(pair.literal for pair in self.wp_conflicted)


def _obligation_head(rule) -> Literal | None:
    head = rule.head
    if isinstance(head, DeonticLiteral) and head.operator is DeonticOperator.OBLIGATION:
        return head.literal
    return None


def _body_supported(rule, arguments: ArgumentSet, justified: frozenset[str] | None) -> bool:
    """Every body element has a concluding argument (a justified one if given)."""
    for element in rule.body:
        concluders = arguments.concluders(element)
        if justified is None:
            if not concluders:
                return False
        elif not any(identifier in justified for identifier in concluders):
            return False
    return True


def _conflict_pairs(
    theory: Theory,
    arguments: ArgumentSet,
    justified: frozenset[str] | None,
    *,
    ignore_adjudicated: bool,
) -> tuple[ConflictPair, ...]:
    pairs: list[ConflictPair] = []
    for supporting in theory.rules:
        head = _obligation_head(supporting)
        if head is None or not head.positive:
            continue
        for opposing in theory.rules:
            if _obligation_head(opposing) != complement(head):
                continue
            if ignore_adjudicated and (
                theory.is_superior(supporting.label, opposing.label)
                or theory.is_superior(opposing.label, supporting.label)
            ):
                continue
            if not _body_supported(supporting, arguments, justified):
                continue
            if not _body_supported(opposing, arguments, justified):
                continue
            pairs.append(ConflictPair(head, supporting.label, opposing.label))
    pairs.sort(key=lambda p: (p.literal.sort_key(), p.supporting_rule, p.opposing_rule))
    return tuple(pairs)


def conflicted_literals(theory: Theory, arguments: ArgumentSet) -> frozenset[Literal]:
    """Literals obliged both ways by rules whose bodies all have arguments."""
    return frozenset(
        pair.literal
        for pair in _conflict_pairs(theory, arguments, None, ignore_adjudicated=False)
    )


def wp_conflicted_literals(
    theory: Theory, arguments: ArgumentSet, extension: WpExtension
) -> frozenset[Literal]:
    """Conflicted literals whose rule bodies are backed by justified arguments.

    A pair where one rule is declared superior to the other does not
    count: the priority adjudicates the conflict, so the two
    obligations never stand unresolved side by side.
    """
    return frozenset(
        pair.literal
        for pair in _conflict_pairs(
            theory, arguments, extension.justified, ignore_adjudicated=True
        )
    )


def conflict_report(
    theory: Theory, arguments: ArgumentSet, extension: WpExtension
) -> ConflictReport:
    return ConflictReport(
        _conflict_pairs(theory, arguments, None, ignore_adjudicated=False),
        _conflict_pairs(
            theory, arguments, extension.justified, ignore_adjudicated=True
        ),
    )


# ---------------------------------------------------------------------------
# facultative classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FacultativeStatus:
    literal: Literal
    semantics: str
    status: str  # "facultative" | "weakly-facultative" | "neither"


def facultative_status(
    literal: Literal, justified: Iterable[Conclusion], semantics: str
) -> FacultativeStatus:
    """Classify a literal from the justified conclusions of a semantics.

    Facultative means both strong permissions (of the literal and its
    complement) are justified; weakly facultative means both weak
    permissions are.  The strong reading wins when both apply.
    """
    conclusions = frozenset(justified)
    other = complement(literal)
    if perm(literal) in conclusions and perm(other) in conclusions:
        status = "facultative"
    elif perm_w(literal) in conclusions and perm_w(other) in conclusions:
        status = "weakly-facultative"
    else:
        status = "neither"
    return FacultativeStatus(literal, semantics, status)


# ---------------------------------------------------------------------------
# structural verifiers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    detail: str


@dataclass(frozen=True)
class CheckReport:
    results: tuple[CheckResult, ...]

    @property
    def failed(self) -> bool:
        return any(result.status == "fail" for result in self.results)


def _imaginary_id(arguments: ArgumentSet, literal: Literal) -> str:
    for identifier in arguments.concluders(perm_w(literal)):
        if arguments.argument(identifier).is_imaginary:
            return identifier
    raise AssertionError(f"no imaginary argument for {literal}")


def _weak_permission_exclusion(
    name: str,
    conflicted: frozenset[Literal],
    conclusions: frozenset[Conclusion],
) -> CheckResult:
    offending = sorted(
        str(literal)
        for literal in conflicted
        if perm_w(literal) in conclusions or perm_w(complement(literal)) in conclusions
    )
    if offending:
        return CheckResult(
            name,
            "fail",
            "weak permission justified for conflicted literal(s): "
            + ", ".join(offending),
        )
    return CheckResult(
        name,
        "pass",
        f"{len(conflicted)} conflicted literal(s), no justified weak permission",
    )


def verify_theorems(
    theory: Theory,
    *,
    imaginary_subargument_attacks: bool = False,
    argument_limit: int = DEFAULT_ARGUMENT_LIMIT,
    fixpoint_guards: bool = True,
) -> CheckReport:
    """Re-verify every structural guarantee on one theory.

    Checks that hold only for restricted theory classes (no superiority
    pairs, or a stable extension that actually exists) are reported as
    skipped outside their scope rather than counted as failures.
    """
    arguments = build_arguments(theory)
    graph = compute_attacks(
        arguments,
        theory=theory,
        imaginary_subargument_attacks=imaginary_subargument_attacks,
    )
    results: list[CheckResult] = []
    conflicted = conflicted_literals(theory, arguments)
    superiority_free = not theory.superiority
    grounded = grounded_extension(graph)

    # Conflicted weak permissions stay out of the grounded extension.
    name = "conflicted-weak-permissions-not-grounded"
    if not superiority_free:
        results.append(
            CheckResult(
                name, "skipped", "superiority pairs adjudicate conflicts; out of scope"
            )
        )
    else:
        conclusions = frozenset(justified_conclusions(arguments, grounded))
        results.append(_weak_permission_exclusion(name, conflicted, conclusions))

    # Conflicted weak permissions stay out of the sceptical stable core.
    name = "conflicted-weak-permissions-not-stable"
    if not superiority_free:
        results.append(
            CheckResult(
                name, "skipped", "superiority pairs adjudicate conflicts; out of scope"
            )
        )
    else:
        try:
            extensions = stable_extensions(graph, argument_limit=argument_limit)
        except ArgumentLimitExceeded as error:
            results.append(CheckResult(name, "skipped", str(error)))
        else:
            if not extensions:
                results.append(
                    CheckResult(
                        name,
                        "skipped",
                        "no stable extensions; sceptical quantification is vacuous",
                    )
                )
            else:
                justified = frozenset.intersection(*extensions)
                conclusions = frozenset(justified_conclusions(arguments, justified))
                results.append(
                    _weak_permission_exclusion(name, conflicted, conclusions)
                )

    try:
        extension = wp_extension(graph, fixpoint_guards=fixpoint_guards)
    except FixpointInvariantError as error:
        results.append(
            CheckResult("wp-sets-disjoint-and-conflict-free", "fail", str(error))
        )
        for name in (
            "wp-conflicts-recover-weak-permissions",
            "grounded-subset-of-wp-justified",
            "wp-justified-subargument-closure",
        ):
            results.append(
                CheckResult(name, "skipped", "weak-permission fixed point unavailable")
            )
        return CheckReport(tuple(results))

    # Justified and rejected sets are disjoint; justified set conflict-free.
    name = "wp-sets-disjoint-and-conflict-free"
    overlap = sorted(extension.justified & extension.rejected, key=arguments.index)
    if overlap:
        results.append(
            CheckResult(name, "fail", "overlapping arguments: " + ", ".join(overlap))
        )
    elif not is_conflict_free(graph, extension.justified):
        clashes = sorted(
            {
                identifier
                for attacker, target in graph.pairs
                if attacker in extension.justified and target in extension.justified
                for identifier in (attacker, target)
            },
            key=arguments.index,
        )
        results.append(
            CheckResult(
                name, "fail", "justified arguments attack each other: " + ", ".join(clashes)
            )
        )
    else:
        results.append(
            CheckResult(
                name,
                "pass",
                f"{len(extension.justified)} justified, "
                f"{len(extension.rejected)} rejected, disjoint and conflict-free",
            )
        )

    # Unresolved conflicts with fully justified premises recover both
    # weak permissions.
    name = "wp-conflicts-recover-weak-permissions"
    offending: list[str] = []
    checked = 0
    for pair in _conflict_pairs(
        theory, arguments, extension.justified, ignore_adjudicated=True
    ):
        supported_sides = 0
        for label in (pair.supporting_rule, pair.opposing_rule):
            if any(
                arguments.argument(identifier).top_rule == label
                and frozenset(arguments.proper_sub_ids(identifier))
                <= extension.justified
                for identifier in arguments.natural_ids()
            ):
                supported_sides += 1
        if supported_sides < 2:
            continue
        checked += 1
        for literal in (pair.literal, complement(pair.literal)):
            identifier = _imaginary_id(arguments, literal)
            if identifier not in extension.justified:
                offending.append(f"{literal} ({identifier})")
    if offending:
        results.append(
            CheckResult(
                name,
                "fail",
                "weak permission not justified despite a fully justified conflict: "
                + ", ".join(sorted(set(offending))),
            )
        )
    else:
        results.append(
            CheckResult(name, "pass", f"{checked} fully justified conflict pair(s)")
        )

    # Grounded acceptance implies justification under the fixed point.
    name = "grounded-subset-of-wp-justified"
    if not superiority_free:
        results.append(
            CheckResult(
                name, "skipped", "stated for theories without superiority pairs"
            )
        )
    else:
        missing = sorted(grounded - extension.justified, key=arguments.index)
        if missing:
            results.append(
                CheckResult(
                    name,
                    "fail",
                    "grounded but not wp-justified: " + ", ".join(missing),
                )
            )
        else:
            results.append(
                CheckResult(
                    name,
                    "pass",
                    f"{len(grounded)} grounded argument(s) all wp-justified",
                )
            )

    # Every subargument of a justified argument is justified.
    name = "wp-justified-subargument-closure"
    broken = sorted(
        {
            identifier
            for identifier in extension.justified
            for sub in arguments.sub_ids(identifier)
            if sub not in extension.justified
        },
        key=arguments.index,
    )
    if broken:
        results.append(
            CheckResult(
                name,
                "fail",
                "justified argument with unjustified subargument: " + ", ".join(broken),
            )
        )
    else:
        results.append(CheckResult(name, "pass", "closure holds"))

    return CheckReport(tuple(results))
