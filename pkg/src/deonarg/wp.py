"""Weak-permission fixed-point semantics.

Computes the unique pair of justified and rejected argument sets by a
monotone iteration over support, undercut, acceptability and rejection
predicates, together with a per-iteration trace explaining every status
change.

Within one iteration all predicates read the previous snapshot, so the
result is deterministic and order-independent.  Newly rejected
arguments are collected before newly justified ones, and each side
excludes arguments already on the other: these exclusion guards keep
the justified and rejected sets disjoint and the justified set
conflict-free.  Disabling them (``fixpoint_guards=False``) reproduces
the unguarded textbook recursion, which breaches those invariants on
some theories; the breach is then reported as
:class:`FixpointInvariantError` rather than silently returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .arguments import ArgumentSet
from .attacks import AttackGraph

# ---------------------------------------------------------------------------
# errors
# ---------------------------------------------------------------------------


class FixpointInvariantError(Exception):
    """The iteration produced an inconsistent justified/rejected state.

    ``kind`` is ``"overlap"`` when an argument landed in both sets and
    ``"conflict"`` when two justified arguments attack each other.
    """

    def __init__(self, step: int, kind: str, members: tuple[str, ...]) -> None:
        listing = ", ".join(members)
        super().__init__(
            f"fixed-point invariant breached at iteration {step}: "
            f"{kind} involving {listing}"
        )
        self.step = step
        self.kind = kind
        self.members = members


# ---------------------------------------------------------------------------
# support and undercut
# ---------------------------------------------------------------------------


def supports(arguments: ArgumentSet, members: Iterable[str], identifier: str) -> bool:
    """True when every proper subargument of the argument is a member."""
    return frozenset(arguments.proper_sub_ids(identifier)) <= frozenset(members)


def supported_by(arguments: ArgumentSet, members: Iterable[str]) -> frozenset[str]:
    chosen = frozenset(members)
    return frozenset(
        identifier
        for identifier in arguments.ids
        if frozenset(arguments.proper_sub_ids(identifier)) <= chosen
    )


def _attackers_by_witness(graph: AttackGraph) -> Mapping[str, tuple[str, ...]]:
    """Attackers of each witness position, from the active attack records."""
    collected: dict[str, list[str]] = {}
    for edge in graph.edges:
        bucket = collected.setdefault(edge.witness, [])
        if edge.attacker not in bucket:
            bucket.append(edge.attacker)
    return {witness: tuple(bucket) for witness, bucket in collected.items()}


def undercuts(graph: AttackGraph, members: Iterable[str], identifier: str) -> bool:
    """True when the set supports an attack on a proper natural subargument.

    Only attack records whose witness is a proper, non-imaginary
    subargument of the argument count; a rebuttal witnessed at the
    argument itself never undercuts it.
    """
    chosen = frozenset(members)
    arguments = graph.arguments
    by_witness = _attackers_by_witness(graph)
    for witness in arguments.proper_sub_ids(identifier):
        if arguments.argument(witness).is_imaginary:
            continue
        for attacker in by_witness.get(witness, ()):
            if supports(arguments, chosen, attacker):
                return True
    return False


def undercut_by(graph: AttackGraph, members: Iterable[str]) -> frozenset[str]:
    chosen = frozenset(members)
    return frozenset(
        identifier
        for identifier in graph.arguments.ids
        if undercuts(graph, chosen, identifier)
    )


# ---------------------------------------------------------------------------
# trace records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StatusChange:
    """One argument changing status, with the clause that fired.

    Acceptance clauses: ``attackers-all-rejected`` (imaginary) and
    ``supported-and-defended`` (natural).  Rejection clauses:
    ``attacker-justified`` (imaginary), ``subargument-rejected`` and
    ``attacker-supported`` (natural).  ``witnesses`` lists the
    arguments the clause quantified over.
    """

    argument: str
    clause: str
    witnesses: tuple[str, ...] = ()


@dataclass(frozen=True)
class TraceStep:
    index: int
    newly_rejected: tuple[StatusChange, ...]
    newly_justified: tuple[StatusChange, ...]
    rejected: frozenset[str]
    justified: frozenset[str]


@dataclass(frozen=True)
class WpExtension:
    justified: frozenset[str]
    rejected: frozenset[str]
    steps: tuple[TraceStep, ...]

    @property
    def iterations(self) -> int:
        return len(self.steps)


# ---------------------------------------------------------------------------
# the fixed point
# ---------------------------------------------------------------------------


def wp_acceptable(
    graph: AttackGraph,
    identifier: str,
    rejected: Iterable[str],
    justified: Iterable[str],
) -> bool:
    """Acceptability of one argument against a rejected/justified snapshot.

    An imaginary argument is acceptable when every attacker is already
    rejected.  A natural argument is acceptable when the justified set
    supports it and every attacker is either rejected or undercut by
    the justified set.
    """
    arguments = graph.arguments
    rejected = frozenset(rejected)
    justified = frozenset(justified)
    attackers = graph.attackers_of(identifier)
    if arguments.argument(identifier).is_imaginary:
        return all(attacker in rejected for attacker in attackers)
    if not supports(arguments, justified, identifier):
        return False
    return all(
        attacker in rejected or undercuts(graph, justified, attacker)
        for attacker in attackers
    )


def wp_rejected(
    graph: AttackGraph,
    identifier: str,
    rejected: Iterable[str],
    justified: Iterable[str],
) -> bool:
    """Rejection of one argument against a rejected/justified snapshot.

    An imaginary argument is rejected when some attacker is justified.
    A natural argument is rejected when some proper subargument is
    already rejected or some attacker is supported by the justified
    set.
    """
    arguments = graph.arguments
    rejected = frozenset(rejected)
    justified = frozenset(justified)
    if arguments.argument(identifier).is_imaginary:
        return any(a in justified for a in graph.attackers_of(identifier))
    if any(sub in rejected for sub in arguments.proper_sub_ids(identifier)):
        return True
    return any(
        supports(arguments, justified, attacker)
        for attacker in graph.attackers_of(identifier)
    )


def wp_extension(graph: AttackGraph, *, fixpoint_guards: bool = True) -> WpExtension:
    """Iterate to the least fixed point, recording every status change.

    Each iteration first extends the rejected set, then the justified
    set; both predicate evaluations read the previous snapshot only.
    With guards enabled (the default) an argument rejected by the time
    the justified side is formed can no longer be accepted, and an
    argument already justified is never rejected.  The disjointness and
    conflict-freeness invariants are checked after every iteration
    regardless of the guard setting.
    """
    arguments = graph.arguments
    ids = arguments.ids
    imaginary = frozenset(arguments.imaginary_ids())
    proper_subs = {i: tuple(arguments.proper_sub_ids(i)) for i in ids}
    by_witness = _attackers_by_witness(graph)

    def is_supported(members: frozenset[str], identifier: str) -> bool:
        return all(sub in members for sub in proper_subs[identifier])

    def is_undercut(members: frozenset[str], identifier: str) -> bool:
        for witness in proper_subs[identifier]:
            if witness in imaginary:
                continue
            for attacker in by_witness.get(witness, ()):
                if is_supported(members, attacker):
                    return True
        return False

    def rejection(
        identifier: str, old_rejected: frozenset[str], old_justified: frozenset[str]
    ) -> StatusChange | None:
        attackers = graph.attackers_of(identifier)
        if identifier in imaginary:
            hits = tuple(a for a in attackers if a in old_justified)
            if hits:
                return StatusChange(identifier, "attacker-justified", hits)
            return None
        hits = tuple(s for s in proper_subs[identifier] if s in old_rejected)
        if hits:
            return StatusChange(identifier, "subargument-rejected", hits)
        hits = tuple(a for a in attackers if is_supported(old_justified, a))
        if hits:
            return StatusChange(identifier, "attacker-supported", hits)
        return None

    def acceptance(
        identifier: str, old_rejected: frozenset[str], old_justified: frozenset[str]
    ) -> StatusChange | None:
        attackers = graph.attackers_of(identifier)
        if identifier in imaginary:
            if all(a in old_rejected for a in attackers):
                return StatusChange(identifier, "attackers-all-rejected", attackers)
            return None
        if not is_supported(old_justified, identifier):
            return None
        if all(
            a in old_rejected or is_undercut(old_justified, a) for a in attackers
        ):
            return StatusChange(identifier, "supported-and-defended", attackers)
        return None

    justified: set[str] = set()
    rejected: set[str] = set()
    steps: list[TraceStep] = []
    for index in range(1, 2 * len(ids) + 2):
        old_justified = frozenset(justified)
        old_rejected = frozenset(rejected)
        newly_rejected: list[StatusChange] = []
        for identifier in ids:
            if identifier in old_rejected:
                continue
            if fixpoint_guards and identifier in old_justified:
                continue
            change = rejection(identifier, old_rejected, old_justified)
            if change is not None:
                newly_rejected.append(change)
        rejected.update(change.argument for change in newly_rejected)
        newly_justified: list[StatusChange] = []
        for identifier in ids:
            if identifier in old_justified:
                continue
            if fixpoint_guards and identifier in rejected:
                continue
            change = acceptance(identifier, old_rejected, old_justified)
            if change is not None:
                newly_justified.append(change)
        justified.update(change.argument for change in newly_justified)

        overlap = justified & rejected
        if overlap:
            raise FixpointInvariantError(
                index, "overlap", tuple(sorted(overlap, key=arguments.index))
            )
        clash = sorted(
            {
                member
                for attacker, target in graph.pairs
                if attacker in justified and target in justified
                for member in (attacker, target)
            },
            key=arguments.index,
        )
        if clash:
            raise FixpointInvariantError(index, "conflict", tuple(clash))

        if not newly_rejected and not newly_justified:
            break
        steps.append(
            TraceStep(
                index,
                tuple(newly_rejected),
                tuple(newly_justified),
                frozenset(rejected),
                frozenset(justified),
            )
        )
    else:
        raise AssertionError("weak-permission iteration failed to stabilize")
    return WpExtension(frozenset(justified), frozenset(rejected), tuple(steps))
