"""Acceptability semantics over an attack graph.

Implements grounded, complete and stable extensions on the
post-suppression attack relation, plus the sceptical notion of a
justified argument (member of every extension under the chosen
semantics).

The grounded extension is computed as the least fixpoint of the
characteristic function.  Complete and stable extensions are enumerated
by a backtracking search over argument statuses with constraint
propagation; the search refuses to start above ``argument_limit``
arguments because the worst case is exponential.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .arguments import ArgumentSet
from .attacks import AttackGraph
from .model import Conclusion, conclusion_sort_key

# ---------------------------------------------------------------------------
# configuration and errors
# ---------------------------------------------------------------------------

DEFAULT_ARGUMENT_LIMIT = 24

SEMANTICS_NAMES = ("grounded", "complete", "stable")


class ArgumentLimitExceeded(Exception):
    """Raised when an extension enumeration would be too large to run."""

    def __init__(self, count: int, limit: int) -> None:
        super().__init__(
            f"theory produces {count} arguments, above the enumeration "
            f"limit of {limit}; raise the limit to force the search"
        )
        self.count = count
        self.limit = limit


# ---------------------------------------------------------------------------
# bitmask internals
# ---------------------------------------------------------------------------


def _masks(graph: AttackGraph) -> tuple[tuple[str, ...], list[int], list[int]]:
    """Attacker and target bitmasks indexed by argument position."""
    ids = graph.arguments.ids
    position = {identifier: k for k, identifier in enumerate(ids)}
    attackers = [0] * len(ids)
    targets = [0] * len(ids)
    for attacker, target in graph.pairs:
        attackers[position[target]] |= 1 << position[attacker]
        targets[position[attacker]] |= 1 << position[target]
    return ids, attackers, targets


def _attacked_by(mask: int, targets: list[int]) -> int:
    acc = 0
    while mask:
        low = mask & -mask
        acc |= targets[low.bit_length() - 1]
        mask ^= low
    return acc


def _to_ids(mask: int, ids: tuple[str, ...]) -> frozenset[str]:
    return frozenset(ids[k] for k in range(len(ids)) if (mask >> k) & 1)


# ---------------------------------------------------------------------------
# set predicates
# ---------------------------------------------------------------------------


def is_conflict_free(graph: AttackGraph, members: Iterable[str]) -> bool:
    """True when no member of the set attacks another member (or itself)."""
    chosen = frozenset(members)
    return not any(
        (attacker, target) in graph.pairs
        for attacker in chosen
        for target in chosen
    )


def is_admissible(graph: AttackGraph, members: Iterable[str]) -> bool:
    """Conflict-free and every attacker of a member is counter-attacked."""
    chosen = frozenset(members)
    if not is_conflict_free(graph, chosen):
        return False
    attacked = {
        target for member in chosen for target in graph.targets_of(member)
    }
    return all(
        attacker in attacked
        for member in chosen
        for attacker in graph.attackers_of(member)
    )


# ---------------------------------------------------------------------------
# grounded semantics
# ---------------------------------------------------------------------------


def grounded_extension(graph: AttackGraph) -> frozenset[str]:
    """Least fixpoint of the characteristic function."""
    ids, attackers, targets = _masks(graph)
    n = len(ids)
    current = 0
    while True:
        attacked = _attacked_by(current, targets)
        acceptable = 0
        for k in range(n):
            if attackers[k] & ~attacked == 0:
                acceptable |= 1 << k
        if acceptable == current:
            return _to_ids(current, ids)
        current = acceptable


# ---------------------------------------------------------------------------
# complete and stable semantics
# ---------------------------------------------------------------------------


def _complete_masks(graph: AttackGraph, argument_limit: int) -> list[int]:
    """All complete extensions as bitmasks, via backtracking search.

    The search assigns each argument a status (committed, excluded or
    undecided) and propagates three consequences before branching:
    arguments attacked by the committed set are excluded, arguments
    defended by the committed set are committed, and a branch dies when
    an attacker of a committed argument can no longer be counter-attacked
    by anyone.  Leaves are verified against the exact definition, so the
    propagation only has to be sound, not exhaustive.
    """
    ids, attackers, targets = _masks(graph)
    n = len(ids)
    if n > argument_limit:
        raise ArgumentLimitExceeded(n, argument_limit)
    full = (1 << n) - 1
    results: list[int] = []

    def is_complete(mask: int) -> bool:
        attacked = _attacked_by(mask, targets)
        if mask & attacked:
            return False
        for k in range(n):
            defended = attackers[k] & ~attacked == 0
            if bool((mask >> k) & 1) != defended:
                return False
        return True

    def search(in_mask: int, out_mask: int) -> None:
        while True:
            changed = False
            attacked = _attacked_by(in_mask, targets)
            pending = full & ~(in_mask | out_mask)
            scan = pending
            while scan:
                low = scan & -scan
                scan ^= low
                k = low.bit_length() - 1
                if (attacked >> k) & 1:
                    out_mask |= low
                    changed = True
                elif attackers[k] & ~attacked == 0:
                    if targets[k] & in_mask:
                        return
                    in_mask |= low
                    out_mask |= (attackers[k] | targets[k]) & ~low
                    changed = True
            scan = in_mask
            while scan and not changed:
                low = scan & -scan
                scan ^= low
                countered = attackers[low.bit_length() - 1] & ~attacked
                while countered:
                    low2 = countered & -countered
                    countered ^= low2
                    if attackers[low2.bit_length() - 1] & ~out_mask == 0:
                        return
            if not changed:
                break
        pending = full & ~(in_mask | out_mask)
        if not pending:
            if is_complete(in_mask):
                results.append(in_mask)
            return
        low = pending & -pending
        k = low.bit_length() - 1
        conflicts = attackers[k] | targets[k]
        if not conflicts & (in_mask | low):
            search(in_mask | low, out_mask | conflicts)
        search(in_mask, out_mask | low)

    search(0, 0)
    return results


def _sorted_extensions(
    masks: list[int], ids: tuple[str, ...]
) -> tuple[frozenset[str], ...]:
    keyed = sorted(
        masks,
        key=lambda m: (bin(m).count("1"), [k for k in range(len(ids)) if (m >> k) & 1]),
    )
    return tuple(_to_ids(mask, ids) for mask in keyed)


def complete_extensions(
    graph: AttackGraph, *, argument_limit: int = DEFAULT_ARGUMENT_LIMIT
) -> tuple[frozenset[str], ...]:
    ids, _, _ = _masks(graph)
    return _sorted_extensions(_complete_masks(graph, argument_limit), ids)


def stable_extensions(
    graph: AttackGraph, *, argument_limit: int = DEFAULT_ARGUMENT_LIMIT
) -> tuple[frozenset[str], ...]:
    """Complete extensions that attack every outside argument."""
    ids, _, targets = _masks(graph)
    full = (1 << len(ids)) - 1
    masks = [
        mask
        for mask in _complete_masks(graph, argument_limit)
        if mask | _attacked_by(mask, targets) == full
    ]
    return _sorted_extensions(masks, ids)


# ---------------------------------------------------------------------------
# evaluation report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SemanticsResult:
    """Extensions under one semantics plus the sceptical core.

    ``justified`` holds the arguments in every extension.  When the
    stable semantics admits no extension at all, the sceptical
    intersection is vacuous: ``justified`` then contains every argument
    and ``no_extensions`` is set so callers can flag the degenerate
    case instead of trusting it.
    """

    semantics: str
    extensions: tuple[frozenset[str], ...]
    justified: frozenset[str]
    no_extensions: bool = field(default=False)


def evaluate(
    graph: AttackGraph,
    semantics: str = "grounded",
    *,
    argument_limit: int = DEFAULT_ARGUMENT_LIMIT,
) -> SemanticsResult:
    if semantics not in SEMANTICS_NAMES:
        raise ValueError(
            f"unknown semantics {semantics!r}; expected one of {SEMANTICS_NAMES}"
        )
    all_ids = frozenset(graph.arguments.ids)
    if semantics == "grounded":
        extension = grounded_extension(graph)
        return SemanticsResult("grounded", (extension,), extension)
    if semantics == "complete":
        extensions = complete_extensions(graph, argument_limit=argument_limit)
        justified = frozenset.intersection(*extensions) if extensions else all_ids
        return SemanticsResult("complete", extensions, justified)
    extensions = stable_extensions(graph, argument_limit=argument_limit)
    if not extensions:
        return SemanticsResult("stable", (), all_ids, no_extensions=True)
    return SemanticsResult(
        "stable", extensions, frozenset.intersection(*extensions)
    )


def justified_conclusions(
    arguments: ArgumentSet, justified: Iterable[str]
) -> tuple[Conclusion, ...]:
    """Distinct conclusions of the justified arguments, in display order."""
    seen = {arguments.argument(identifier).conclusion for identifier in justified}
    return tuple(sorted(seen, key=conclusion_sort_key))
