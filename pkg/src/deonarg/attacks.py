"""The attack relation between arguments.

Four attack conditions, each annotated on the edge together with the witness
subargument of the target that carries the conflict:

1. the target is an imaginary weak-permission argument for ``l`` and the
   attacker concludes ``obl(~l)``;
2. some subargument of the target concludes a plain literal ``l`` and the
   attacker concludes ``~l``;
3. some subargument of the target concludes ``obl(l)`` or ``perm(l)`` and
   the attacker concludes ``obl(~l)``;
4. some subargument of the target concludes ``obl(l)`` and the attacker
   concludes ``perm(~l)``.

Permissions never clash with permissions, and plain conclusions never clash
with deontic ones.  By default condition 1 targets only the imaginary
argument itself; the generalized reading (``imaginary_subargument_attacks``)
also lifts it to natural arguments containing the imaginary premise.

An edge record is suppressed when the witness's top rule is declared
superior to the attacker's top rule.  A pair survives while any of its
witness records survives; condition-1 records are never suppressed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arguments import ArgumentId, ArgumentSet
from .model import DeonticLiteral, DeonticOperator, Literal, Theory

# ---------------------------------------------------------------------------
# edge records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Attack:
    """One witnessed attack record; a pair of arguments may carry several."""

    attacker: ArgumentId
    target: ArgumentId
    condition: int  # 1..4
    witness: ArgumentId  # subargument of the target carrying the conflict


@dataclass(frozen=True)
class AttackGraph:
    """All attack records over an argument set, split by suppression."""

    arguments: ArgumentSet
    edges: tuple[Attack, ...]  # surviving records
    suppressed: tuple[Attack, ...]  # removed by superiority
    generalized: bool = False

    @property
    def pairs(self) -> frozenset[tuple[ArgumentId, ArgumentId]]:
        cached = self.__dict__.get("_pairs_cache")
        if cached is None:
            cached = frozenset((e.attacker, e.target) for e in self.edges)
            self.__dict__["_pairs_cache"] = cached
        return cached

    def attackers_of(self, target: ArgumentId) -> tuple[ArgumentId, ...]:
        """Distinct attackers of the target, in id order (post-suppression)."""
        return self._attacker_index.get(target, ())

    def targets_of(self, attacker: ArgumentId) -> tuple[ArgumentId, ...]:
        return self._target_index.get(attacker, ())

    def records_between(self, attacker: ArgumentId, target: ArgumentId) -> tuple[Attack, ...]:
        return tuple(e for e in self.edges if e.attacker == attacker and e.target == target)

    @property
    def _attacker_index(self) -> dict[ArgumentId, tuple[ArgumentId, ...]]:
        cached = self.__dict__.get("_attacker_index_cache")
        if cached is None:
            cached = _group(self.arguments, self.edges, by_target=True)
            self.__dict__["_attacker_index_cache"] = cached
        return cached

    @property
    def _target_index(self) -> dict[ArgumentId, tuple[ArgumentId, ...]]:
        cached = self.__dict__.get("_target_index_cache")
        if cached is None:
            cached = _group(self.arguments, self.edges, by_target=False)
            self.__dict__["_target_index_cache"] = cached
        return cached


def _group(
    arguments: ArgumentSet, edges: tuple[Attack, ...], *, by_target: bool
) -> dict[ArgumentId, tuple[ArgumentId, ...]]:
    seen: dict[ArgumentId, list[ArgumentId]] = {}
    for edge in edges:
        key, value = (edge.target, edge.attacker) if by_target else (edge.attacker, edge.target)
        bucket = seen.setdefault(key, [])
        if value not in bucket:
            bucket.append(value)
    return {
        key: tuple(sorted(bucket, key=arguments.index)) for key, bucket in seen.items()
    }


# ---------------------------------------------------------------------------
# computation
# ---------------------------------------------------------------------------


def _obligation(literal: Literal) -> DeonticLiteral:
    return DeonticLiteral(DeonticOperator.OBLIGATION, literal)


def _permission(literal: Literal) -> DeonticLiteral:
    return DeonticLiteral(DeonticOperator.PERMISSION, literal)


def compute_attacks(
    arguments: ArgumentSet,
    theory: Theory | None = None,
    *,
    imaginary_subargument_attacks: bool = False,
) -> AttackGraph:
    """Compute every attack record, then apply superiority suppression."""
    if theory is None:
        theory = arguments.theory

    records: list[Attack] = []
    for target_id, target in arguments:
        for witness_id in sorted(arguments.sub_ids(target_id), key=arguments.index):
            witness = arguments.argument(witness_id)
            conclusion = witness.conclusion
            if isinstance(conclusion, Literal):
                for attacker_id in arguments.concluders(conclusion.negated):
                    records.append(Attack(attacker_id, target_id, 2, witness_id))
            elif conclusion.operator is DeonticOperator.OBLIGATION:
                flipped = conclusion.literal.negated
                for attacker_id in arguments.concluders(_obligation(flipped)):
                    records.append(Attack(attacker_id, target_id, 3, witness_id))
                for attacker_id in arguments.concluders(_permission(flipped)):
                    records.append(Attack(attacker_id, target_id, 4, witness_id))
            elif conclusion.operator is DeonticOperator.PERMISSION:
                flipped = conclusion.literal.negated
                for attacker_id in arguments.concluders(_obligation(flipped)):
                    records.append(Attack(attacker_id, target_id, 3, witness_id))
            else:  # weak permission: condition 1
                if witness.is_imaginary and (witness_id == target_id or imaginary_subargument_attacks):
                    flipped = conclusion.literal.negated
                    for attacker_id in arguments.concluders(_obligation(flipped)):
                        records.append(Attack(attacker_id, target_id, 1, witness_id))

    surviving: list[Attack] = []
    suppressed: list[Attack] = []
    for record in records:
        if record.condition != 1 and _suppressed(arguments, theory, record):
            suppressed.append(record)
        else:
            surviving.append(record)

    def order(edge: Attack) -> tuple[int, int, int, int]:
        return (
            arguments.index(edge.attacker),
            arguments.index(edge.target),
            edge.condition,
            arguments.index(edge.witness),
        )

    return AttackGraph(
        arguments,
        tuple(sorted(surviving, key=order)),
        tuple(sorted(suppressed, key=order)),
        generalized=imaginary_subargument_attacks,
    )


def _suppressed(arguments: ArgumentSet, theory: Theory, record: Attack) -> bool:
    witness_rule = arguments.argument(record.witness).top_rule
    attacker_rule = arguments.argument(record.attacker).top_rule
    return theory.is_superior(witness_rule, attacker_rule)
