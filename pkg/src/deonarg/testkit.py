"""Independent verification tools: brute-force semantics and a theory generator.

The brute-force evaluator enumerates every subset of arguments and applies
the extension definitions directly (conflict-freeness, defence of every
member, closure under defended arguments, attacking every outsider).  It
shares no traversal code with the fixpoint and search implementations, so it
serves as an oracle for them on small instances.
"""

from __future__ import annotations

import random
import string
from dataclasses import dataclass

from .arguments import ArgumentId, build_arguments
from .attacks import AttackGraph
from .model import (
    Atom,
    BodyElement,
    DeonticLiteral,
    DeonticOperator,
    Literal,
    Rule,
    Theory,
)

# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------


class OracleSizeError(Exception):
    """Raised when an instance is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class OracleResult:
    grounded: frozenset[ArgumentId]
    complete: tuple[frozenset[ArgumentId], ...]
    stable: tuple[frozenset[ArgumentId], ...]


def brute_force_extensions(graph: AttackGraph, *, max_arguments: int = 15) -> OracleResult:
    """Evaluate grounded/complete/stable semantics by subset enumeration."""
    ids = graph.arguments.ids
    count = len(ids)
    if count > max_arguments:
        raise OracleSizeError(f"{count} arguments exceed the enumeration limit of {max_arguments}")

    position = {identifier: n for n, identifier in enumerate(ids)}
    attacker_mask = [0] * count
    target_mask = [0] * count
    for attacker, target in graph.pairs:
        attacker_mask[position[target]] |= 1 << position[attacker]
        target_mask[position[attacker]] |= 1 << position[target]

    full = (1 << count) - 1
    complete_masks: list[int] = []
    stable_masks: list[int] = []
    for subset in range(1 << count):
        members = _bits(subset)
        if any(attacker_mask[i] & subset for i in members):
            continue  # not conflict-free
        attacked = 0
        for i in members:
            attacked |= target_mask[i]
        if subset | attacked == full:
            stable_masks.append(subset)  # attacks every outsider
        # admissible: every member's attackers are attacked by the subset
        if any(attacker_mask[i] & ~attacked for i in members):
            continue
        # complete: additionally contains every argument it defends
        closed = True
        for j in range(count):
            if subset >> j & 1:
                continue
            if attacker_mask[j] & ~attacked == 0:
                closed = False
                break
        if closed:
            complete_masks.append(subset)

    complete_sets = tuple(_unmask(mask, ids) for mask in complete_masks)
    stable_sets = tuple(_unmask(mask, ids) for mask in stable_masks)
    minimal = [
        mask for mask in complete_masks if all(mask & other == mask for other in complete_masks)
    ]
    if len(minimal) != 1:
        raise AssertionError("expected a unique least complete extension")
    return OracleResult(_unmask(minimal[0], ids), complete_sets, stable_sets)


def _bits(mask: int) -> list[int]:
    out = []
    index = 0
    while mask:
        if mask & 1:
            out.append(index)
        mask >>= 1
        index += 1
    return out


def _unmask(mask: int, ids: tuple[ArgumentId, ...]) -> frozenset[ArgumentId]:
    return frozenset(ids[i] for i in _bits(mask))


# ---------------------------------------------------------------------------
# seeded theory generator
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorParams:
    """Knobs for random theory generation; identical params give identical output."""

    seed: int
    atom_count: int = 4
    fact_count: int = 2
    rule_count: int = 5
    max_body_len: int = 2
    obligation_head_bias: float = 0.3
    permission_head_weight: float = 0.1
    deontic_body_weight: float = 0.2
    weak_permission_body_weight: float = 0.15
    acyclic: bool = True
    inject_conflict: bool = False
    empty_obligation_bodies: bool = False
    superiority_count: int = 0


def generate_theory(params: GeneratorParams) -> Theory:
    """Draw a random well-formed theory from the given parameters."""
    rng = random.Random(params.seed)
    atoms = [Atom(name) for name in string.ascii_lowercase[: params.atom_count]]
    order = {atom: n for n, atom in enumerate(atoms)}

    facts: set[Literal] = set()
    for _ in range(params.fact_count):
        facts.add(Literal(rng.choice(atoms), positive=rng.random() < 0.7))

    used: list[Atom] = sorted({fact.atom for fact in facts}) or atoms[:1]
    rules: list[Rule] = []
    for n in range(params.rule_count):
        label = f"r{n + 1}"
        head = _draw_head(rng, params, atoms, used)
        head_atom = head.atom if isinstance(head, Literal) else head.literal.atom
        if head_atom not in used:
            used.append(head_atom)
        body = _draw_body(rng, params, atoms, order, head, head_atom)
        rules.append(Rule(label, body, head))
        for element in body:
            atom = element.atom if isinstance(element, Literal) else element.literal.atom
            if atom not in used:
                used.append(atom)

    if params.inject_conflict:
        # an empty-bodied obligation pair guarantees a conflicted literal
        atom = rng.choice(used)
        base = len(rules)
        positive = Literal(atom, True)
        rules.append(Rule(f"r{base + 1}", (), _obl(positive)))
        rules.append(Rule(f"r{base + 2}", (), _obl(positive.negated)))

    superiority: set[tuple[str, str]] = set()
    labels = [rule.label for rule in rules]
    if params.superiority_count and len(labels) >= 2:
        attempts = 0
        while len(superiority) < params.superiority_count and attempts < 50:
            attempts += 1
            superior, inferior = rng.sample(labels, 2)
            superiority.add((superior, inferior))

    return Theory(frozenset(facts), tuple(rules), frozenset(superiority))


def _obl(literal: Literal) -> DeonticLiteral:
    return DeonticLiteral(DeonticOperator.OBLIGATION, literal)


def _draw_head(
    rng: random.Random,
    params: GeneratorParams,
    atoms: list[Atom],
    used: list[Atom],
) -> Literal | DeonticLiteral:
    roll = rng.random()
    literal = Literal(rng.choice(atoms), positive=rng.random() < 0.6)
    if roll < params.obligation_head_bias:
        # obligations over already-used atoms make conflicts likely
        literal = Literal(rng.choice(used), positive=rng.random() < 0.6)
        return DeonticLiteral(DeonticOperator.OBLIGATION, literal)
    if roll < params.obligation_head_bias + params.permission_head_weight:
        return DeonticLiteral(DeonticOperator.PERMISSION, literal)
    return literal


def _draw_body(
    rng: random.Random,
    params: GeneratorParams,
    atoms: list[Atom],
    order: dict[Atom, int],
    head: Literal | DeonticLiteral,
    head_atom: Atom,
) -> tuple[BodyElement, ...]:
    if (
        params.empty_obligation_bodies
        and isinstance(head, DeonticLiteral)
        and head.operator is DeonticOperator.OBLIGATION
    ):
        return ()
    if params.acyclic:
        # drawing body atoms strictly below the head keeps the atom graph a DAG
        pool = [atom for atom in atoms if order[atom] < order[head_atom]]
    else:
        pool = list(atoms)
    if not pool:
        return ()
    size = rng.randint(0, params.max_body_len)
    body: list[BodyElement] = []
    for _ in range(size):
        literal = Literal(rng.choice(pool), positive=rng.random() < 0.6)
        roll = rng.random()
        if roll < params.weak_permission_body_weight:
            body.append(DeonticLiteral(DeonticOperator.WEAK_PERMISSION, literal))
        elif roll < params.weak_permission_body_weight + params.deontic_body_weight:
            operator = (
                DeonticOperator.OBLIGATION if rng.random() < 0.7 else DeonticOperator.PERMISSION
            )
            body.append(DeonticLiteral(operator, literal))
        else:
            body.append(literal)
    return tuple(body)


def generated_argument_count(theory: Theory) -> int:
    """Number of arguments the theory induces (used for size-filtered corpora)."""
    return len(build_arguments(theory))
