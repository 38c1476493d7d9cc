"""Core data model: atoms, literals, deontic literals, rules, theories.

A theory is a set of plain-literal facts, a set of labelled defeasible rules
whose heads are plain or deontic literals, and an optional superiority
relation over rule labels.  Negation appears in two places only: inside a
literal (``~p``) and as an outer negation of a deontic literal, which is
normalised away at construction time (see :func:`push_negation`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Union

# ---------------------------------------------------------------------------
# atoms and literals
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Atom:
    """A propositional atom, identified by its name."""

    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Literal:
    """An atom or its negation."""

    atom: Atom
    positive: bool = True

    def __str__(self) -> str:
        return self.atom.name if self.positive else f"~{self.atom.name}"

    @property
    def negated(self) -> Literal:
        return Literal(self.atom, not self.positive)

    def sort_key(self) -> tuple:
        # positive polarity sorts first
        return (self.atom.name, 0 if self.positive else 1)


def lit(name: str) -> Literal:
    """Build a literal from compact text such as ``"p"`` or ``"~p"``."""
    if name.startswith("~"):
        return Literal(Atom(name[1:]), positive=False)
    return Literal(Atom(name))


def complement(literal: Literal) -> Literal:
    """The complementary literal (involution: flips polarity)."""
    return literal.negated


# ---------------------------------------------------------------------------
# deontic literals
# ---------------------------------------------------------------------------


class DeonticOperator(enum.Enum):
    """Modalities a rule may wrap around a literal."""

    OBLIGATION = "obl"
    PERMISSION = "perm"
    WEAK_PERMISSION = "perm_w"

    def __str__(self) -> str:
        return self.value

    @property
    def rank(self) -> int:
        return _OPERATOR_RANK[self]


_OPERATOR_RANK = {
    DeonticOperator.OBLIGATION: 0,
    DeonticOperator.PERMISSION: 1,
    DeonticOperator.WEAK_PERMISSION: 2,
}


@dataclass(frozen=True)
class DeonticLiteral:
    """A literal under a deontic operator, e.g. ``obl(~p)``."""

    operator: DeonticOperator
    literal: Literal

    def __str__(self) -> str:
        return f"{self.operator.value}({self.literal})"

    def sort_key(self) -> tuple:
        return (self.operator.rank, *self.literal.sort_key())


def obl(literal: Literal) -> DeonticLiteral:
    return DeonticLiteral(DeonticOperator.OBLIGATION, literal)


def perm(literal: Literal) -> DeonticLiteral:
    return DeonticLiteral(DeonticOperator.PERMISSION, literal)


def perm_w(literal: Literal) -> DeonticLiteral:
    return DeonticLiteral(DeonticOperator.WEAK_PERMISSION, literal)


#: Anything that may appear in a rule body.
BodyElement = Union[Literal, DeonticLiteral]

#: Anything an argument may conclude (rule heads exclude weak permission).
Conclusion = Union[Literal, DeonticLiteral]


def push_negation(target: DeonticLiteral) -> DeonticLiteral:
    """Normalise an outer negation applied to a deontic literal.

    not obl(l)    becomes  perm(~l)
    not perm(l)   becomes  obl(~l)
    not perm_w(l) becomes  obl(~l)
    """
    flipped = target.literal.negated
    if target.operator is DeonticOperator.OBLIGATION:
        return DeonticLiteral(DeonticOperator.PERMISSION, flipped)
    return DeonticLiteral(DeonticOperator.OBLIGATION, flipped)


def conclusion_sort_key(conclusion: Conclusion) -> tuple:
    """Total deterministic order: plain literals first, then deontic ones."""
    if isinstance(conclusion, Literal):
        return (0, "", *conclusion.sort_key())
    return (1, "", *conclusion.sort_key())


def format_conclusion(conclusion: Conclusion) -> str:
    return str(conclusion)


# ---------------------------------------------------------------------------
# rules and theories
# ---------------------------------------------------------------------------


def _collapse(body: tuple[BodyElement, ...]) -> tuple[BodyElement, ...]:
    # drop exact duplicates, keep first occurrence order
    seen: list[BodyElement] = []
    for element in body:
        if element not in seen:
            seen.append(element)
    return tuple(seen)


@dataclass(frozen=True)
class Rule:
    """A labelled defeasible rule ``label: body => head``."""

    label: str
    body: tuple[BodyElement, ...]
    head: Conclusion

    def __post_init__(self) -> None:
        object.__setattr__(self, "body", _collapse(tuple(self.body)))

    def __str__(self) -> str:
        body = ", ".join(str(element) for element in self.body)
        return f"{self.label}: {body} => {self.head}" if body else f"{self.label}: => {self.head}"


@dataclass(frozen=True)
class Theory:
    """Facts, rules (kept sorted by label) and a superiority relation.

    Superiority pairs are ``(superior_label, inferior_label)``.
    """

    facts: frozenset[Literal] = frozenset()
    rules: tuple[Rule, ...] = ()
    superiority: frozenset[tuple[str, str]] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "facts", frozenset(self.facts))
        object.__setattr__(self, "rules", tuple(sorted(self.rules, key=lambda r: r.label)))
        object.__setattr__(self, "superiority", frozenset(self.superiority))

    # -- derived views ------------------------------------------------------

    @property
    def atoms(self) -> tuple[Atom, ...]:
        """The atom universe: every atom mentioned anywhere in the theory."""
        found: set[Atom] = set()
        for fact in self.facts:
            found.add(fact.atom)
        for rule in self.rules:
            for element in rule.body:
                found.add(_atom_of(element))
            found.add(_atom_of(rule.head))
        return tuple(sorted(found))

    @property
    def literal_universe(self) -> tuple[Literal, ...]:
        """Both polarities of every atom, in deterministic order."""
        out: list[Literal] = []
        for atom in self.atoms:
            out.append(Literal(atom, True))
            out.append(Literal(atom, False))
        return tuple(out)

    def rule_by_label(self, label: str) -> Rule:
        for rule in self.rules:
            if rule.label == label:
                return rule
        raise KeyError(label)

    def is_superior(self, superior_label: str | None, inferior_label: str | None) -> bool:
        if superior_label is None or inferior_label is None:
            return False
        return (superior_label, inferior_label) in self.superiority


def _atom_of(element: BodyElement) -> Atom:
    if isinstance(element, Literal):
        return element.atom
    return element.literal.atom


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """A single well-formedness failure, tied to a rule label when one applies."""

    message: str
    label: str | None = None

    def __str__(self) -> str:
        return f"[{self.label}] {self.message}" if self.label else self.message


class TheoryValidationError(Exception):
    """Raised when a theory fails well-formedness checks."""

    def __init__(self, violations: tuple[Violation, ...]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


def validate_theory(theory: Theory) -> tuple[Violation, ...]:
    """Collect every well-formedness violation (empty tuple means valid)."""
    violations: list[Violation] = []

    seen: set[str] = set()
    for rule in theory.rules:
        if rule.label in seen:
            violations.append(Violation("duplicate rule label", rule.label))
        seen.add(rule.label)

    for rule in theory.rules:
        head = rule.head
        if isinstance(head, DeonticLiteral) and head.operator is DeonticOperator.WEAK_PERMISSION:
            violations.append(Violation("rule head may not be a weak permission", rule.label))

    labels = {rule.label for rule in theory.rules}
    for superior, inferior in sorted(theory.superiority):
        if superior == inferior:
            violations.append(Violation(f"superiority pair ({superior}, {inferior}) is reflexive", superior))
        for label in (superior, inferior):
            if label not in labels:
                violations.append(Violation(f"superiority references unknown rule label '{label}'", None))

    return tuple(violations)


def ensure_valid(theory: Theory) -> Theory:
    """Validate and return the theory, raising on any violation."""
    violations = validate_theory(theory)
    if violations:
        raise TheoryValidationError(violations)
    return theory
