"""Argument construction.

Four argument forms exist:

* imaginary arguments, one per literal of the atom universe, concluding the
  weak permission of that literal;
* fact arguments, one per fact;
* rule applications, one per rule and per tuple of already-built arguments
  matching the rule body (forward chaining to saturation);
* permission arguments derived from obligations: every argument concluding
  ``obl(l)`` spawns one argument concluding ``perm(l)``.

Construction always terminates: a rule label may not occur twice on any
root-to-leaf path of an argument tree, which bounds tree depth even for
cyclic rule sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .model import (
    Conclusion,
    DeonticLiteral,
    DeonticOperator,
    Literal,
    Rule,
    Theory,
    conclusion_sort_key,
)

ArgumentId = str

# ---------------------------------------------------------------------------
# argument forms
# ---------------------------------------------------------------------------


class Argument:
    """Base class; concrete forms are the four dataclasses below."""

    @property
    def conclusion(self) -> Conclusion:
        raise NotImplementedError

    @property
    def children(self) -> tuple[Argument, ...]:
        """Direct subarguments (one per body element, or the obligation base)."""
        return ()

    @property
    def is_imaginary(self) -> bool:
        return isinstance(self, ImaginaryArgument)

    @property
    def height(self) -> int:
        children = self.children
        return 1 + max(c.height for c in children) if children else 0

    @property
    def top_rule(self) -> str | None:
        """Label of the last rule applied; permission arguments inherit it."""
        return None

    def subarguments(self) -> frozenset[Argument]:
        """The subargument closure, including the argument itself."""
        out: set[Argument] = {self}
        for child in self.children:
            out |= child.subarguments()
        return frozenset(out)

    def proper_subarguments(self) -> frozenset[Argument]:
        return self.subarguments() - {self}

    def tree_labels(self) -> frozenset[str]:
        labels: set[str] = set()
        for sub in self.subarguments():
            if isinstance(sub, RuleApplication):
                labels.add(sub.rule.label)
        return frozenset(labels)


@dataclass(frozen=True)
class ImaginaryArgument(Argument):
    """Concludes the weak permission of its literal; has no premises."""

    literal: Literal

    @property
    def conclusion(self) -> Conclusion:
        return DeonticLiteral(DeonticOperator.WEAK_PERMISSION, self.literal)


@dataclass(frozen=True)
class FactArgument(Argument):
    literal: Literal

    @property
    def conclusion(self) -> Conclusion:
        return self.literal


@dataclass(frozen=True)
class RuleApplication(Argument):
    """A rule applied to one matching argument per body element."""

    rule: Rule
    subs: tuple[Argument, ...]

    @property
    def conclusion(self) -> Conclusion:
        return self.rule.head

    @property
    def children(self) -> tuple[Argument, ...]:
        return self.subs

    @property
    def top_rule(self) -> str | None:
        return self.rule.label


@dataclass(frozen=True)
class DAxiomArgument(Argument):
    """Obligation implies permission: built over an ``obl(l)`` argument."""

    base: Argument

    @property
    def conclusion(self) -> Conclusion:
        base_conclusion = self.base.conclusion
        assert isinstance(base_conclusion, DeonticLiteral)
        return DeonticLiteral(DeonticOperator.PERMISSION, base_conclusion.literal)

    @property
    def children(self) -> tuple[Argument, ...]:
        return (self.base,)

    @property
    def top_rule(self) -> str | None:
        return self.base.top_rule


def _kind_rank(argument: Argument) -> int:
    if isinstance(argument, FactArgument):
        return 0
    if isinstance(argument, RuleApplication):
        return 1
    return 2  # permission-from-obligation


def structural_key(argument: Argument) -> tuple:
    """Total deterministic order on natural arguments (used for id assignment)."""
    label = argument.top_rule or ""
    return (
        argument.height,
        _kind_rank(argument),
        label,
        conclusion_sort_key(argument.conclusion),
        tuple(structural_key(child) for child in argument.children),
    )


# ---------------------------------------------------------------------------
# the built argument set
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ArgumentSet:
    """All arguments of a theory with stable ids (``A0..`` natural, ``I1..`` imaginary)."""

    theory: Theory
    ordered: tuple[tuple[ArgumentId, Argument], ...]

    def __iter__(self) -> Iterator[tuple[ArgumentId, Argument]]:
        return iter(self.ordered)

    def __len__(self) -> int:
        return len(self.ordered)

    @property
    def ids(self) -> tuple[ArgumentId, ...]:
        return tuple(identifier for identifier, _ in self.ordered)

    def argument(self, identifier: ArgumentId) -> Argument:
        return self._by_id[identifier]

    def id_of(self, argument: Argument) -> ArgumentId:
        return self._id_of[argument]

    def concluders(self, conclusion: Conclusion) -> tuple[ArgumentId, ...]:
        """Ids of every argument with the given conclusion."""
        return self._by_conclusion.get(conclusion, ())

    def natural_ids(self) -> tuple[ArgumentId, ...]:
        return tuple(i for i, a in self.ordered if not a.is_imaginary)

    def imaginary_ids(self) -> tuple[ArgumentId, ...]:
        return tuple(i for i, a in self.ordered if a.is_imaginary)

    def index(self, identifier: ArgumentId) -> int:
        return self._positions[identifier]

    def sub_ids(self, identifier: ArgumentId) -> tuple[ArgumentId, ...]:
        """Subargument closure as ids (index order), including the argument."""
        return self._sub_ids[identifier]

    def proper_sub_ids(self, identifier: ArgumentId) -> tuple[ArgumentId, ...]:
        return tuple(i for i in self._sub_ids[identifier] if i != identifier)

    # internal indexes, built once in build_arguments
    @property
    def _by_id(self) -> dict[ArgumentId, Argument]:
        return self.__dict__.setdefault("_by_id_cache", dict(self.ordered))

    @property
    def _id_of(self) -> dict[Argument, ArgumentId]:
        return self.__dict__.setdefault(
            "_id_of_cache", {argument: identifier for identifier, argument in self.ordered}
        )

    @property
    def _positions(self) -> dict[ArgumentId, int]:
        return self.__dict__.setdefault(
            "_positions_cache", {identifier: n for n, (identifier, _) in enumerate(self.ordered)}
        )

    @property
    def _by_conclusion(self) -> dict[Conclusion, tuple[ArgumentId, ...]]:
        cached = self.__dict__.get("_by_conclusion_cache")
        if cached is None:
            index: dict[Conclusion, list[ArgumentId]] = {}
            for identifier, argument in self.ordered:
                index.setdefault(argument.conclusion, []).append(identifier)
            cached = {k: tuple(v) for k, v in index.items()}
            self.__dict__["_by_conclusion_cache"] = cached
        return cached

    @property
    def _sub_ids(self) -> dict[ArgumentId, tuple[ArgumentId, ...]]:
        cached = self.__dict__.get("_sub_ids_cache")
        if cached is None:
            id_of = self._id_of
            positions = self._positions
            cached = {
                identifier: tuple(
                    sorted(
                        {id_of[sub] for sub in argument.subarguments()},
                        key=positions.__getitem__,
                    )
                )
                for identifier, argument in self.ordered
            }
            self.__dict__["_sub_ids_cache"] = cached
        return cached


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def _candidates(known: Iterable[Argument], element: Conclusion) -> list[Argument]:
    matching = [argument for argument in known if argument.conclusion == element]
    matching.sort(key=structural_key)
    return matching


def build_arguments(theory: Theory) -> ArgumentSet:
    """Build every argument of the theory and assign deterministic ids."""
    imaginary = [ImaginaryArgument(literal) for literal in theory.literal_universe]
    naturals: list[Argument] = [
        FactArgument(literal) for literal in sorted(theory.facts, key=lambda l: l.sort_key())
    ]
    known: set[Argument] = set(imaginary) | set(naturals)

    changed = True
    while changed:
        changed = False
        snapshot = sorted(known, key=lambda a: (a.is_imaginary, structural_key(a) if not a.is_imaginary else a.literal.sort_key()))
        for rule in theory.rules:
            pools = [_candidates(snapshot, element) for element in rule.body]
            if any(not pool for pool in pools):
                continue
            for combo in itertools.product(*pools):
                if any(rule.label in sub.tree_labels() for sub in combo):
                    continue  # label already used on a path below: blocks cyclic growth
                candidate = RuleApplication(rule, tuple(combo))
                if candidate not in known:
                    known.add(candidate)
                    naturals.append(candidate)
                    changed = True
        # permission closure over every obligation conclusion found so far
        for argument in list(known):
            conclusion = argument.conclusion
            if (
                isinstance(conclusion, DeonticLiteral)
                and conclusion.operator is DeonticOperator.OBLIGATION
            ):
                derived = DAxiomArgument(argument)
                if derived not in known:
                    known.add(derived)
                    naturals.append(derived)
                    changed = True

    naturals.sort(key=structural_key)
    ordered: list[tuple[ArgumentId, Argument]] = [
        (f"A{n}", argument) for n, argument in enumerate(naturals)
    ]
    ordered.extend((f"I{n + 1}", argument) for n, argument in enumerate(imaginary))
    return ArgumentSet(theory, tuple(ordered))
