"""Deontic argumentation engine.

Parse theories of facts, labelled defeasible rules and superiority pairs;
build their argument sets (including imaginary weak-permission arguments);
compute the annotated attack relation; evaluate grounded, complete, stable
and weak-permission fixpoint semantics; and verify structural properties.
"""

from .arguments import (
    Argument,
    ArgumentId,
    ArgumentSet,
    DAxiomArgument,
    FactArgument,
    ImaginaryArgument,
    RuleApplication,
    build_arguments,
)
from .attacks import Attack, AttackGraph, compute_attacks
from .model import (
    Atom,
    BodyElement,
    Conclusion,
    DeonticLiteral,
    DeonticOperator,
    Literal,
    Rule,
    Theory,
    TheoryValidationError,
    Violation,
    complement,
    ensure_valid,
    lit,
    obl,
    perm,
    perm_w,
    push_negation,
    validate_theory,
)
from .analysis import (
    CheckReport,
    CheckResult,
    ConflictPair,
    ConflictReport,
    FacultativeStatus,
    conflict_report,
    conflicted_literals,
    facultative_status,
    verify_theorems,
    wp_conflicted_literals,
)
from .parser import ParseError, SourceSpan, parse_theory, serialize_theory
from .semantics import (
    DEFAULT_ARGUMENT_LIMIT,
    ArgumentLimitExceeded,
    SemanticsResult,
    complete_extensions,
    evaluate,
    grounded_extension,
    is_admissible,
    is_conflict_free,
    justified_conclusions,
    stable_extensions,
)
from .wp import (
    FixpointInvariantError,
    StatusChange,
    TraceStep,
    WpExtension,
    supported_by,
    supports,
    undercut_by,
    undercuts,
    wp_extension,
)

__all__ = [
    "Argument",
    "ArgumentId",
    "ArgumentLimitExceeded",
    "ArgumentSet",
    "Atom",
    "Attack",
    "AttackGraph",
    "BodyElement",
    "CheckReport",
    "CheckResult",
    "Conclusion",
    "ConflictPair",
    "ConflictReport",
    "DAxiomArgument",
    "DEFAULT_ARGUMENT_LIMIT",
    "DeonticLiteral",
    "DeonticOperator",
    "FacultativeStatus",
    "FactArgument",
    "FixpointInvariantError",
    "ImaginaryArgument",
    "Literal",
    "ParseError",
    "Rule",
    "RuleApplication",
    "SemanticsResult",
    "SourceSpan",
    "StatusChange",
    "Theory",
    "TheoryValidationError",
    "TraceStep",
    "Violation",
    "WpExtension",
    "build_arguments",
    "complement",
    "complete_extensions",
    "compute_attacks",
    "conflict_report",
    "conflicted_literals",
    "ensure_valid",
    "evaluate",
    "facultative_status",
    "grounded_extension",
    "is_admissible",
    "is_conflict_free",
    "justified_conclusions",
    "lit",
    "obl",
    "parse_theory",
    "perm",
    "perm_w",
    "push_negation",
    "serialize_theory",
    "stable_extensions",
    "supported_by",
    "supports",
    "undercut_by",
    "undercuts",
    "validate_theory",
    "verify_theorems",
    "wp_conflicted_literals",
    "wp_extension",
]

__version__ = "0.1.0"
