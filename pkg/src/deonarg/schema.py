"""Structured-output document format.

Defines the JSON document emitted by the command-line interface, a
JSON Schema describing it, and builders that assemble document
sections from engine objects.  Everything is ordered canonically so
identical inputs produce byte-identical documents.
"""

from __future__ import annotations

from typing import Any

import jsonschema

from .arguments import (
    ArgumentSet,
    DAxiomArgument,
    FactArgument,
    ImaginaryArgument,
    RuleApplication,
)
from .attacks import Attack, AttackGraph
from .model import Theory
from .parser import serialize_theory
from .wp import WpExtension

# ---------------------------------------------------------------------------
# schema
# ---------------------------------------------------------------------------

_EDGE_LIST = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["attacker", "target", "condition", "witness"],
        "additionalProperties": False,
        "properties": {
            "attacker": {"type": "string"},
            "target": {"type": "string"},
            "condition": {"type": "integer", "minimum": 1, "maximum": 4},
            "witness": {"type": "string"},
        },
    },
}

_CHANGE_LIST = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["argument", "clause", "witnesses"],
        "additionalProperties": False,
        "properties": {
            "argument": {"type": "string"},
            "clause": {"type": "string"},
            "witnesses": {"type": "array", "items": {"type": "string"}},
        },
    },
}

SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "urn:deonarg:output",
    "type": "object",
    "required": ["theory"],
    "additionalProperties": False,
    "properties": {
        "theory": {
            "type": "object",
            "required": ["source", "facts", "rules", "superiority"],
            "additionalProperties": False,
            "properties": {
                "source": {"type": "string"},
                "facts": {"type": "array", "items": {"type": "string"}},
                "rules": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["label", "body", "head"],
                        "additionalProperties": False,
                        "properties": {
                            "label": {"type": "string"},
                            "body": {"type": "array", "items": {"type": "string"}},
                            "head": {"type": "string"},
                        },
                    },
                },
                "superiority": {
                    "type": "array",
                    "items": {
                        "type": "array",
                        "items": {"type": "string"},
                        "minItems": 2,
                        "maxItems": 2,
                    },
                },
            },
        },
        "arguments": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "kind", "conclusion", "sub", "top_rule"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "kind": {
                        "enum": [
                            "imaginary",
                            "fact",
                            "rule-application",
                            "permission-axiom",
                        ]
                    },
                    "conclusion": {"type": "string"},
                    "sub": {"type": "array", "items": {"type": "string"}},
                    "top_rule": {"type": ["string", "null"]},
                },
            },
        },
        "attacks": {
            "type": "object",
            "required": ["edges", "suppressed"],
            "additionalProperties": False,
            "properties": {"edges": _EDGE_LIST, "suppressed": _EDGE_LIST},
        },
        "result": {
            "type": "object",
            "required": [
                "semantics",
                "justified_arguments",
                "justified_conclusions",
                "flags",
            ],
            "additionalProperties": False,
            "properties": {
                "semantics": {"enum": ["grounded", "complete", "stable", "wp"]},
                "extensions": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "string"}},
                },
                "justified_arguments": {
                    "type": "array",
                    "items": {"type": "string"},
                },
                "rejected_arguments": {
                    "type": "array",
                    "items": {"type": "string"},
                },
                "justified_conclusions": {
                    "type": "array",
                    "items": {"type": "string"},
                },
                "flags": {
                    "type": "object",
                    "additionalProperties": False,
                    "properties": {
                        "no_stable_extensions": {"type": "boolean"},
                        "imaginary_subargument_attacks": {"type": "boolean"},
                        "fixpoint_guards": {"type": "boolean"},
                    },
                },
            },
        },
        "trace": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["step", "rejected", "justified"],
                "additionalProperties": False,
                "properties": {
                    "step": {"type": "integer", "minimum": 1},
                    "rejected": _CHANGE_LIST,
                    "justified": _CHANGE_LIST,
                },
            },
        },
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "status", "detail"],
                "additionalProperties": False,
                "properties": {
                    "name": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "skipped"]},
                    "detail": {"type": "string"},
                },
            },
        },
    },
}


def validate_document(document: dict[str, Any]) -> None:
    """Raise ``jsonschema.ValidationError`` when the document is malformed."""
    jsonschema.validate(document, SCHEMA)


# ---------------------------------------------------------------------------
# section builders
# ---------------------------------------------------------------------------

_KIND_NAMES = {
    ImaginaryArgument: "imaginary",
    FactArgument: "fact",
    RuleApplication: "rule-application",
    DAxiomArgument: "permission-axiom",
}


def argument_kind(argument: object) -> str:
    return _KIND_NAMES[type(argument)]


def theory_section(theory: Theory) -> dict[str, Any]:
    return {
        "source": serialize_theory(theory),
        "facts": [str(literal) for literal in sorted(theory.facts, key=lambda l: l.sort_key())],
        "rules": [
            {
                "label": rule.label,
                "body": [str(element) for element in rule.body],
                "head": str(rule.head),
            }
            for rule in theory.rules
        ],
        "superiority": [list(pair) for pair in sorted(theory.superiority)],
    }


def arguments_section(arguments: ArgumentSet) -> list[dict[str, Any]]:
    records = []
    for identifier in arguments.ids:
        argument = arguments.argument(identifier)
        records.append(
            {
                "id": identifier,
                "kind": argument_kind(argument),
                "conclusion": str(argument.conclusion),
                "sub": list(arguments.sub_ids(identifier)),
                "top_rule": argument.top_rule,
            }
        )
    return records


def _edge_record(edge: Attack) -> dict[str, Any]:
    return {
        "attacker": edge.attacker,
        "target": edge.target,
        "condition": edge.condition,
        "witness": edge.witness,
    }


def attacks_section(graph: AttackGraph) -> dict[str, Any]:
    return {
        "edges": [_edge_record(edge) for edge in graph.edges],
        "suppressed": [_edge_record(edge) for edge in graph.suppressed],
    }


def trace_section(extension: WpExtension) -> list[dict[str, Any]]:
    return [
        {
            "step": step.index,
            "rejected": [
                {
                    "argument": change.argument,
                    "clause": change.clause,
                    "witnesses": list(change.witnesses),
                }
                for change in step.newly_rejected
            ],
            "justified": [
                {
                    "argument": change.argument,
                    "clause": change.clause,
                    "witnesses": list(change.witnesses),
                }
                for change in step.newly_justified
            ],
        }
        for step in extension.steps
    ]
