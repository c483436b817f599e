"""JSON Schemas for the family-file format and every CLI JSON report.

Each schema is a plain dict (draft 2020-12 keywords, draft-07 compatible
constructs) so callers can validate CLI output with any JSON Schema
library, or dump the schemas themselves with :func:`dump`.
"""
from __future__ import annotations

import json

_TUPLE = {"type": "string", "pattern": "^[12]{4}$"}
_TUPLE_OR_NULL = {"type": ["string", "null"], "pattern": "^[12]{4}$"}
_NUM_OR_NULL = {"type": ["number", "null"]}
_QUANTITIES = ["MIN_RE", "MAX_RE", "MIN_IM", "MAX_IM"]
_STATUSES = ["CERTIFIED_EXACT", "UPPER_BOUND_ONLY", "ZERO_INCLUSION_FAIL"]

_TOLERANCES_BLOCK = {
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "stability_margin_tol": {"type": "number", "minimum": 0},
        "positivity_tol": {"type": "number", "minimum": 0},
        "zero_tol": {"type": "number", "minimum": 0},
    },
}

_INTERVAL_COEFFS = {
    "type": "array",
    "minItems": 1,
    "items": {
        "type": "array",
        "minItems": 2,
        "maxItems": 2,
        "items": {"type": "number"},
    },
}

FAMILY_FILE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "kharibound family file",
    "type": "object",
    "required": ["numerator", "denominator"],
    "additionalProperties": False,
    "properties": {
        "numerator": _INTERVAL_COEFFS,
        "denominator": _INTERVAL_COEFFS,
        "tolerances": _TOLERANCES_BLOCK,
    },
}

_VERTEX_LIST = {
    "type": "array",
    "minItems": 4,
    "maxItems": 4,
    "items": {
        "type": "object",
        "required": ["ij", "coeffs"],
        "additionalProperties": False,
        "properties": {
            "ij": {"type": "string", "pattern": "^[12]{2}$"},
            "coeffs": {"type": "array", "minItems": 1, "items": {"type": "number"}},
        },
    },
}

VERTICES_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "kharibound vertices report",
    "type": "object",
    "required": [
        "command",
        "numerator_vertices",
        "denominator_vertices",
        "numerator_distinct",
        "denominator_distinct",
        "note",
        "index_sets",
    ],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "vertices"},
        "numerator_vertices": _VERTEX_LIST,
        "denominator_vertices": _VERTEX_LIST,
        "numerator_distinct": {"type": "integer", "minimum": 1, "maximum": 4},
        "denominator_distinct": {"type": "integer", "minimum": 1, "maximum": 4},
        "note": {"type": ["string", "null"]},
        "index_sets": {
            "type": "object",
            "required": ["I1", "I2", "I3"],
            "additionalProperties": False,
            "properties": {
                "I1": {"type": "array", "minItems": 12, "maxItems": 12, "items": _TUPLE},
                "I2": {"type": "array", "minItems": 8, "maxItems": 8, "items": _TUPLE},
                "I3": {"type": "array", "minItems": 12, "maxItems": 12, "items": _TUPLE},
            },
        },
    },
}

POINTWISE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "kharibound pointwise report",
    "type": "object",
    "required": [
        "command",
        "omega",
        "quantity",
        "value",
        "status",
        "certified",
        "arg_tuple",
        "arg_omega",
        "attained",
        "corner_extremum",
    ],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "pointwise"},
        "omega": {"type": "number"},
        "quantity": {"enum": _QUANTITIES},
        "value": _NUM_OR_NULL,
        "status": {"enum": _STATUSES},
        "certified": {"type": "boolean"},
        "arg_tuple": _TUPLE_OR_NULL,
        "arg_omega": _NUM_OR_NULL,
        "attained": {"type": "boolean"},
        "corner_extremum": _NUM_OR_NULL,
    },
}

GAMMA_INDEX_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "kharibound gamma-index report",
    "type": "object",
    "required": [
        "command",
        "gamma0",
        "classification",
        "per_tuple_infima",
        "arg_tuple",
        "arg_omega",
        "attained",
        "k_upper",
    ],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "gamma-index"},
        "gamma0": {"type": "number"},
        "classification": {
            "enum": [
                "FAMILY_INF_EQUALS_GAMMA0",
                "FAMILY_INF_ZERO",
                "FAMILY_INF_NONNEGATIVE",
            ]
        },
        "per_tuple_infima": {
            "type": "object",
            "additionalProperties": False,
            "patternProperties": {"^[12]{4}$": {"type": "number"}},
        },
        "arg_tuple": _TUPLE_OR_NULL,
        "arg_omega": _NUM_OR_NULL,
        "attained": {"type": "boolean"},
        "k_upper": {
            "anyOf": [{"type": "number"}, {"const": "unbounded"}],
        },
    },
}

SPR_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "kharibound spr report",
    "type": "object",
    "required": [
        "command",
        "mode",
        "verdict",
        "gamma",
        "band",
        "value",
        "status",
        "arg_tuple",
        "arg_omega",
        "attained",
        "failing_tuple",
    ],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "spr"},
        "mode": {"enum": ["family", "band", "closed_loop"]},
        "verdict": {"type": "boolean"},
        "gamma": _NUM_OR_NULL,
        "band": {
            "type": ["array", "null"],
            "minItems": 2,
            "maxItems": 2,
            "items": {"type": "number"},
        },
        "value": _NUM_OR_NULL,
        "status": {"enum": _STATUSES + [None]},
        "arg_tuple": _TUPLE_OR_NULL,
        "arg_omega": _NUM_OR_NULL,
        "attained": {"type": ["boolean", "null"]},
        "failing_tuple": _TUPLE_OR_NULL,
    },
}

VERIFY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "kharibound verify report",
    "type": "object",
    "required": [
        "command",
        "analysis",
        "quantity",
        "omega",
        "vertex_value",
        "oracle_value",
        "discrepancy",
        "verdict",
        "certified",
        "witness",
        "seed",
        "oracle_tol",
        "plan",
        "samples",
        "injected_fault",
    ],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "verify"},
        "analysis": {"enum": ["pointwise", "gamma"]},
        "quantity": {"enum": _QUANTITIES + [None]},
        "omega": _NUM_OR_NULL,
        "vertex_value": _NUM_OR_NULL,
        "oracle_value": _NUM_OR_NULL,
        "discrepancy": _NUM_OR_NULL,
        "verdict": {"enum": ["CONSISTENT", "VIOLATION"]},
        "certified": {"type": "boolean"},
        "witness": {
            "type": ["object", "null"],
            "required": ["num_coeffs", "den_coeffs", "omega", "value"],
            "additionalProperties": False,
            "properties": {
                "num_coeffs": {"type": "array", "items": {"type": "number"}},
                "den_coeffs": {"type": "array", "items": {"type": "number"}},
                "omega": _NUM_OR_NULL,
                "value": _NUM_OR_NULL,
            },
        },
        "seed": {"type": "integer"},
        "oracle_tol": {"type": "number"},
        "plan": {
            "type": "object",
            "required": [
                "strategy",
                "points_per_coeff",
                "n_samples",
                "seed",
                "include_corners",
            ],
            "additionalProperties": False,
            "properties": {
                "strategy": {"enum": ["CORNERS_ONLY", "GRID", "RANDOM"]},
                "points_per_coeff": {"type": "integer", "minimum": 2},
                "n_samples": {"type": "integer", "minimum": 1},
                "seed": {"type": "integer"},
                "include_corners": {"type": "boolean"},
            },
        },
        "samples": {"type": "integer", "minimum": 1},
        "injected_fault": {"type": ["string", "null"]},
    },
}

COMMAND_SCHEMAS = {
    "vertices": VERTICES_SCHEMA,
    "pointwise": POINTWISE_SCHEMA,
    "gamma-index": GAMMA_INDEX_SCHEMA,
    "spr": SPR_SCHEMA,
    "verify": VERIFY_SCHEMA,
}


def dump(schema: dict) -> str:
    """Pretty-printed JSON text of a schema dict."""
    return json.dumps(schema, indent=2, sort_keys=True) + "\n"
