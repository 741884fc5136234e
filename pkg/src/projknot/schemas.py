"""JSON schemas (draft 2020-12) for the records written by ``projknot --json``."""

_WORD = {"type": "array", "items": {
    "type": "array", "prefixItems": [{"type": "string"}, {"enum": [1, -1]}], "minItems": 2, "maxItems": 2}}

PRESENTATION = {
    "type": "object",
    "required": ["generators", "relations", "provenance", "incomplete"],
    "properties": {
        "generators": {"type": "array", "items": {"type": "string"}},
        "relations": {"type": "array", "items": _WORD},
        "provenance": {"type": "object", "additionalProperties": {"type": "string"}},
        "incomplete": {"type": "boolean"},
    },
}

ABELIAN_GROUP = {
    "type": "object",
    "required": ["free_rank", "torsion"],
    "properties": {
        "free_rank": {"type": "integer", "minimum": 0},
        "torsion": {"type": "array", "items": {"type": "integer", "minimum": 2}},
    },
}

_VERDICT = {"enum": ["yes", "no", "unknown"]}

RESULTS = {
    "info": {
        "required": ["boundary_count", "crossings", "faces", "components"],
        "properties": {
            "boundary_count": {"type": "integer", "minimum": 0, "multipleOf": 2},
            "crossings": {"type": "integer", "minimum": 0},
            "faces": {"type": "array", "items": {
                "type": "object", "required": ["index", "symbol", "color"],
                "properties": {"index": {"type": "integer"}, "symbol": {"type": "string"},
                               "color": {"enum": ["dark", "light"]}}}},
            "components": {"type": "array", "items": {
                "type": "object", "required": ["index", "boundary_points", "homology_class"],
                "properties": {"index": {"type": "integer"}, "boundary_points": {"type": "integer"},
                               "homology_class": {"enum": [0, 1]}}}},
        },
    },
    "group": {
        "required": ["mode", "presentation", "text", "recognized", "incomplete"],
        "properties": {
            "mode": {"enum": ["raw", "simplified"]},
            "presentation": PRESENTATION,
            "text": {"type": "string"},
            "recognized": {"enum": ["InfiniteCyclic", "ZstarZ2", "FreeAbelianRank2", "Z2FreeFactor", "Unknown"]},
            "incomplete": {"type": "boolean"},
            "trace": {"type": "array", "items": {
                "type": "object", "required": ["step", "text"],
                "properties": {"step": {"type": "string"}, "text": {"type": "string"}}}},
        },
    },
    "homology": {
        "required": ["h1", "text"],
        "properties": {
            "h1": ABELIAN_GROUP,
            "text": {"type": "string"},
            "dichotomy": {"type": "object", "required": ["homology_class", "expected", "agree"]},
        },
    },
    "classify": {
        "required": ["affine_unknot", "projective_line", "contractible", "reason", "evidence"],
        "properties": {
            "affine_unknot": {"enum": ["yes", "unknown"]},
            "projective_line": {"enum": ["yes", "unknown"]},
            "contractible": _VERDICT,
            "reason": {"enum": [None, "homology class != 0", "sl != 0"]},
            "evidence": {"type": "array", "items": {
                "type": "object", "required": ["rule", "citation"],
                "properties": {"rule": {"type": "string"}, "citation": {"type": "string"}}}},
        },
    },
    "lift": {
        "required": ["pd", "table"],
        "properties": {
            "pd": {"type": "array", "items": {"type": "string", "pattern": r"^X\(\d+,\d+,\d+,\d+\)$"}},
            "table": {"type": "object", "required": ["crossings", "components", "involution",
                                                     "euler_characteristic"]},
        },
    },
    "selflink": {
        "required": ["self_linking"],
        "properties": {"self_linking": {"type": "integer", "minimum": 0}},
    },
}

ERROR = {
    "type": "object",
    "required": ["kind", "message", "exit_code"],
    "properties": {
        "kind": {"enum": ["io", "parse", "validation", "precondition"]},
        "message": {"type": "string"},
        "exit_code": {"enum": [2, 3, 4]},
    },
}


def record_schema(command):
    """Schema for one NDJSON line of ``projknot --json <command>``."""
    result = RESULTS[command]
    base = {"file": {"type": "string"}, "command": {"const": command}}
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": ["file", "command"],
        "oneOf": [
            {"required": result["required"], "properties": {**base, **result["properties"]}},
            {"required": ["error"], "properties": {**base, "error": ERROR}},
        ],
    }
