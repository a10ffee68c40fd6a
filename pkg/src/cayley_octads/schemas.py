"""JSON-schema descriptions of the command line reports (draft 2020-12).

The envelope is shared by every command; ``RESULTS`` describes the
``results`` member of a successful run.
"""

from __future__ import annotations

_INT = {"type": "integer"}
_STR = {"type": "string"}
_BOOL = {"type": "boolean"}
_BITS = {"type": "string", "pattern": "^[01]{6}$"}
_CLASS = {"type": "string", "pattern": "^O[0-4][0-6]$"}
_MATRIX = {"type": "array", "items": {"type": "array", "items": {"enum": [0, 1]}, "minItems": 3, "maxItems": 3},
           "minItems": 2, "maxItems": 2}
_POINT = {"type": "array", "items": _INT, "minItems": 4, "maxItems": 4}
_EDGE = {"type": "array", "prefixItems": [_INT, _INT, {"enum": ["alpha", "beta"]}], "minItems": 3, "maxItems": 3}
_PERM = {"type": "array", "items": _INT}


def _obj(props: dict, required: list | None = None) -> dict:
    return {"type": "object", "properties": props, "required": list(props) if required is None else required,
            "additionalProperties": False}


ENVELOPE = _obj({
    "command": {"enum": ["orbits", "tables", "adjacency", "diagram", "octad", "m1-check"]},
    "inputs": {"type": "object"},
    "status": {"enum": ["ok", "error"]},
    "exit_status": {"enum": [0, 1]},
    "warnings": {"type": "array", "items": _STR},
    "error": {"oneOf": [{"type": "null"}, _obj({"code": _STR, "message": _STR})]},
    "results": {"type": "object"},
})

RESULTS = {
    "orbits": _obj({
        "orbits": {"type": "array", "minItems": 11, "maxItems": 11, "items": _obj({
            "class": _CLASS, "alpha": _INT, "beta": _INT, "parity": {"enum": ["even", "odd"]},
            "size": _INT, "representative": _BITS, "matrix": _MATRIX})},
        "even_total": _INT,
        "odd_total": _INT,
        "even_exception": {"type": "array", "items": {"type": "array", "items": _INT}},
    }),
    "tables": _obj({
        "collision_graphs": {"type": "array", "items": _obj({
            "class": _CLASS, "representative": _BITS, "edges": {"type": "array", "items": _EDGE},
            "matches_reference": _BOOL})},
        "monodromy_groups": {"type": "array", "items": _obj({
            "class": _CLASS, "group": _STR, "order": _INT, "reference": _STR, "match": _BOOL})},
        "vertex_orbits": {"type": "array", "items": _obj({
            "class": _CLASS, "vertex_orbits": _INT, "reference": _INT, "match": _BOOL})},
        "vertex_orbit_total": _INT,
    }),
    "adjacency": _obj({
        "classes": {"type": "array", "items": _CLASS},
        "edges": {"type": "array", "items": {"type": "array", "items": _CLASS, "minItems": 2, "maxItems": 2}},
        "loops": {"type": "array", "items": _CLASS},
    }),
    "diagram": _obj({
        "bits": _BITS, "matrix": _MATRIX, "class": _CLASS, "alpha": _INT, "beta": _INT,
        "parity": {"enum": ["even", "odd"]},
        "oval_colors": {"type": "array", "items": {"enum": [0, 1]}, "minItems": 4, "maxItems": 4},
        "bridge_colors": {"type": "object", "additionalProperties": {"enum": [0, 1]}},
        "orbit_representative": _BITS, "orbit_size": _INT,
        "moves": {"type": "array", "items": _obj({"move": _STR, "target": _BITS, "target_class": _CLASS})},
        "gamma": {"oneOf": [{"type": "null"}, {"type": "array", "items": _EDGE}]},
        "monodromy": {"oneOf": [{"type": "null"}, _obj({
            "group": _STR, "order": _INT,
            "oval_permutations": {"type": "array", "items": _PERM},
            "point_permutations": {"type": "array", "items": _PERM},
            "vertex_orbits": _INT})]},
    }),
    "m1-check": _obj({
        "diagrams": {"type": "array", "items": _obj({
            "diagram": _STR, "opposite_colors": _BOOL, "group_order": _INT, "group": _STR,
            "group_matches_expected": _BOOL,
            "gamma_edges": {"oneOf": [{"type": "null"}, {"type": "array", "items": _EDGE}]},
            "gamma_matches_expected": _BOOL})},
    }),
}

OCTAD_RESULTS = {
    "verify": _obj({
        "classification": {"enum": ["regular-candidate", "4-collision-wall", "invalid"]},
        "distinct": _BOOL, "net_rank": _INT, "net_condition": _BOOL,
        "coplanar_quadruples": {"type": "array", "items": {"type": "array", "items": _INT}},
        "m_octad": _BOOL, "notes": {"type": "array", "items": _STR},
    }),
    "complete": _obj({"point": _POINT, "octad": {"type": "array", "items": _POINT, "minItems": 8, "maxItems": 8},
                      "classification": _STR}),
    "hessian": _obj({
        "net": {"type": "array", "minItems": 3, "maxItems": 3, "items": {"type": "array"}},
        "monomials": {"type": "array", "items": _STR, "minItems": 15, "maxItems": 15},
        "coefficients": {"type": "array", "items": {"type": "string", "pattern": "^-?[0-9]+$"}, "minItems": 15, "maxItems": 15},
        "interpolation_agrees": _BOOL,
    }),
    "chirality": _obj({
        "kind": {"enum": ["sign6", "sign7", "octad"]},
        "sign": {"enum": [-1, 1]},
        "signs": {"type": "array", "items": {"enum": [-1, 1]}, "minItems": 8, "maxItems": 8},
    }, required=["kind", "sign"]),
    "ovals": _obj({"count": _INT, "stabilized": _BOOL, "depth": _INT}),
}


def results_schema(command: str, action: str | None = None) -> dict:
    if command == "octad":
        return OCTAD_RESULTS[action]
    return RESULTS[command]
