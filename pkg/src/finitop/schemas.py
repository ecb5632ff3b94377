"""JSON schemas for the file formats and for every CLI report."""

_INT = {"type": "integer", "minimum": 0}
_POINTS = {"type": "array", "items": _INT}

SPACE = {
    "type": "object",
    "required": ["n", "le"],
    "properties": {
        "n": _INT,
        "le": {"type": "array", "items": {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2}},
    },
    "additionalProperties": False,
}

COVER = {
    "type": "object",
    "required": ["members"],
    "properties": {"members": {"type": "array", "items": _POINTS}},
    "additionalProperties": False,
}

MAP = {
    "type": "object",
    "required": ["dom", "cod", "values"],
    "properties": {"dom": SPACE, "cod": SPACE, "values": _POINTS},
}

ENUMERATE = {
    "type": "object",
    "required": ["n", "t0_only", "up_to_iso", "count"],
    "properties": {
        "n": _INT, "t0_only": {"type": "boolean"}, "up_to_iso": {"type": "boolean"},
        "count": _INT, "spaces": {"type": "array", "items": SPACE},
    },
}

CHECK = {
    "type": "object",
    "required": ["property", "verdict"],
    "properties": {"property": {"type": "string"}, "verdict": {"type": "boolean"}, "witness": {"type": "array"}},
}

DECOMPOSE = {
    "type": "object",
    "required": ["decomposed"],
    "properties": {
        "decomposed": {"type": "boolean"},
        "r": _POINTS, "z": _POINTS, "fibers": {"type": "array", "items": _POINTS},
        "reason": {"type": "string"}, "witness": {"type": "array"},
    },
}

SHRINK = {
    "type": "object",
    "required": ["shrinks"],
    "properties": {
        "shrinks": {"type": "boolean"}, "shrinking": COVER,
        "reason": {"type": "string"}, "witness": {"type": "array", "items": _POINTS},
    },
}

SEARCH = {
    "type": "object",
    "required": ["query", "bounds", "verdict", "visited", "elapsed_ms"],
    "properties": {
        "query": {"type": "string"},
        "bounds": {"type": "object", "additionalProperties": _INT},
        "verdict": {"enum": ["counterexample", "exhausted_none"]},
        "visited": _INT,
        "elapsed_ms": {"type": "number", "minimum": 0},
        "witness": {"type": "object", "additionalProperties": SPACE},
    },
}

SYMBOLIC_VERIFY = {
    "type": "object",
    "required": ["verdict", "windows", "claims"],
    "properties": {
        "verdict": {"type": "boolean"},
        "windows": _POINTS,
        "claims": {"type": "array", "items": {
            "type": "object",
            "required": ["claim", "statement", "verdict", "checks", "windows", "details", "elapsed_ms"],
            "properties": {
                "claim": {"type": "string"}, "statement": {"type": "string"},
                "verdict": {"type": "boolean"},
                "checks": {"type": "object", "additionalProperties": {"type": "boolean"}},
                "windows": {"type": "object", "additionalProperties": {"type": "boolean"}},
                "details": {"type": "object"},
                "elapsed_ms": {"type": "number", "minimum": 0},
            },
        }},
    },
}

SUITE = {
    "type": "object",
    "required": ["suite", "max_n", "verdict", "checked", "failures", "first_failure", "elapsed_ms"],
    "properties": {
        "suite": {"type": "string"}, "max_n": _INT, "verdict": {"enum": ["pass", "fail"]},
        "checked": _INT, "failures": _INT,
        "first_failure": {"type": ["object", "null"]},
        "notes": {"type": "object"},
        "elapsed_ms": {"type": "number", "minimum": 0},
    },
}

SCHEMAS = {
    "space": SPACE, "cover": COVER, "map": MAP,
    "enumerate": ENUMERATE, "check": CHECK, "decompose": DECOMPOSE, "shrink": SHRINK,
    "search": SEARCH, "symbolic-verify": SYMBOLIC_VERIFY, "suite": SUITE,
}
