"""Text and JSON rendering of verdicts, oracle estimates and plain reports.

Rationals are printed exactly as ``p/q``; floats with 12 significant digits.
The JSON shapes are pinned by the schemas in :data:`SCHEMAS`.
"""

from __future__ import annotations

import json
from typing import Any

from .bargmann import OracleEstimate
from .inequalities import PowerGrowth, Verdict
from .search import SearchReport

TEXT = "text"
JSON = "json"


def fmt_float(x: float) -> str:
    return f"{x:.12g}"


def fmt_complex(z: complex) -> str:
    sign = "-" if z.imag < 0 else "+"
    return f"{fmt_float(z.real)} {sign} {fmt_float(abs(z.imag))}i"


def _verdict_lines(v: Verdict) -> list:
    lines = [
        f"theorem: {v.theorem.value}",
        f"constant: {v.constant}",
        f"lhs_sq: {v.lhs_sq}",
        f"rhs_sq: {v.rhs_sq}",
        f"relation: constant*lhs_sq {v.relation} rhs_sq",
    ]
    for k, p in enumerate(v.witness, start=1):
        lines.append(f"factor {k}: {p}")
    for key, val in v.details.items():
        lines.append(f"{key}: {str(val).lower() if isinstance(val, bool) else val}")
    ratio = "ratio: n/a" if v.ratio is None else f"ratio {v.ratio}"
    lines.append(f"{'HOLDS' if v.holds else 'FAILS'} ({ratio})")
    return lines


def _estimate_lines(e: OracleEstimate) -> list:
    return [
        f"method: {e.method}",
        f"value: {fmt_complex(e.value)}",
        f"stderr: {fmt_float(e.stderr)}",
        f"nodes_or_samples: {e.nodes_or_samples}",
        f"certified: {str(e.certified).lower()}",
    ]


def to_jsonable(obj: Any) -> Any:
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if isinstance(obj, dict):
        return {k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def report_render(obj: Any, fmt: str = TEXT) -> str:
    """Render a Verdict, OracleEstimate, PowerGrowth, SearchReport or a plain
    mapping of already-printable values."""
    if fmt == JSON:
        return json.dumps(to_jsonable(obj), indent=2)
    if isinstance(obj, Verdict):
        return "\n".join(_verdict_lines(obj))
    if isinstance(obj, SearchReport):
        lines = [f"mode: {obj.mode}", f"evaluated: {obj.evaluated}"]
        return "\n".join(lines + _verdict_lines(obj.verdict()))
    if isinstance(obj, OracleEstimate):
        return "\n".join(_estimate_lines(obj))
    if isinstance(obj, PowerGrowth):
        lines = [
            f"s={s}: norm_sq {n}, root {fmt_float(r)}"
            for s, (n, r) in enumerate(zip(obj.norms_sq, obj.roots), start=1)
        ]
        lines.append(f"grew by more than {fmt_float(obj.growth_factor)}: {str(obj.grew).lower()}")
        return "\n".join(lines)
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (Verdict, OracleEstimate, PowerGrowth, SearchReport)):
                lines.append(f"[{k}]")
                lines.append(report_render(v, TEXT))
            elif isinstance(v, float):
                lines.append(f"{k}: {fmt_float(v)}")
            elif isinstance(v, complex):
                lines.append(f"{k}: {fmt_complex(v)}")
            elif isinstance(v, bool):
                lines.append(f"{k}: {str(v).lower()}")
            elif isinstance(v, (list, tuple)):
                lines.extend(f"{k} {n}: {x}" for n, x in enumerate(v, start=1))
            else:
                lines.append(f"{k}: {v}")
        return "\n".join(lines)
    return str(obj)


_RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}

VERDICT_SCHEMA = {
    "type": "object",
    "required": ["theorem", "constant", "lhs_sq", "rhs_sq", "holds", "ratio"],
    "properties": {
        "theorem": {"type": "string"},
        "constant": _RATIONAL,
        "lhs_sq": _RATIONAL,
        "rhs_sq": _RATIONAL,
        "holds": {"type": "boolean"},
        "ratio": {"anyOf": [_RATIONAL, {"type": "null"}]},
        "relation": {"enum": [">=", "==", "<"]},
        "witness": {"type": "array", "items": {"type": "string"}},
        "details": {"type": "object"},
    },
}

ESTIMATE_SCHEMA = {
    "type": "object",
    "required": ["value", "method", "stderr", "nodes_or_samples", "certified"],
    "properties": {
        "value": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
        "method": {"enum": ["quadrature", "monte-carlo"]},
        "stderr": {"type": "number"},
        "nodes_or_samples": {"type": "integer", "minimum": 1},
        "certified": {"type": "boolean"},
    },
}

SEARCH_SCHEMA = {
    "allOf": [
        VERDICT_SCHEMA,
        {
            "type": "object",
            "required": ["mode", "evaluated", "witness"],
            "properties": {
                "mode": {"enum": ["exhaustive", "sampled"]},
                "evaluated": {"type": "integer"},
            },
        },
    ]
}

POWERS_SCHEMA = {
    "type": "object",
    "required": ["poly", "norms_sq", "roots", "growth_factor", "grew"],
    "properties": {
        "poly": {"type": "string"},
        "norms_sq": {"type": "array", "items": _RATIONAL},
        "roots": {"type": "array", "items": {"type": "number"}},
        "growth_factor": {"type": "number"},
        "grew": {"type": "boolean"},
    },
}

SCHEMAS = {
    "ip": {
        "type": "object",
        "required": ["polys", "apolar", "bombieri"],
        "properties": {
            "polys": {"type": "array", "items": {"type": "string"}},
            "apolar": {"type": "string"},
            "bombieri": {"type": "string"},
        },
    },
    "norm": {
        "type": "object",
        "required": ["poly", "norm_sq", "bombieri_norm_sq"],
        "properties": {"poly": {"type": "string"}, "norm_sq": _RATIONAL,
                       "bombieri_norm_sq": _RATIONAL},
    },
    "check": VERDICT_SCHEMA,
    "homogenize": {
        "type": "object",
        "required": ["input", "kind", "output", "arity"],
        "properties": {
            "input": {"type": "string"},
            "kind": {"type": "string"},
            "output": {"type": "string"},
            "arity": {"type": "integer"},
        },
    },
    "oracle": {
        "allOf": [ESTIMATE_SCHEMA, {"type": "object", "required": ["exact"],
                                    "properties": {"exact": {"type": "string"}}}]
    },
    "powers": POWERS_SCHEMA,
    "search": SEARCH_SCHEMA,
    "paper-examples": {
        "type": "object",
        "required": ["failure_example", "equality_parameter", "monotonicity", "all_passed"],
        "properties": {
            "failure_example": {
                "type": "object",
                "required": ["constant_one", "main"],
                "properties": {"constant_one": VERDICT_SCHEMA, "main": VERDICT_SCHEMA},
            },
            "equality_parameter": {
                "type": "object",
                "required": ["c", "f0", "f1", "g0", "g1", "f_c", "g_c"],
            },
            "monotonicity": VERDICT_SCHEMA,
            "all_passed": {"type": "boolean"},
        },
    },
}
