#!/usr/bin/env python3
"""Writes the JSON Schemas in this directory.

Every file is self-contained: shared definitions are copied into `$defs`
so validators need no cross-file resolution. Edit this script, not the
generated files, then run `python3 schemas/generate.py`.
"""

import json
import pathlib

HERE = pathlib.Path(__file__).resolve().parent
DRAFT = "https://json-schema.org/draft/2020-12/schema"


def ref(name):
    return {"$ref": f"#/$defs/{name}"}


def obj(required, optional=None, extra=False):
    props = dict(required)
    props.update(optional or {})
    return {
        "type": "object",
        "required": sorted(required),
        "properties": props,
        "additionalProperties": extra,
    }


NAT = {"type": "integer", "minimum": 0}
INT = {"type": "integer"}
BOOL = {"type": "boolean"}
STR = {"type": "string"}
NATS = {"type": "array", "items": NAT}

DEFS = {
    "nat": NAT,
    "table": {"type": "array", "items": NATS},
    "verdict": {"enum": ["pass", "fail", "not_applicable"]},
    "level": {"enum": ["left_brace", "skew_brace", "near_brace", "singular_near_brace"]},
    "rule": {"enum": ["rump", "gv", "near"]},
    "check": obj({"status": ref("verdict")}, {"witness": NATS}),
    "failure": obj({"axiom": STR, "witness": NATS}),
    "structure": obj(
        {"size": NAT, "add": ref("table"), "mul": ref("table"), "kind": ref("level")}
    ),
    "solution": obj({"size": NAT, "sigma": ref("table"), "tau": ref("table")}),
    "ring": obj({"size": NAT, "add": ref("table"), "times": ref("table")}),
    "reflection_map": obj(
        {"k": NATS}, {"bijective": BOOL, "involutive": BOOL}
    ),
    "poly": {
        "type": "object",
        "propertyNames": {"pattern": r"^(1|[a-z][a-z0-9]*\^[0-9]+(\*[a-z][a-z0-9]*\^[0-9]+)*)$"},
        "additionalProperties": {"type": "string", "pattern": r"^-?[0-9]+/[0-9]+$"},
    },
    "poly_matrix": obj(
        {
            "dim": NAT,
            "slots": NATS,
            "entries": {
                "type": "array",
                "items": {
                    "type": "array",
                    "prefixItems": [NAT, NAT, ref("poly")],
                    "minItems": 3,
                    "maxItems": 3,
                },
            },
        }
    ),
    "series_operator": obj(
        {"depth": NAT, "slots": NATS, "coeffs": {"type": "array", "items": ref("poly_matrix")}}
    ),
    "dressed": obj({"k": ref("poly_matrix"), "normalization": {"type": "array", "items": STR}}),
    "dress_params": obj({"k0": ref("poly_matrix"), "theta": ref("poly")}),
    "structure_report": obj(
        {
            "level": ref("level"),
            "valid": BOOL,
            "failures": {"type": "array", "items": ref("failure")},
            "derived": {
                "type": "object",
                "additionalProperties": {"type": ["boolean", "integer", "array"]},
            },
        }
    ),
    "braid_report": obj(
        {
            "passed": BOOL,
            "direct": ref("check"),
            "c1": ref("check"),
            "c2": ref("check"),
            "c3": ref("check"),
            "agree": BOOL,
        }
    ),
    "property_check": obj({"status": ref("verdict")}, {"scalar": STR, "witness": NATS}),
    "order_check": obj({"n": INT, "m": INT, "status": ref("verdict")}, {"witness": NATS}),
    "re_report": obj(
        {"mode": {"enum": ["polynomial", "constant"]}, "braid_form": ref("property_check")},
        {"reversed_mu_degree": NAT},
    ),
    "linear_solution": obj(
        {"source": ref("solution"), "r_check": ref("poly_matrix"), "r": ref("poly_matrix"), "n": NAT}
    ),
}

ORDERS = {"type": "array", "items": ref("order_check")}
NULLABLE_TABLE = {"anyOf": [ref("table"), {"type": "null"}]}
NULLABLE_BOOL = {"type": ["boolean", "null"]}

# command -> (verdicts schema, result schema or None, stream item def or None)
COMMANDS = {
    "verify-structure": (ref("structure_report"), None, None),
    "from-radical-ring": (
        {
            "oneOf": [
                obj({"radical": {"const": True}, "structure": ref("structure_report")}),
                obj({"radical": {"const": False}, "witness": NATS}),
            ]
        },
        ref("structure"),
        None,
    ),
    "enumerate-braces": (
        obj({"size": NAT, "level": ref("level"), "canonical": BOOL, "count": NAT}),
        None,
        "structure",
    ),
    "make-solution": (
        obj(
            {
                "rule": ref("rule"),
                "braid": ref("braid_report"),
                "involutive": BOOL,
                "non_degenerate": BOOL,
            }
        ),
        ref("solution"),
        None,
    ),
    "verify-braid": (ref("braid_report"), None, None),
    "diagnose": (
        obj(
            {
                "non_degenerate": BOOL,
                "involutive": BOOL,
                "invertible": BOOL,
                "sigma_hat": NULLABLE_TABLE,
                "tau_hat": NULLABLE_TABLE,
                "ide1_ok": BOOL,
                "mapzz2_form_ok": NULLABLE_BOOL,
            }
        ),
        None,
        None,
    ),
    "reconstruct-add": (
        obj(
            {
                "add_table": ref("table"),
                "associative": BOOL,
                "group": BOOL,
                "abelian": BOOL,
                "distributivity_ok": BOOL,
                "phi_table": {"anyOf": [NATS, {"type": "null"}]},
                "round_trip": NULLABLE_BOOL,
            }
        ),
        None,
        None,
    ),
    "enumerate-solutions": (
        obj(
            {
                "size": NAT,
                "mode": {
                    "oneOf": [
                        {"const": "exhaustive"},
                        obj({"brace_generated": ref("level")}),
                    ]
                },
                "filter": obj({"involutive": BOOL, "non_degenerate": BOOL}),
                "canonical": BOOL,
                "count": NAT,
            }
        ),
        None,
        "solution",
    ),
    "verify-reflection": (
        obj(
            {"mode": {"enum": ["direct", "cc1", "dual"]}, "status": ref("verdict")},
            {"witness": NATS},
        ),
        None,
        None,
    ),
    "enumerate-reflections": (
        obj(
            {
                "size": NAT,
                "filter": {"enum": ["all", "tau_equivariant", "central"]},
                "count": NAT,
            }
        ),
        None,
        "reflection_map",
    ),
    "linearize": (
        obj({"n": NAT, "nnz": NAT, "involutive": BOOL}),
        obj(
            {
                "linear": ref("linear_solution"),
                "baxterized": obj({"r_check": ref("poly_matrix"), "r": ref("poly_matrix")}),
            }
        ),
        None,
    ),
    "check-r": (
        obj(
            {
                "ybe": ref("property_check"),
                "unitarity": ref("property_check"),
                "crossing_unitarity": ref("property_check"),
                "transpose_symmetry": ref("property_check"),
            }
        ),
        None,
        None,
    ),
    "twist": (
        obj(
            {
                "r_check_conjugate": ref("property_check"),
                "r_from_f": ref("property_check"),
                "r_from_g": ref("property_check"),
                "yangian_conjugate": ref("property_check"),
            }
        ),
        obj(
            {
                "f": ref("poly_matrix"),
                "g": ref("poly_matrix"),
                "f_invertible": BOOL,
                "g_invertible": BOOL,
            }
        ),
        None,
    ),
    "check-rtt": (
        obj(
            {
                "max_order": NAT,
                "matrix": ORDERS,
                "component": ORDERS,
                "agree": BOOL,
                "yangian": ref("verdict"),
                "passed": BOOL,
            }
        ),
        None,
        None,
    ),
    "dress-k": (
        obj(
            {
                "slots": NATS,
                "mu_degree": {"type": ["integer", "null"], "minimum": 0},
                "reflection_equation": ref("re_report"),
            }
        ),
        ref("dressed"),
        None,
    ),
    "check-re": (ref("re_report"), None, None),
    "check-ra": (
        obj(
            {
                "depth": NAT,
                "basic": ORDERS,
                "rela1": ORDERS,
                "rela2": ORDERS,
                "passed": BOOL,
            },
            {"k0_scalar": STR, "finite_subalgebra": ref("order_check")},
        ),
        None,
        None,
    ),
}


def report_schema(command, verdicts, result):
    props = {
        "command": {"const": command},
        "version": STR,
        "inputs": {
            "type": "object",
            "additionalProperties": obj(
                {"path": STR, "sha256": {"type": "string", "pattern": "^[0-9a-f]{64}$"}}
            ),
        },
        "passed": BOOL,
        "verdicts": verdicts,
        "timing_ms": NAT,
    }
    required = dict(props)
    optional = {"result": result} if result is not None else {}
    return obj(required, optional)


def document(title, body):
    doc = {"$schema": DRAFT, "title": title}
    doc.update(body)
    doc["$defs"] = DEFS
    return doc


def write(name, doc):
    (HERE / name).write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")


def main():
    for art in [
        "structure",
        "solution",
        "ring",
        "reflection_map",
        "table",
        "poly_matrix",
        "series_operator",
        "dressed",
        "dress_params",
    ]:
        write(f"{art}.schema.json", document(art, ref(art)))
    for command, (verdicts, result, item) in COMMANDS.items():
        body = report_schema(command, verdicts, result)
        if item is not None:
            body["description"] = f"Last line of the stream; preceding lines match {item}.schema.json."
        write(f"report.{command}.schema.json", document(f"{command} report", body))


if __name__ == "__main__":
    main()
