"""Command-line front end.

Every subcommand prints a machine-readable payload (JSON unless --format csv)
on stdout and diagnostics on stderr.  Exit codes: 0 success, 1 validation
failure (with a witness in the payload where one exists), 2 usage error.
Identical inputs produce byte-identical output; --seed only feeds the optional
randomized spot checks of `geneo verify`.  The GENEO_MAX_GROUP environment
variable overrides the default group-closure size cap.
"""

from __future__ import annotations

import argparse
import csv
import io as stringio
import json
import sys

from . import io as docs
from .experiments import analyze_code_table, build_code_table, cycle_census
from .geneo import (
    apply,
    decompose_to_measure,
    from_measure,
    from_permutant,
    operator_sup_norm,
    verify_equivariance,
    verify_nonexpansive,
)
from .graph import edge_automorphism_group, parse_graph, vertex_automorphism_group
from .perm import CapExceededError, CycleParseError, DomainMismatchError, format_cycles
from .permutant import (
    GeneralizedPermutant,
    all_orbits,
    is_generalized_permutant,
    is_permutant_measure,
)


class ValidationFailure(Exception):
    """A check that ran to completion and rejected its input; carries the payload."""

    def __init__(self, payload: dict):
        super().__init__(payload.get("error", "validation failed"))
        self.payload = payload


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _context(args, doc=None):
    if doc is not None and isinstance(doc, dict) and "context" in doc:
        return docs.context_from_json(doc["context"])
    if getattr(args, "context", None) is None:
        raise ValueError("no context: pass --context or embed one in the input document")
    return docs.context_from_json(_load(args.context))


def _vector_string(vec) -> str:
    return "".join(str(int(v)) for v in vec)


def cmd_aut(args) -> dict:
    g = parse_graph(_load(args.graph))
    group = edge_automorphism_group(g) if args.edges else vertex_automorphism_group(g)
    return docs.group_to_json(group)


def cmd_orbits(args) -> dict:
    ctx = _context(args)
    orbits, census = all_orbits(ctx)
    payload = {
        "total": ctx.map_space_size(),
        "census": {str(size): count for size, count in census.items()},
        "representatives": {},
    }
    reps: dict[int, list] = {}
    for o in orbits:
        reps.setdefault(o.size, []).append(docs.mapping_to_json(o.representative()))
    payload["representatives"] = {str(s): sorted(v) for s, v in sorted(reps.items())}
    if args.full:
        payload["orbits"] = [[docs.mapping_to_json(f) for f in o.members] for o in orbits]
    return payload


def cmd_permutant_check(args) -> dict:
    doc = _load(args.members)
    ctx = _context(args, doc)
    members = docs.permutant_members_from_json(doc, ctx)
    ok, witness = is_generalized_permutant(members, ctx)
    if not ok:
        h, g = witness
        raise ValidationFailure(
            {
                "ok": False,
                "error": "not a generalized permutant",
                "witness": {"mapping": docs.mapping_to_json(h), "generator": format_cycles(g)},
            }
        )
    return {"ok": True, "size": len(set(members))}


def cmd_measure_check(args) -> dict:
    doc = _load(args.measure)
    ctx = _context(args, doc)
    m = docs.measure_from_json(doc, ctx)
    ok, witness = is_permutant_measure(m)
    if not ok:
        f, g = witness
        raise ValidationFailure(
            {
                "ok": False,
                "error": "not a permutant measure",
                "witness": {"mapping": docs.mapping_to_json(f), "generator": format_cycles(g)},
            }
        )
    return {
        "ok": True,
        "support": len(m.support),
        "total_variation": docs.fraction_to_json(m.total_variation()),
    }


def cmd_geneo_build(args) -> dict:
    if args.permutant:
        doc = _load(args.permutant)
        ctx = _context(args, doc)
        members = docs.permutant_members_from_json(doc, ctx)
        ok, witness = is_generalized_permutant(members, ctx)
        if not ok:
            h, g = witness
            raise ValidationFailure(
                {
                    "error": "not a generalized permutant",
                    "witness": {"mapping": docs.mapping_to_json(h), "generator": format_cycles(g)},
                }
            )
        op = from_permutant(GeneralizedPermutant(ctx, tuple(set(members))))
    else:
        doc = _load(args.measure)
        ctx = _context(args, doc)
        op = from_measure(docs.measure_from_json(doc, ctx))
    return docs.operator_to_json(op)


def cmd_geneo_verify(args) -> dict:
    op = docs.operator_from_json(_load(args.operator))
    spot = 32 if args.seed is not None else 0
    equivariant, witness = verify_equivariance(op, spot_checks=spot, seed=args.seed)
    nonexpansive = verify_nonexpansive(op)
    payload = {
        "equivariant": equivariant,
        "nonexpansive": nonexpansive,
        "operator_norm": docs.fraction_to_json(operator_sup_norm(op)),
    }
    if witness is not None:
        payload["witness"] = {"basis_index": witness[0], "generator": format_cycles(witness[1])}
    if not (equivariant and nonexpansive):
        payload["error"] = "operator is not a GENEO"
        raise ValidationFailure(payload)
    return payload


def cmd_geneo_apply(args) -> list:
    op = docs.operator_from_json(_load(args.operator))
    phi = docs.measurement_from_json(_load(args.measurement), op.source.domain)
    return docs.measurement_to_json(apply(op, phi))


def cmd_geneo_decompose(args) -> dict:
    op = docs.operator_from_json(_load(args.operator))
    return docs.measure_to_json(decompose_to_measure(op))


def cmd_codes(args):
    table = build_code_table(args.n, jobs=args.jobs)
    if args.analyze:
        findings = analyze_code_table(table)
        return {
            "n": findings.n,
            "classes": findings.class_count,
            "isomorphic_subgraphs_share_codes": findings.isomorphic_subgraphs_share_codes,
            "complements_map_to_complements": findings.complements_map_to_complements,
            "equivalent_nonisomorphic_pairs": [
                {
                    "class_a": p.class_a,
                    "class_b": p.class_b,
                    "representative_a": _vector_string(p.representative_a),
                    "representative_b": _vector_string(p.representative_b),
                }
                for p in findings.equivalent_nonisomorphic_pairs
            ],
            "reversals_map_to_reversals": findings.reversals_map_to_reversals,
        }
    if args.format == "csv":
        out = stringio.StringIO()
        writer = csv.writer(out)
        writer.writerow(["vector", "scaled_code", "class"])
        for row in table.rows:
            writer.writerow(
                [_vector_string(row.vector), " ".join(map(str, row.scaled_code)), row.class_id]
            )
        return out.getvalue()
    return {
        "n": table.n,
        "edge_labels": list(table.edge_labels),
        "permutant_size": table.permutant_size,
        "classes": table.class_count,
        "rows": [
            {
                "vector": _vector_string(row.vector),
                "code": [docs.fraction_to_json(c) for c in row.code],
                "scaled_code": list(row.scaled_code),
                "class": row.class_id,
            }
            for row in table.rows
        ],
    }


def cmd_census(args) -> dict:
    report = cycle_census()
    return {
        "total": report.total,
        "census": {str(size): count for size, count in report.census.items()},
        "representatives": {
            str(size): list(names) for size, names in report.representatives.items()
        },
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geneograph",
        description="Equivariant operators on weighted graphs: automorphisms, "
        "orbit censuses, permutant checks, and operator construction.",
    )
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    parser.add_argument("--seed", type=int, default=None, help="seed for randomized spot checks")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for table building")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("aut", help="automorphism group of a graph")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--edges", action="store_true", help="report the induced edge group")
    p.set_defaults(fn=cmd_aut)

    p = sub.add_parser("orbits", help="orbit census of a map-space action")
    p.add_argument("--context", required=True, help="action context JSON file")
    p.add_argument("--full", action="store_true", help="list every orbit in full")
    p.set_defaults(fn=cmd_orbits)

    p = sub.add_parser("permutant", help="generalized-permutant utilities")
    psub = p.add_subparsers(dest="subcommand", required=True)
    pc = psub.add_parser("check", help="validate alpha-closure of a set of mappings")
    pc.add_argument("members", help="permutant JSON file")
    pc.add_argument("--context", help="action context JSON file")
    pc.set_defaults(fn=cmd_permutant_check)

    p = sub.add_parser("measure", help="permutant-measure utilities")
    msub = p.add_subparsers(dest="subcommand", required=True)
    mc = msub.add_parser("check", help="validate alpha-invariance of a weighting")
    mc.add_argument("measure", help="measure JSON file")
    mc.add_argument("--context", help="action context JSON file")
    mc.set_defaults(fn=cmd_measure_check)

    p = sub.add_parser("geneo", help="operator construction and checks")
    gsub = p.add_subparsers(dest="subcommand", required=True)
    gb = gsub.add_parser("build", help="build an operator from a permutant or measure")
    src = gb.add_mutually_exclusive_group(required=True)
    src.add_argument("--permutant", help="permutant JSON file")
    src.add_argument("--measure", help="measure JSON file")
    gb.add_argument("--context", help="action context JSON file")
    gb.set_defaults(fn=cmd_geneo_build)
    gv = gsub.add_parser("verify", help="check equivariance and non-expansivity")
    gv.add_argument("operator", help="operator JSON file")
    gv.set_defaults(fn=cmd_geneo_verify)
    ga = gsub.add_parser("apply", help="apply an operator to a measurement")
    ga.add_argument("operator", help="operator JSON file")
    ga.add_argument("measurement", help="measurement JSON file")
    ga.set_defaults(fn=cmd_geneo_apply)
    gd = gsub.add_parser("decompose", help="recover a permutant measure from an operator")
    gd.add_argument("operator", help="operator JSON file")
    gd.set_defaults(fn=cmd_geneo_decompose)

    p = sub.add_parser("codes", help="subgraph code table of a complete graph")
    p.add_argument("--n", type=int, choices=(3, 4, 5), required=True)
    p.add_argument("--analyze", action="store_true", help="report findings instead of the table")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=cmd_codes)

    p = sub.add_parser("census-c6c3", help="orbit census of maps between the C6 and C3 edge sets")
    p.set_defaults(fn=cmd_census)

    return parser


def _emit(payload, pretty: bool) -> None:
    if isinstance(payload, str):
        sys.stdout.write(payload)
        return
    if pretty:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "codes" and args.analyze and args.format == "csv":
        parser.error("--analyze reports JSON findings; drop --format csv")
    try:
        payload = args.fn(args)
    except ValidationFailure as exc:
        _emit(exc.payload, args.pretty)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (
        ValueError,
        KeyError,
        OSError,
        CapExceededError,
        CycleParseError,
        DomainMismatchError,
        json.JSONDecodeError,
    ) as exc:
        _emit({"error": str(exc)}, args.pretty)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(payload, args.pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())
