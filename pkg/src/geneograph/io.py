"""JSON document forms for every value the command line reads or writes.

Rationals serialize as plain integers when possible and "p/q" strings
otherwise; permutations as cycle-product strings; mappings in the compact
concatenated-label form whenever the target labels are single characters.
All emitters order their output deterministically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping as MappingABC

from .geneo import LinearOperator
from .perception import (
    FunctionSpace,
    Measurement,
    PerceptionPair,
    as_fraction,
    measurement,
)
from .perm import (
    FiniteGroup,
    Homomorphism,
    format_cycles,
    generate_group,
    group_from_elements,
    parse_cycles,
)
from .permutant import (
    ActionContext,
    GeneralizedPermutant,
    Mapping,
    PermutantMeasure,
    mapping_from_labels,
    parse_mapping,
)


def fraction_to_json(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def measurement_to_json(m: Measurement) -> list:
    return [fraction_to_json(v) for v in m.values]


def measurement_from_json(doc, domain=None) -> Measurement:
    if not isinstance(doc, list):
        raise ValueError("a measurement document is a JSON array")
    return measurement(doc, domain)


def group_to_json(g: FiniteGroup) -> dict:
    return {
        "labels": list(g.labels),
        "generators": [format_cycles(p) for p in g.generators],
        "elements": [format_cycles(p) for p in g.elements],
    }


def group_from_json(doc: MappingABC) -> FiniteGroup:
    labels = tuple(doc["labels"])
    gens = [parse_cycles(text, labels) for text in doc.get("generators", [])]
    if gens:
        group = generate_group(gens)
    elif "elements" in doc:
        group = group_from_elements(
            [parse_cycles(text, labels) for text in doc["elements"]]
        )
    else:
        group = generate_group([], labels=labels)
    if "elements" in doc:
        stated = {parse_cycles(text, labels) for text in doc["elements"]}
        if stated != set(group.elements):
            raise ValueError("stated elements do not match the closure of the generators")
    return group


def homomorphism_to_json(t: Homomorphism) -> list:
    return [[format_cycles(g), format_cycles(t(g))] for g in t.source.elements]


def homomorphism_from_json(doc, source: FiniteGroup, target: FiniteGroup) -> Homomorphism:
    pairs = [
        (parse_cycles(src, source.labels), parse_cycles(dst, target.labels))
        for src, dst in doc
    ]
    if len(pairs) == source.order and {p for p, _ in pairs} == set(source.elements):
        return Homomorphism(source, target, dict(pairs))
    return Homomorphism.from_generator_images(source, target, pairs)


def context_to_json(ctx: ActionContext) -> dict:
    return {
        "G": group_to_json(ctx.G),
        "K": group_to_json(ctx.K),
        "T": homomorphism_to_json(ctx.T),
    }


def context_from_json(doc: MappingABC) -> ActionContext:
    g = group_from_json(doc["G"])
    k = group_from_json(doc["K"])
    return ActionContext(g, k, homomorphism_from_json(doc["T"], g, k))


def mapping_to_json(f: Mapping):
    if all(len(lab) == 1 for lab in f.target_labels):
        return f.compact()
    return [f.target_labels[i] for i in f.images]


def mapping_from_json(doc, ctx: ActionContext) -> Mapping:
    if isinstance(doc, str):
        return parse_mapping(doc, ctx.y_labels, ctx.x_labels)
    return mapping_from_labels(doc, ctx.y_labels, ctx.x_labels)


def permutant_to_json(h: GeneralizedPermutant, include_context: bool = True) -> dict:
    doc: dict = {"members": [mapping_to_json(f) for f in h.members]}
    if include_context:
        doc["context"] = context_to_json(h.context)
    return doc


def permutant_members_from_json(doc, ctx: ActionContext) -> list[Mapping]:
    members = doc["members"] if isinstance(doc, MappingABC) else doc
    return [mapping_from_json(m, ctx) for m in members]


def measure_to_json(m: PermutantMeasure, include_context: bool = True) -> dict:
    doc: dict = {
        "weights": [
            {"mapping": mapping_to_json(f), "weight": fraction_to_json(m.weight(f))}
            for f in m.support
        ]
    }
    if include_context:
        doc["context"] = context_to_json(m.context)
    return doc


def measure_from_json(doc: MappingABC, ctx: ActionContext) -> PermutantMeasure:
    weights_doc = doc["weights"] if "weights" in doc else doc
    weights: dict[Mapping, Fraction] = {}
    if isinstance(weights_doc, MappingABC):
        items = [(k, v) for k, v in weights_doc.items()]
    else:
        items = [(entry["mapping"], entry["weight"]) for entry in weights_doc]
    for key, value in items:
        weights[mapping_from_json(key, ctx)] = as_fraction(value)
    return PermutantMeasure(ctx, weights)


def space_to_json(space: FunctionSpace) -> dict:
    doc: dict = {"kind": space.kind, "domain": list(space.domain)}
    if space.kind == "explicit":
        doc["members"] = [measurement_to_json(m) for m in space.members]
    elif space.kind == "constrained":
        doc["constraints"] = [
            {"coeffs": [fraction_to_json(c) for c in coeffs], "rhs": fraction_to_json(rhs)}
            for coeffs, rhs in space.equations
        ]
        if space.ball is not None:
            doc["ball"] = {"norm": space.ball[0], "radius": fraction_to_json(space.ball[1])}
    return doc


def space_from_json(doc: MappingABC) -> FunctionSpace:
    domain = tuple(doc["domain"])
    kind = doc.get("kind", "full")
    if kind == "explicit":
        return FunctionSpace(
            domain, members=tuple(measurement(vals, domain) for vals in doc["members"])
        )
    equations = tuple(
        (tuple(as_fraction(c) for c in con["coeffs"]), as_fraction(con["rhs"]))
        for con in doc.get("constraints", [])
    )
    ball_doc = doc.get("ball")
    ball = (ball_doc["norm"], as_fraction(ball_doc["radius"])) if ball_doc else None
    return FunctionSpace(domain, equations=equations, ball=ball)


def pair_to_json(pair: PerceptionPair) -> dict:
    return {"space": space_to_json(pair.space), "group": group_to_json(pair.group)}


def pair_from_json(doc: MappingABC) -> PerceptionPair:
    return PerceptionPair(space_from_json(doc["space"]), group_from_json(doc["group"]))


def operator_to_json(op: LinearOperator) -> dict:
    return {
        "source": pair_to_json(op.source),
        "target": pair_to_json(op.target),
        "homomorphism": homomorphism_to_json(op.hom),
        "coeffs": [[fraction_to_json(c) for c in row] for row in op.coeffs],
        "flags": {"is_geo": op.is_geo, "is_geneo": op.is_geneo},
    }


def operator_from_json(doc: MappingABC) -> LinearOperator:
    source = pair_from_json(doc["source"])
    target = pair_from_json(doc["target"])
    hom = homomorphism_from_json(doc["homomorphism"], source.group, target.group)
    coeffs = tuple(tuple(as_fraction(c) for c in row) for row in doc["coeffs"])
    flags = doc.get("flags", {})
    return LinearOperator(
        coeffs, source, target, hom, flags.get("is_geo"), flags.get("is_geneo")
    )
