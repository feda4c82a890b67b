"""Linear operators between spaces of measurements: construction from
permutants and permutant measures, equivariance / non-expansivity checks,
combinators, and the decomposition of an equivariant endo-operator back to a
permutant measure.

Operators store dense exact-rational coefficient tables; rows are indexed by
the target set Y, columns by the source set X, so F(phi)(y) = sum_x
coeffs[y][x] phi(x).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable, Sequence

from .linalg import OPTIMAL, rref, simplex_min, solution_subset
from .perception import (
    FunctionSpace,
    Measurement,
    PerceptionPair,
    as_fraction,
    full_space,
    sup_distance,
)
from .perm import (
    CapExceededError,
    DomainMismatchError,
    Homomorphism,
    Permutation,
)
from .permutant import (
    GeneralizedPermutant,
    Mapping,
    PermutantMeasure,
    endo_context,
    is_permutant_measure,
)

Witness = tuple[int, Permutation]


@dataclass(frozen=True)
class LinearOperator:
    """A linear map between measurement spaces, with its equivariance data.

    The flags is_geo / is_geneo start unknown (None) and are filled in by the
    constructors after verification.
    """

    coeffs: tuple[tuple[Fraction, ...], ...]
    source: PerceptionPair
    target: PerceptionPair
    hom: Homomorphism
    is_geo: bool | None = None
    is_geneo: bool | None = None

    def __post_init__(self):
        if len(self.coeffs) != self.target.space.dim:
            raise ValueError("row count does not match the target domain")
        for row in self.coeffs:
            if len(row) != self.source.space.dim:
                raise ValueError("column count does not match the source domain")
        if self.hom.source != self.source.group or self.hom.target != self.target.group:
            raise ValueError("homomorphism does not connect the two perception pairs")

    @property
    def n_in(self) -> int:
        return self.source.space.dim

    @property
    def n_out(self) -> int:
        return self.target.space.dim


@dataclass(frozen=True)
class NonlinearOperator:
    """A pointwise-defined operator carrying the same equivariance contract as a
    linear one; only checkable by sampling."""

    fn: Callable[[Measurement], Measurement]
    source: PerceptionPair
    target: PerceptionPair
    hom: Homomorphism
    description: str = ""


Operator = LinearOperator | NonlinearOperator


def apply(op: Operator, phi: Measurement) -> Measurement:
    """Evaluate an operator on a measurement (exact matrix-vector product)."""
    if len(phi) != op.source.space.dim:
        raise DomainMismatchError(
            f"measurement length {len(phi)} does not match source dimension {op.source.space.dim}"
        )
    if phi.domain is not None and phi.domain != op.source.domain:
        raise DomainMismatchError(f"measurement domain {phi.domain} is not {op.source.domain}")
    if isinstance(op, NonlinearOperator):
        return op.fn(phi)
    values = tuple(
        sum((c * v for c, v in zip(row, phi.values)), Fraction(0)) for row in op.coeffs
    )
    return Measurement(values, op.target.domain)


def _basis(n: int, domain: tuple[str, ...]) -> list[Measurement]:
    return [
        Measurement(tuple(Fraction(1 if j == i else 0) for j in range(n)), domain)
        for i in range(n)
    ]


def verify_equivariance(
    op: LinearOperator, spot_checks: int = 0, seed: int | None = None
) -> tuple[bool, Witness | None]:
    """Exact equivariance check: F(e_i o g) = F(e_i) o T(g) on every standard
    basis vector and every generator of the source group.

    This is sufficient for linear operators over a generated group; optional
    randomized spot checks over the full group add redundancy.  The witness on
    failure is (basis index, generator).
    """
    basis = _basis(op.n_in, op.source.domain)
    for g in op.source.group.generators:
        tg = op.hom(g)
        for i, e in enumerate(basis):
            lhs = apply(op, e.pullback(g))
            rhs = apply(op, e).pullback(tg)
            if lhs.values != rhs.values:
                return False, (i, g)
    if spot_checks:
        rng = random.Random(seed)
        elements = op.source.group.elements
        for _ in range(spot_checks):
            g = rng.choice(elements)
            phi = Measurement(
                tuple(Fraction(rng.randint(-99, 99), rng.randint(1, 9)) for _ in range(op.n_in)),
                op.source.domain,
            )
            lhs = apply(op, phi.pullback(g))
            rhs = apply(op, phi).pullback(op.hom(g))
            if lhs.values != rhs.values:
                return False, (-1, g)
    return True, None


def operator_sup_norm(op: LinearOperator) -> Fraction:
    """The exact operator norm for the sup norm: the largest absolute row sum."""
    if not op.coeffs:
        return Fraction(0)
    return max(sum(abs(c) for c in row) for row in op.coeffs)


def verify_nonexpansive(op: LinearOperator) -> bool:
    """Exact 1-Lipschitz check; for linear operators the sup-norm operator norm
    being at most 1 is necessary and sufficient."""
    return operator_sup_norm(op) <= 1


def _verified(op: LinearOperator) -> LinearOperator:
    geo, _ = verify_equivariance(op)
    return replace(op, is_geo=geo, is_geneo=geo and verify_nonexpansive(op))


def from_permutant(
    h: GeneralizedPermutant,
    source_space: FunctionSpace | None = None,
    target_space: FunctionSpace | None = None,
) -> LinearOperator:
    """The averaging operator F(phi) = (1/|H|) sum_{h in H} phi o h.

    Equivariant and non-expansive by construction; both properties are still
    verified and recorded in the flags.
    """
    if h.size == 0:
        raise ValueError("cannot build an operator from the empty permutant")
    ctx = h.context
    counts = [[0] * ctx.G.degree for _ in range(ctx.K.degree)]
    for member in h.members:
        for y, x in enumerate(member.images):
            counts[y][x] += 1
    coeffs = tuple(tuple(Fraction(c, h.size) for c in row) for row in counts)
    op = LinearOperator(
        coeffs,
        PerceptionPair(source_space or full_space(ctx.x_labels), ctx.G),
        PerceptionPair(target_space or full_space(ctx.y_labels), ctx.K),
        ctx.T,
    )
    op = _verified(op)
    assert op.is_geo and op.is_geneo, "permutant averaging must yield a GENEO"
    return op


def from_measure(
    m: PermutantMeasure,
    source_space: FunctionSpace | None = None,
    target_space: FunctionSpace | None = None,
) -> LinearOperator:
    """The weighted operator F(phi) = sum_f phi o f mu(f) for a validated
    permutant measure.

    Always a GEO; flagged a GENEO exactly when the sup-norm operator norm is at
    most 1, which the condition sum |mu| <= 1 guarantees.
    """
    ok, witness = is_permutant_measure(m)
    if not ok:
        f, g = witness
        raise ValueError(f"not a permutant measure: weight changes along alpha({g}, {f})")
    ctx = m.context
    coeffs_acc = [[Fraction(0)] * ctx.G.degree for _ in range(ctx.K.degree)]
    for f, w in m.weights.items():
        for y, x in enumerate(f.images):
            coeffs_acc[y][x] += w
    coeffs = tuple(tuple(row) for row in coeffs_acc)
    op = LinearOperator(
        coeffs,
        PerceptionPair(source_space or full_space(ctx.x_labels), ctx.G),
        PerceptionPair(target_space or full_space(ctx.y_labels), ctx.K),
        ctx.T,
    )
    op = _verified(op)
    assert op.is_geo, "a permutant measure must yield an equivariant operator"
    return op


def identity_operator(pair: PerceptionPair) -> LinearOperator:
    n = pair.space.dim
    coeffs = tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )
    return _verified(
        LinearOperator(coeffs, pair, pair, Homomorphism.identity_on(pair.group))
    )


def zero_operator(pair: PerceptionPair) -> LinearOperator:
    n = pair.space.dim
    coeffs = tuple(tuple(Fraction(0) for _ in range(n)) for _ in range(n))
    return _verified(
        LinearOperator(coeffs, pair, pair, Homomorphism.identity_on(pair.group))
    )


# -- diagonal scaling ---------------------------------------------------------


@dataclass(frozen=True)
class ScalingOutcome:
    """Result of a diagonal-scaling request: either an operator, or the
    coordinate orbits / space constraints it violates."""

    accepted: bool
    operator: LinearOperator | None
    violated_orbits: tuple[tuple[int, ...], ...]
    closure_ok: bool
    detail: str


def diagonal_scaling(d: Sequence, pair: PerceptionPair) -> ScalingOutcome:
    """The operator phi -> (phi^1/d_1, ..., phi^n/d_n) on a perception pair.

    Accepted iff d is constant on every orbit of the group's coordinate action
    (equivariance) and the scaled space stays inside the pair's space
    (closure); all d_i must be >= 1 for non-expansivity.
    """
    scale = tuple(as_fraction(x) for x in d)
    n = pair.space.dim
    if len(scale) != n:
        raise ValueError(f"expected {n} scaling factors, got {len(scale)}")
    if any(x < 1 for x in scale):
        raise ValueError("all scaling factors must be at least 1")

    violated = tuple(
        tuple(orb)
        for orb in pair.group.coordinate_orbits()
        if len({scale[i] for i in orb}) > 1
    )

    closure_ok, detail = True, ""
    space = pair.space
    if space.kind == "constrained" and space.equations:
        scaled_sys = [
            (tuple(c * s for c, s in zip(coeffs, scale)), rhs)
            for coeffs, rhs in space.equations
        ]
        original = [(coeffs, rhs) for coeffs, rhs in space.equations]
        if not solution_subset(scaled_sys, original, n):
            closure_ok = False
            detail = "scaled image leaves the constrained space"
    elif space.kind == "explicit":
        assert space.members is not None
        values = {m.values for m in space.members}
        for m in space.members:
            image = tuple(v / s for v, s in zip(m.values, scale))
            if image not in values:
                closure_ok = False
                detail = f"image of {tuple(map(str, m.values))} leaves the explicit family"
                break
    # norm balls shrink under division by d_i >= 1, so they never obstruct

    if violated or not closure_ok:
        if violated:
            labels = pair.space.domain
            names = ["{" + ",".join(labels[i] for i in orb) + "}" for orb in violated]
            detail = (detail + "; " if detail else "") + (
                "scaling is not constant on coordinate orbit(s) " + ", ".join(names)
            )
        return ScalingOutcome(False, None, violated, closure_ok, detail)

    coeffs = tuple(
        tuple(Fraction(1) / scale[i] if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )
    op = _verified(
        LinearOperator(coeffs, pair, pair, Homomorphism.identity_on(pair.group))
    )
    assert op.is_geo and op.is_geneo
    return ScalingOutcome(True, op, (), True, "")


# -- combinators --------------------------------------------------------------


def _require_same_signature(ops: Sequence[Operator]) -> None:
    first = ops[0]
    for op in ops[1:]:
        if (
            op.source != first.source
            or op.target != first.target
            or op.hom.table != first.hom.table
        ):
            raise DomainMismatchError("operators do not share source, target, and homomorphism")


def convex_combination(ops: Sequence[LinearOperator], weights: Sequence) -> LinearOperator:
    """The operator sum_i lambda_i F_i for a convex weight vector lambda."""
    if not ops:
        raise ValueError("need at least one operator")
    lam = [as_fraction(w) for w in weights]
    if len(lam) != len(ops):
        raise ValueError("one weight per operator required")
    if any(w < 0 for w in lam) or sum(lam) != 1:
        raise ValueError("weights must be nonnegative and sum to 1")
    _require_same_signature(ops)
    coeffs = tuple(
        tuple(
            sum((w * op.coeffs[i][j] for w, op in zip(lam, ops)), Fraction(0))
            for j in range(ops[0].n_in)
        )
        for i in range(ops[0].n_out)
    )
    return _verified(LinearOperator(coeffs, ops[0].source, ops[0].target, ops[0].hom))


def compose_operators(f2: LinearOperator, f1: LinearOperator) -> LinearOperator:
    """The composite F2 o F1 (apply F1 first); homomorphisms compose alongside."""
    if f1.target != f2.source:
        raise DomainMismatchError("target pair of the first operator must be the source of the second")
    coeffs = tuple(
        tuple(
            sum((f2.coeffs[i][k] * f1.coeffs[k][j] for k in range(f1.n_out)), Fraction(0))
            for j in range(f1.n_in)
        )
        for i in range(f2.n_out)
    )
    return _verified(LinearOperator(coeffs, f1.source, f2.target, f1.hom.then(f2.hom)))


def _pointwise(kind: str, f1: Operator, f2: Operator) -> NonlinearOperator:
    _require_same_signature([f1, f2])
    pick = min if kind == "min" else max

    def fn(phi: Measurement) -> Measurement:
        a, b = apply(f1, phi), apply(f2, phi)
        return Measurement(tuple(pick(x, y) for x, y in zip(a.values, b.values)), a.domain)

    return NonlinearOperator(fn, f1.source, f1.target, f1.hom, f"pointwise {kind}")


def pointwise_min(f1: Operator, f2: Operator) -> NonlinearOperator:
    return _pointwise("min", f1, f2)


def pointwise_max(f1: Operator, f2: Operator) -> NonlinearOperator:
    return _pointwise("max", f1, f2)


def sampled_equivariance(
    op: Operator, sample: Iterable[Measurement]
) -> tuple[bool, tuple[Measurement, Permutation] | None]:
    """Equivariance on a finite sample against every generator; the only
    certificate available for nonlinear operators."""
    gens = op.source.group.generators
    for phi in sample:
        for g in gens:
            lhs = apply(op, phi.pullback(g))
            rhs = apply(op, phi).pullback(op.hom(g))
            if lhs.values != rhs.values:
                return False, (phi, g)
    return True, None


def sampled_nonexpansivity(
    op: Operator, pairs: Iterable[tuple[Measurement, Measurement]]
) -> tuple[bool, tuple[Measurement, Measurement] | None]:
    for phi1, phi2 in pairs:
        if sup_distance(apply(op, phi1), apply(op, phi2)) > sup_distance(phi1, phi2):
            return False, (phi1, phi2)
    return True, None


def geneo_distance(f1: Operator, f2: Operator, sample: FunctionSpace) -> Fraction:
    """Largest target-space sup distance between the two operators' outputs
    over an explicit finite sample."""
    _require_same_signature([f1, f2])
    if sample.kind != "explicit" or not sample.members:
        raise ValueError("operator distance needs a nonempty explicit sample")
    return max(sup_distance(apply(f1, phi), apply(f2, phi)) for phi in sample.members)


def check_closure(
    op: Operator, sample: Iterable[Measurement]
) -> tuple[bool, Measurement | None]:
    """Whether op maps each sampled measurement into its target space."""
    for phi in sample:
        if not op.target.space.contains(apply(op, phi)):
            return False, phi
    return True, None


# -- representation: operator -> permutant measure ----------------------------

DEFAULT_DECOMPOSE_CAP = 5040


def _conjugation_orbits(
    perms: list[tuple[int, ...]], generators: Sequence[Permutation]
) -> list[list[tuple[int, ...]]]:
    gen_pairs = [(g.images, g.inverse().images) for g in generators]
    orbits = []
    visited: set[tuple[int, ...]] = set()
    for seed in perms:
        if seed in visited:
            continue
        members = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for h in frontier:
                for g, ginv in gen_pairs:
                    moved = tuple(g[h[ginv[i]]] for i in range(len(h)))
                    if moved not in members:
                        members.add(moved)
                        nxt.append(moved)
            frontier = nxt
        visited |= members
        orbits.append(sorted(members))
    return orbits


def decompose_to_measure(
    op: LinearOperator, max_perms: int = DEFAULT_DECOMPOSE_CAP
) -> PermutantMeasure:
    """Recover a permutant measure mu with sum |mu| <= 1 whose operator equals op.

    Only endo-operators with the identity homomorphism and a transitive group
    are handled.  The weights returned feed from_measure directly, i.e. they
    sit on each bijection f with coeffs[y][x] = sum_{f(y)=x} mu(f); composing
    with inversion of the support yields the h^-1 form of the representation
    identity.  Among measures the exact LP solver reaches, the total variation
    is minimized first and the support then greedily pruned in canonical orbit
    order, so the result is deterministic.  Raises ValueError if op is not
    equivariant, the group is not transitive, or no such measure exists.
    """
    if op.source.domain != op.target.domain or op.source.group != op.target.group:
        raise ValueError("decomposition handles only endo-operators on a single pair")
    if not op.hom.is_identity():
        raise ValueError("decomposition requires the identity homomorphism")
    group = op.source.group
    n = group.degree
    if math.factorial(n) > max_perms:
        raise CapExceededError(f"{n}! permutations exceed the decomposition cap {max_perms}")
    if len(group.coordinate_orbits()) != 1:
        raise ValueError("the group must act transitively on the domain")
    ok, witness = verify_equivariance(op)
    if not ok:
        raise ValueError(f"operator is not equivariant (witness {witness})")

    perms = sorted(permutations(range(n)))
    orbits = _conjugation_orbits(perms, group.generators)
    orbits.sort(key=lambda o: o[0])
    m = len(orbits)

    # reconstruction equations over one weight per conjugation orbit; the n^2
    # raw equations repeat across orbits of index pairs, so reduce them first
    raw = []
    for y in range(n):
        for x in range(n):
            counts = [Fraction(sum(1 for h in o if h[y] == x)) for o in orbits]
            raw.append(counts + [op.coeffs[y][x]])
    reduced = rref(raw)
    if any(next(i for i, v in enumerate(r) if v != 0) == m for r in reduced):
        raise ValueError("no permutant measure reproduces this operator")
    eq_rows = [r[:-1] for r in reduced]
    eq_rhs = [r[-1] for r in reduced]

    sizes = [Fraction(len(o)) for o in orbits]

    def lp(zeroed: set[int], bound: Fraction | None):
        """Solve for orbit weights w (as u - v, u,v >= 0) with the given orbits
        pinned to zero; minimize total variation, or with `bound` just test
        feasibility of total variation <= bound.  Returns (value, weights)."""
        active = [i for i in range(m) if i not in zeroed]
        lhs = []
        for row in eq_rows:
            r = []
            for i in active:
                r.extend([row[i], -row[i]])
            if bound is not None:
                r.append(Fraction(0))
            lhs.append(r)
        rhs_all = list(eq_rhs)
        if bound is not None:
            budget = []
            for i in active:
                budget.extend([sizes[i], sizes[i]])
            budget.append(Fraction(1))  # slack
            lhs.append(budget)
            rhs_all.append(bound)
            costs = [Fraction(0)] * (2 * len(active) + 1)
        else:
            costs = []
            for i in active:
                costs.extend([sizes[i], sizes[i]])
        status, value, sol = simplex_min(costs, lhs, rhs_all)
        if status != OPTIMAL:
            return None
        weights = {}
        for k, i in enumerate(active):
            w = sol[2 * k] - sol[2 * k + 1]
            if w != 0:
                weights[i] = w
        return value, weights

    first = lp(set(), None)
    if first is None:
        raise ValueError("no permutant measure reproduces this operator")
    min_variation, weights = first
    if min_variation > 1:
        raise ValueError(
            "operator is not a GENEO of this form: any reproducing measure has "
            f"total variation {min_variation} > 1"
        )

    # prune the support greedily in canonical orbit order; the current LP
    # solution certifies that orbits absent from it can be pinned for free
    zeroed = {i for i in range(m) if i not in weights}
    for i in range(m):
        if i in zeroed:
            continue
        res = lp(zeroed | {i}, Fraction(1))
        if res is not None:
            zeroed.add(i)
            weights = res[1]
            zeroed.update(j for j in range(m) if j not in weights)

    # final deterministic solve on the pruned support
    final = lp(zeroed, None)
    assert final is not None and final[0] <= 1
    _, weights = final

    labels = group.labels
    measure_weights: dict[Mapping, Fraction] = {}
    for i, w in weights.items():
        for h in orbits[i]:
            measure_weights[Mapping(labels, labels, h)] = w
    result = PermutantMeasure(endo_context(group), measure_weights)
    rebuilt = from_measure(result)
    assert rebuilt.coeffs == op.coeffs, "reconstructed operator must match exactly"
    return result
