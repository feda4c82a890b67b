from fractions import Fraction
from itertools import product

import pytest

from geneograph.fixtures import cube_reflection_measure
from geneograph.geneo import (
    LinearOperator,
    apply,
    check_closure,
    compose_operators,
    convex_combination,
    decompose_to_measure,
    diagonal_scaling,
    from_measure,
    from_permutant,
    geneo_distance,
    identity_operator,
    operator_sup_norm,
    pointwise_max,
    pointwise_min,
    sampled_equivariance,
    sampled_nonexpansivity,
    verify_equivariance,
    verify_nonexpansive,
    zero_operator,
)
from geneograph.graph import complete_graph, edge_automorphism_group
from geneograph.perception import (
    PerceptionPair,
    constrained_space,
    explicit_space,
    full_space,
    measurement,
)
from geneograph.perm import Homomorphism, generate_group, parse_cycles
from geneograph.permutant import (
    PermutantMeasure,
    endo_context,
    mapping_from_permutation,
    orbit,
    transposition_permutant,
    uniform_measure,
)

EDGE_LABELS = ("p", "q", "r", "s", "t", "u")


@pytest.fixture(scope="module")
def f4():
    return from_permutant(transposition_permutant(4, model="edge"))


@pytest.fixture(scope="module")
def k4_pair(f4):
    return f4.source


def frac6(*nums, den=6):
    return tuple(Fraction(n, den) for n in nums)


# construction from permutants


def test_f4_code_of_triangle(f4):
    out = apply(f4, measurement([1, 1, 1, 0, 0, 0], EDGE_LABELS))
    assert out.values == frac6(4, 4, 4, 2, 2, 2)


def test_f4_code_of_star(f4):
    out = apply(f4, measurement([0, 0, 0, 1, 1, 1], EDGE_LABELS))
    assert out.values == frac6(2, 2, 2, 4, 4, 4)


def test_f4_is_flagged_geneo(f4):
    assert f4.is_geo and f4.is_geneo


def test_singleton_identity_permutant_gives_identity_operator():
    group = edge_automorphism_group(complete_graph(4))
    ctx = endo_context(group)
    from geneograph.permutant import GeneralizedPermutant

    h = GeneralizedPermutant(ctx, (mapping_from_permutation(group.identity),))
    op = from_permutant(h)
    assert op.coeffs == identity_operator(op.source).coeffs


def test_aec_orbit_operator_rows(c6c3):
    op = from_permutant(orbit("aec", c6c3))
    assert op.n_in == 6 and op.n_out == 3
    half = Fraction(1, 2)
    # row g averages the two pullbacks a and d; row h: e and b; row i: c and f
    assert op.coeffs[0] == (half, 0, 0, half, 0, 0)
    assert op.coeffs[1] == (0, half, 0, 0, half, 0)
    assert op.coeffs[2] == (0, 0, half, 0, 0, half)


def test_empty_permutant_rejected(c6c3):
    from geneograph.permutant import GeneralizedPermutant

    with pytest.raises(ValueError, match="empty"):
        from_permutant(GeneralizedPermutant(c6c3, ()))


# construction from measures


def test_uniform_measure_matches_permutant_average(f4):
    h = transposition_permutant(4, model="edge")
    op = from_measure(uniform_measure(h))
    assert op.coeffs == f4.coeffs
    assert op.is_geneo


def test_zero_measure_gives_zero_geneo():
    group = edge_automorphism_group(complete_graph(4))
    m = PermutantMeasure(endo_context(group), {})
    op = from_measure(m)
    assert all(all(c == 0 for c in row) for row in op.coeffs)
    assert op.is_geo and op.is_geneo


def test_cube_measure_on_vertex_indicator():
    op = from_measure(cube_reflection_measure(Fraction(1, 3)))
    e_a = measurement([1, 0, 0, 0, 0, 0, 0, 0], op.source.domain)
    out = apply(op, e_a)
    third = Fraction(1, 3)
    # the three reflected images of vertex A carry 1/3 each
    assert out.values == (0, third, third, 0, third, 0, 0, 0)


def test_cube_measure_flags():
    geneo_op = from_measure(cube_reflection_measure(Fraction(1, 3)))
    assert geneo_op.is_geo and geneo_op.is_geneo
    geo_only = from_measure(cube_reflection_measure(1))
    assert geo_only.is_geo and not geo_only.is_geneo


def test_invalid_measure_rejected(c6c3):
    aec, dbf = orbit("aec", c6c3).members
    bad = PermutantMeasure(c6c3, {aec: 1, dbf: 2})
    with pytest.raises(ValueError, match="not a permutant measure"):
        from_measure(bad)


# application


def test_apply_linearity_on_zero(f4):
    out = apply(f4, measurement([0] * 6, EDGE_LABELS))
    assert out.values == (0,) * 6


def test_apply_fixes_constants(f4):
    out = apply(f4, measurement([1] * 6, EDGE_LABELS))
    assert out.values == (1,) * 6


def test_apply_domain_mismatch(f4):
    from geneograph.perm import DomainMismatchError

    with pytest.raises(DomainMismatchError):
        apply(f4, measurement([1, 2, 3]))


# verification


def test_f4_equivariant(f4):
    ok, witness = verify_equivariance(f4, spot_checks=25, seed=7)
    assert ok and witness is None


def test_f4_equivariance_entrywise_over_full_group(f4):
    # independent formulation: C[y][x] = C[T(g)(y)][g(x)] for every group
    # element, not just generators
    coeffs = f4.coeffs
    for g in f4.source.group:
        tg = f4.hom(g)
        for y in range(6):
            for x in range(6):
                assert coeffs[y][x] == coeffs[tg(y)][g(x)]


def test_identity_operator_equivariant(k4_pair):
    ok, _ = verify_equivariance(identity_operator(k4_pair))
    assert ok


def test_unbalanced_diagonal_is_not_equivariant():
    group = generate_group([parse_cycles("(r,s)(q,t)", EDGE_LABELS)])
    pair = PerceptionPair(full_space(EDGE_LABELS), group)
    coeffs = tuple(
        tuple(Fraction(1, d) if i == j else Fraction(0) for j in range(6))
        for i, d in enumerate((1, 2, 3, 4, 5, 6))
    )
    op = LinearOperator(coeffs, pair, pair, Homomorphism.identity_on(group))
    ok, witness = verify_equivariance(op)
    assert not ok
    basis_index, gen = witness
    assert gen in group


def test_f4_nonexpansive_row_sums(f4):
    assert operator_sup_norm(f4) == 1
    assert verify_nonexpansive(f4)


def test_doubled_identity_is_expansive(k4_pair):
    doubled = LinearOperator(
        tuple(
            tuple(Fraction(2 if i == j else 0) for j in range(6)) for i in range(6)
        ),
        k4_pair,
        k4_pair,
        Homomorphism.identity_on(k4_pair.group),
    )
    assert not verify_nonexpansive(doubled)


def test_small_measures_are_nonexpansive(c6c3):
    from geneograph.permutant import measure_on_orbit

    m = measure_on_orbit(orbit("bfd", c6c3), Fraction(1, 8))  # total variation 1/2
    assert from_measure(m).is_geneo


# diagonal scaling


def edge_scaling_pair():
    group = generate_group([parse_cycles("(r,s)(q,t)", EDGE_LABELS)])
    space = constrained_space(EDGE_LABELS, [((1, 0, 0, 0, 0, 1), 0)])
    return PerceptionPair(space, group)


def vertex_scaling_pair():
    abcd = ("A", "B", "C", "D")
    group = generate_group([parse_cycles("(B,D)", abcd)])
    space = constrained_space(abcd, [((1, 0, 1, 0), 0)])
    return PerceptionPair(space, group)


def test_edge_scaling_accepts_orbitwise_constant_factors():
    outcome = diagonal_scaling((2, 3, 5, 5, 3, 2), edge_scaling_pair())
    assert outcome.accepted
    assert outcome.operator.is_geneo


def test_edge_scaling_iff_pattern_exhaustive():
    pair = edge_scaling_pair()
    for d in product((1, 2), repeat=6):
        expected = d[0] == d[5] and d[1] == d[4] and d[2] == d[3]
        assert diagonal_scaling(d, pair).accepted == expected, d


def test_vertex_scaling_iff_pattern_exhaustive():
    pair = vertex_scaling_pair()
    for d in product((1, 3), repeat=4):
        expected = d[0] == d[2] and d[1] == d[3]
        assert diagonal_scaling(d, pair).accepted == expected, d


def test_all_ones_scaling_is_identity():
    pair = edge_scaling_pair()
    outcome = diagonal_scaling((1,) * 6, pair)
    assert outcome.accepted
    assert outcome.operator.coeffs == identity_operator(pair).coeffs


def test_scaling_reports_violated_orbit():
    outcome = diagonal_scaling((1, 1, 1, 2), vertex_scaling_pair())
    assert not outcome.accepted
    assert outcome.violated_orbits == ((1, 3),)
    assert "{B,D}" in outcome.detail


def test_scaling_rejects_below_one():
    with pytest.raises(ValueError, match="at least 1"):
        diagonal_scaling((1, 1, 1, Fraction(1, 2)), vertex_scaling_pair())


# combinators


def test_convex_combination_single(f4):
    assert convex_combination([f4], [1]).coeffs == f4.coeffs


def test_convex_combination_mixes(f4, k4_pair):
    ident = identity_operator(k4_pair)
    mixed = convex_combination([f4, ident], ["1/2", "1/2"])
    assert mixed.is_geo and mixed.is_geneo
    phi = measurement([1, 0, 0, 0, 0, 0], EDGE_LABELS)
    lhs = apply(mixed, phi).values
    rhs = tuple(
        (a + b) / 2 for a, b in zip(apply(f4, phi).values, apply(ident, phi).values)
    )
    assert lhs == rhs


def test_convex_combination_validates_weights(f4):
    with pytest.raises(ValueError):
        convex_combination([f4], [2])
    with pytest.raises(ValueError):
        convex_combination([f4, f4], ["1/2", "1/3"])


def test_compose_with_identity(f4, k4_pair):
    assert compose_operators(identity_operator(k4_pair), f4).coeffs == f4.coeffs


def test_compose_chains_homomorphisms(c6c3):
    op = from_permutant(orbit("aec", c6c3))
    ident = identity_operator(op.target)
    chained = compose_operators(ident, op)
    assert chained.coeffs == op.coeffs
    assert chained.hom.table == op.hom.table


def test_pointwise_min_of_equal_operators(f4):
    low = pointwise_min(f4, f4)
    for bits in product((0, 1), repeat=6):
        phi = measurement(bits, EDGE_LABELS)
        assert apply(low, phi).values == apply(f4, phi).values


def test_pointwise_combinators_pass_sampled_checks(f4, k4_pair):
    ident = identity_operator(k4_pair)
    sample = [measurement(bits, EDGE_LABELS) for bits in product((0, 1), repeat=6)]
    for op in (pointwise_min(f4, ident), pointwise_max(f4, ident)):
        ok, _ = sampled_equivariance(op, sample)
        assert ok
        ok, _ = sampled_nonexpansivity(op, zip(sample, reversed(sample)))
        assert ok


# operator distance


def test_geneo_distance_zero_for_equal(f4):
    sample = explicit_space(EDGE_LABELS, [bits for bits in product((0, 1), repeat=6)])
    assert geneo_distance(f4, f4, sample) == 0


def test_geneo_distance_f4_vs_zero(f4):
    sample = explicit_space(EDGE_LABELS, [bits for bits in product((0, 1), repeat=6)])
    zero = zero_operator(f4.source)
    assert geneo_distance(f4, zero, sample) == 1
    assert geneo_distance(zero, f4, sample) == 1


# closure of constrained targets


def test_closure_check(f4):
    sample = [measurement(bits, EDGE_LABELS) for bits in product((0, 1), repeat=6)]
    wide = from_permutant(
        transposition_permutant(4, model="edge"),
        target_space=constrained_space(EDGE_LABELS, ball=("sup", 1)),
    )
    ok, _ = check_closure(wide, sample)
    assert ok
    narrow = from_permutant(
        transposition_permutant(4, model="edge"),
        target_space=constrained_space(EDGE_LABELS, ball=("sup", "1/2")),
    )
    ok, witness = check_closure(narrow, sample)
    assert not ok and witness is not None


# decomposition


def test_decompose_identity_gives_unit_mass(k4_pair):
    m = decompose_to_measure(identity_operator(k4_pair))
    assert len(m.support) == 1
    (f,) = m.support
    assert f.as_permutation().is_identity()
    assert m.weight(f) == 1


def test_decompose_f4_roundtrip(f4):
    m = decompose_to_measure(f4)
    assert m.total_variation() <= 1
    rebuilt = from_measure(m)
    assert rebuilt.coeffs == f4.coeffs


def test_decompose_rejects_non_equivariant():
    group = edge_automorphism_group(complete_graph(4))
    pair = PerceptionPair(full_space(EDGE_LABELS), group)
    coeffs = tuple(
        tuple(Fraction(1, d) if i == j else Fraction(0) for j in range(6))
        for i, d in enumerate((1, 2, 3, 4, 5, 6))
    )
    op = LinearOperator(coeffs, pair, pair, Homomorphism.identity_on(group))
    with pytest.raises(ValueError, match="not equivariant"):
        decompose_to_measure(op)


def test_decompose_rejects_intransitive_group():
    group = generate_group([parse_cycles("(r,s)(q,t)", EDGE_LABELS)])
    pair = PerceptionPair(full_space(EDGE_LABELS), group)
    with pytest.raises(ValueError, match="transitively"):
        decompose_to_measure(identity_operator(pair))


def test_decompose_rejects_non_endo(c6c3):
    op = from_permutant(orbit("aec", c6c3))
    with pytest.raises(ValueError, match="endo"):
        decompose_to_measure(op)


def test_decompose_zero_operator_gives_empty_measure(f4):
    z = zero_operator(f4.source)
    m = decompose_to_measure(z)
    assert m.support == () and m.total_variation() == 0
    assert from_measure(m).coeffs == z.coeffs


def test_decompose_shift_operator_over_cyclic_group():
    labels = ("x", "y", "z")
    rot = generate_group([parse_cycles("(x,y,z)", labels)])
    pair = PerceptionPair(full_space(labels), rot)
    r = parse_cycles("(x,y,z)", labels)
    coeffs = tuple(
        tuple(Fraction(1 if x == r(y) else 0) for x in range(3)) for y in range(3)
    )
    shift = LinearOperator(coeffs, pair, pair, Homomorphism.identity_on(rot))
    m = decompose_to_measure(shift)
    assert len(m.support) == 1
    assert m.support[0].as_permutation() == r
    assert m.weight(m.support[0]) == 1


def test_decompose_succeeds_on_random_measure_operators():
    # forward direction of the representation: any operator built from a valid
    # measure with total variation <= 1 must decompose and round-trip exactly
    import random

    from geneograph.fixtures import symmetric_group
    from geneograph.permutant import Mapping, alpha_action

    rng = random.Random(424242)
    labels = ("x", "y", "z")
    s3 = symmetric_group(labels)
    rotations = generate_group([parse_cycles("(x,y,z)", labels)])
    for group in (s3, rotations):
        ctx = endo_context(group)
        perms = [Mapping(labels, labels, p.images) for p in symmetric_group(labels).elements]
        # conjugation orbits under the chosen group
        orbits = []
        seen = set()
        for f in perms:
            if f in seen:
                continue
            members = {f}
            frontier = [f]
            while frontier:
                nxt = []
                for h in frontier:
                    for g in group.generators:
                        moved = alpha_action(g, h, ctx)
                        if moved not in members:
                            members.add(moved)
                            nxt.append(moved)
                frontier = nxt
            seen |= members
            orbits.append(sorted(members, key=lambda m: m.images))
        for _ in range(12):
            raw = [Fraction(rng.randint(-4, 4), 8) for _ in orbits]
            variation = sum(abs(w) * len(o) for w, o in zip(raw, orbits))
            if variation > 1:
                raw = [w / (variation * 2) for w in raw]
            weights = {f: w for o, w in zip(orbits, raw) for f in o if w != 0}
            op = from_measure(PermutantMeasure(ctx, weights))
            assert op.is_geneo
            rebuilt = from_measure(decompose_to_measure(op))
            assert rebuilt.coeffs == op.coeffs


def test_decompose_expansive_operator_fails(k4_pair):
    doubled = LinearOperator(
        tuple(
            tuple(Fraction(2 if i == j else 0) for j in range(6)) for i in range(6)
        ),
        k4_pair,
        k4_pair,
        Homomorphism.identity_on(k4_pair.group),
    )
    with pytest.raises(ValueError, match="total variation"):
        decompose_to_measure(doubled)
