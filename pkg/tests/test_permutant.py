from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from geneograph.fixtures import (
    cube_context,
    cube_face_reflections,
    cube_reflection_measure,
    cube_rotation_group,
    image_size_measure,
    setwise_stabilizer_context,
    small_image_permutant,
    symmetric_group,
)
from geneograph.perm import CapExceededError, compose, format_cycles, parse_cycles
from geneograph.permutant import (
    GeneralizedPermutant,
    Mapping,
    PermutantMeasure,
    all_orbits,
    alpha_action,
    endo_context,
    is_generalized_permutant,
    is_permutant_measure,
    mapping_from_labels,
    measure_on_orbit,
    orbit,
    parse_mapping,
    transposition_permutant,
    uniform_measure,
)

from conftest import EDGES3, EDGES6


def label_oracle_alpha(ctx, g, f):
    """Re-derive alpha(g, f) by chasing labels through explicit dictionaries."""
    tginv = ctx.T(g.inverse())
    g_map = {ctx.x_labels[i]: ctx.x_labels[g(i)] for i in range(len(ctx.x_labels))}
    f_map = {ctx.y_labels[j]: ctx.x_labels[f(j)] for j in range(len(ctx.y_labels))}
    t_map = {ctx.y_labels[j]: ctx.y_labels[tginv(j)] for j in range(len(ctx.y_labels))}
    return "".join(g_map[f_map[t_map[y]]] for y in ctx.y_labels)


# mappings and their compact form


def test_compact_roundtrip_example(c6c3):
    m = parse_mapping("caf", EDGES3, EDGES6)
    assert m.compact() == "caf"
    assert m.images == (2, 0, 5)


def test_parse_mapping_errors():
    with pytest.raises(ValueError):
        parse_mapping("ca", EDGES3, EDGES6)
    with pytest.raises(ValueError):
        parse_mapping("caz", EDGES3, EDGES6)
    with pytest.raises(ValueError):
        mapping_from_labels(["a", "zz"], EDGES3[:2], EDGES6)


@given(st.lists(st.integers(min_value=0, max_value=5), min_size=3, max_size=3))
def test_compact_roundtrip_random(images):
    m = Mapping(EDGES3, EDGES6, tuple(images))
    assert parse_mapping(m.compact(), EDGES3, EDGES6) == m


# the alpha action


def test_alpha_identity(c6c3):
    f = c6c3.mapping("aec")
    assert alpha_action(c6c3.G.identity, f, c6c3) == f


def test_alpha_on_aec_by_rotation(c6c3):
    alpha = parse_cycles("(a,b,c,d,e,f)", EDGES6)
    f = c6c3.mapping("aec")
    moved = alpha_action(alpha, f, c6c3)
    assert moved.compact() == "dbf"
    assert label_oracle_alpha(c6c3, alpha, f) == "dbf"


def test_alpha_on_aec_by_reflection(c6c3):
    beta = parse_cycles("(a,f)(b,e)(c,d)", EDGES6)
    f = c6c3.mapping("aec")
    moved = alpha_action(beta, f, c6c3)
    assert moved.compact() == "dbf"
    assert label_oracle_alpha(c6c3, beta, f) == "dbf"


def test_alpha_matches_label_oracle_everywhere(c6c3):
    for f in list(c6c3.all_mappings())[::17]:
        for g in c6c3.G:
            assert alpha_action(g, f, c6c3).compact() == label_oracle_alpha(c6c3, g, f)


def test_alpha_rejects_outside_group(c6c3):
    stray = parse_cycles("(a,b)", EDGES6)
    assert stray not in c6c3.G
    with pytest.raises(ValueError):
        alpha_action(stray, c6c3.mapping("aec"), c6c3)


def test_left_action_axioms(c6c3):
    fs = [c6c3.mapping(s) for s in ("aec", "bfd", "aaa", "abd")]
    for f in fs:
        assert alpha_action(c6c3.G.identity, f, c6c3) == f
        for g1 in c6c3.G:
            for g2 in c6c3.G:
                lhs = alpha_action(g2, alpha_action(g1, f, c6c3), c6c3)
                rhs = alpha_action(compose(g2, g1), f, c6c3)
                assert lhs == rhs


# orbits


def test_orbit_of_aec(c6c3):
    o = orbit("aec", c6c3)
    assert o.size == 2
    assert {m.compact() for m in o} == {"aec", "dbf"}


def test_orbit_of_bfd(c6c3):
    o = orbit("bfd", c6c3)
    assert o.size == 4
    assert {m.compact() for m in o} == {"bfd", "eca", "cae", "fdb"}


def test_orbit_of_constant_map(c6c3):
    o = orbit("aaa", c6c3)
    assert o.size == 6
    assert {m.compact() for m in o} == {"aaa", "bbb", "ccc", "ddd", "eee", "fff"}


def test_orbit_is_alpha_stable_bijection(c6c3):
    o = orbit("bfd", c6c3)
    members = set(o.members)
    for g in c6c3.G:
        assert {alpha_action(g, h, c6c3) for h in members} == members


def test_census_of_c6_c3(c6c3):
    orbits, census = all_orbits(c6c3)
    assert census == {2: 1, 4: 1, 6: 5, 12: 15}
    assert len(orbits) == 22
    assert sum(o.size for o in orbits) == 216
    for o in orbits:
        assert c6c3.G.order % o.size == 0


def test_census_matches_full_group_oracle(c6c3):
    # independent partition: apply every group element to every map, no BFS
    orbit_sets = set()
    for f in c6c3.all_mappings():
        orbit_sets.add(frozenset(alpha_action(g, f, c6c3) for g in c6c3.G))
    sizes = sorted(len(o) for o in orbit_sets)
    orbits, _ = all_orbits(c6c3)
    assert sorted(o.size for o in orbits) == sizes
    assert {frozenset(o.members) for o in orbits} == orbit_sets


def test_orbit_count_matches_fixed_point_average(c6c3):
    # counting oracle: the number of orbits equals the average number of
    # maps fixed by each group element
    fixed_total = 0
    maps = list(c6c3.all_mappings())
    for g in c6c3.G:
        fixed_total += sum(1 for f in maps if alpha_action(g, f, c6c3) == f)
    assert fixed_total % c6c3.G.order == 0
    orbits, _ = all_orbits(c6c3)
    assert fixed_total // c6c3.G.order == len(orbits) == 22


def test_trivial_group_gives_singletons():
    from geneograph.perm import trivial_group

    ctx = endo_context(trivial_group(("x", "y")))
    orbits, census = all_orbits(ctx)
    assert census == {1: 4}


def test_two_element_census_oracle():
    s2 = symmetric_group(("a", "b"))
    ctx = endo_context(s2)
    orbits, census = all_orbits(ctx)
    # conjugation on the four maps {a,b} -> {a,b}: the two constants swap,
    # the two bijections are central
    assert census == {1: 2, 2: 1}
    assert {frozenset(m.compact() for m in o) for o in orbits} == {
        frozenset({"aa", "bb"}),
        frozenset({"ab"}),
        frozenset({"ba"}),
    }


def test_all_orbits_cap(c6c3):
    with pytest.raises(CapExceededError):
        all_orbits(c6c3, max_maps=100)


# permutant validation


def test_union_of_orbits_is_permutant(c6c3):
    union = set(orbit("aec", c6c3).members) | set(orbit("bfd", c6c3).members)
    ok, witness = is_generalized_permutant(union, c6c3)
    assert ok and witness is None
    GeneralizedPermutant(c6c3, tuple(union))  # constructor agrees


def test_partial_orbit_is_not_permutant(c6c3):
    ok, witness = is_generalized_permutant({c6c3.mapping("aec")}, c6c3)
    assert not ok
    h, g = witness
    assert h.compact() == "aec"
    assert alpha_action(g, h, c6c3).compact() == "dbf"


def test_empty_set_is_permutant(c6c3):
    ok, witness = is_generalized_permutant(set(), c6c3)
    assert ok and witness is None
    assert GeneralizedPermutant(c6c3, ()).size == 0


def test_constructor_rejects_unclosed(c6c3):
    with pytest.raises(ValueError, match="alpha-closed"):
        GeneralizedPermutant(c6c3, (c6c3.mapping("aec"),))


# transposition permutants


def test_k4_edge_transposition_permutant():
    h = transposition_permutant(4, model="edge")
    names = {format_cycles(m.as_permutation()) for m in h}
    assert names == {
        "(q,r)(s,t)",
        "(p,q)(s,u)",
        "(p,t)(r,u)",
        "(p,r)(t,u)",
        "(p,s)(q,u)",
        "(q,t)(r,s)",
    }
    assert h.size == 6


def test_k2_vertex_transposition_permutant():
    h = transposition_permutant(2, model="vertex")
    assert h.size == 1
    assert format_cycles(h.members[0].as_permutation()) == "(A,B)"


def test_k5_edge_transpositions_form_single_orbit():
    h = transposition_permutant(5, model="edge")
    assert h.size == 10
    assert set(orbit(h.members[0], h.context).members) == set(h.members)


def test_transposition_permutant_range():
    with pytest.raises(ValueError):
        transposition_permutant(1)
    with pytest.raises(ValueError):
        transposition_permutant(7)


# permutant measures


def test_uniform_measure_on_transpositions_is_invariant():
    h = transposition_permutant(4, model="edge")
    m = uniform_measure(h)
    ok, witness = is_permutant_measure(m)
    assert ok and witness is None
    assert m.total_variation() == 1


def test_cube_rotation_group_order():
    assert cube_rotation_group().order == 24


def test_cube_reflections_form_one_orbit_of_size_three():
    ctx = cube_context()
    h1, h2, h3 = cube_face_reflections()
    o = orbit(h1, ctx)
    assert o.size == 3
    assert set(o.members) == {h1, h2, h3}


def test_cube_reflection_measure_is_invariant():
    m = cube_reflection_measure(Fraction(1, 3))
    ok, _ = is_permutant_measure(m)
    assert ok
    assert len(m.support) == 3


def test_unbalanced_weights_are_rejected(c6c3):
    aec, dbf = sorted(orbit("aec", c6c3).members, key=lambda m: m.images)
    m = PermutantMeasure(c6c3, {aec: 1, dbf: 2})
    ok, witness = is_permutant_measure(m)
    assert not ok
    f, g = witness
    assert m.weight(alpha_action(g, f, c6c3)) != m.weight(f)


def test_measure_drops_zero_weights(c6c3):
    o = orbit("aec", c6c3)
    m = PermutantMeasure(c6c3, {o.members[0]: 0})
    assert m.support == ()
    assert m.total_variation() == 0


# the subset-stabilizer examples


@pytest.fixture(scope="module")
def stab4_2():
    return setwise_stabilizer_context("ABCD", "AB")


def test_stabilizer_context_shape(stab4_2):
    assert stab4_2.G.order == 4  # 2! x 2!
    assert stab4_2.K.order == 2
    assert stab4_2.map_space_size() == 16


def test_small_image_sets_are_permutants(stab4_2):
    for m in (1, 2, 3):
        h = small_image_permutant(stab4_2, m)
        ok, _ = is_generalized_permutant(set(h.members), stab4_2)
        assert ok
    assert small_image_permutant(stab4_2, 1).size == 0
    assert small_image_permutant(stab4_2, 2).size == 4  # the constants
    assert small_image_permutant(stab4_2, 3).size == 16


def test_image_size_measures_are_invariant(stab4_2):
    m1 = image_size_measure(stab4_2, 1)
    assert is_permutant_measure(m1)[0]
    assert all(w == Fraction(1, 4) for w in m1.weights.values())
    m2 = image_size_measure(stab4_2, 2)
    assert is_permutant_measure(m2)[0]
    assert all(w == Fraction(1, 24) for w in m2.weights.values())
    assert len(m2.support) == 12


def test_measure_on_orbit_helper(c6c3):
    m = measure_on_orbit(orbit("bfd", c6c3), "1/8")
    assert is_permutant_measure(m)[0]
    assert m.total_variation() == Fraction(1, 2)
