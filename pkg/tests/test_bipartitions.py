import random

import pytest
from hypothesis import given, strategies as st

from cayley_octads import f2core
from cayley_octads.bipartitions import (ALL_BIPARTITIONS, EMPTY, PAIR_BASIS_DATA, PAIRS, QUADRUPLES, Bipartition,
                                        bifid, bp_dot, bp_h, build_phi, compose_perms, isometry_to_perm,
                                        monodromy_on_bipartitions, perm_to_isometry, permute, picard_lefschetz,
                                        theta_monodromy, transposition)
from cayley_octads.errors import BadInput, NotInduced
from cayley_octads.f2core import Isometry, QuadraticFunction, arf

EVEN = [q for q in f2core.all_quadratic_functions() if arf(q) == 0]
bps = st.sampled_from(ALL_BIPARTITIONS)
perms = st.permutations(list(range(8))).map(tuple)
B = Bipartition.of


def test_canonical_forms():
    assert len(ALL_BIPARTITIONS) == 64 and len(PAIRS) == 28 and len(QUADRUPLES) == 35
    assert B((0, 1, 2, 3, 4, 5)) == B((6, 7))
    assert B((0, 1, 2, 3)) == B((4, 5, 6, 7))
    assert B((0, 1, 2, 3)).part == (4, 5, 6, 7)
    assert B(range(8)) == EMPTY
    with pytest.raises(BadInput):
        B((0, 1, 2))
    with pytest.raises(BadInput):
        B((1, 1))


def test_add_examples():
    assert B((0, 1)) + B((1, 2)) == B((0, 2))
    assert B((0, 1, 2, 3)) + B((0, 1)) == B((2, 3))
    for x in ALL_BIPARTITIONS:
        assert x + x == EMPTY


def test_dot_and_h_examples():
    assert bp_dot(B((0, 1)), B((1, 2))) == 1
    assert bp_dot(B((0, 1)), B((2, 3))) == 0
    assert bp_h(B((0, 1))) == 1 and bp_h(B((0, 1, 2, 3))) == 0 and bp_h(EMPTY) == 0
    assert all(bp_dot(x, x) == 0 for x in ALL_BIPARTITIONS)


@given(bps, bps, bps)
def test_space_structure(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert bp_dot(x + y, z) == bp_dot(x, z) ^ bp_dot(y, z)
    assert bp_h(x + y) == bp_h(x) ^ bp_h(y) ^ bp_dot(x, y)


def test_dot_well_defined_on_complements():
    for x in ALL_BIPARTITIONS:
        for y in ALL_BIPARTITIONS:
            other_side = (x.mask & (0xFF ^ y.mask)).bit_count() & 1
            assert bp_dot(x, y) == other_side


def test_pair_classes():
    assert {x for x in ALL_BIPARTITIONS if bp_h(x)} == set(PAIRS)
    for x in PAIRS:
        for y in PAIRS:
            if x != y:
                assert bp_dot(x, y) == (len(set(x.part) & set(y.part)) == 1)


def test_pair_basis_data_even():
    PAIR_BASIS_DATA.validate()
    assert PAIR_BASIS_DATA.arf() == 0


def test_build_phi_all_even():
    for q in EVEN:
        phi = build_phi(q)
        assert phi.is_valid()
        assert phi(EMPTY) == 0
        assert {phi(p) for p in PAIRS} == {v for v in range(1, 64) if q(v)}
        assert f2core.dot(phi(B((0, 1))), phi(B((1, 2)))) == 1
    with pytest.raises(BadInput):
        build_phi(QuadraticFunction.from_bits("001001"))


def test_build_phi_deterministic():
    q = EVEN[5]
    assert build_phi(q).images == build_phi(q).images


def test_bifid_examples():
    v = B((0, 1, 2, 3))
    assert bifid(v, B((0, 1))) == B((2, 3))
    assert bifid(v, B((0, 4))) == B((0, 4))
    assert bifid(v, B((4, 5))) == B((6, 7))
    with pytest.raises(BadInput):
        bifid(B((0, 1)), B((0, 1)))


@pytest.fixture(scope="module")
def phi():
    return build_phi(QuadraticFunction.from_bits("001110"))


def test_perm_to_isometry_examples(phi):
    assert perm_to_isometry(tuple(range(8)), phi) == Isometry.identity()
    for x in PAIRS:
        i, j = x.part
        g = perm_to_isometry(transposition(i, j), phi)
        assert g == Isometry.from_function(lambda y: f2core.transvection(phi(x), y))
        assert g.preserves(phi.q)


@given(perms, perms)
def test_perm_to_isometry_homomorphism(phi, p, s):
    assert perm_to_isometry(compose_perms(p, s), phi) == perm_to_isometry(p, phi) * perm_to_isometry(s, phi)


@given(perms)
def test_round_trip(phi, p):
    assert isometry_to_perm(perm_to_isometry(p, phi), phi) == p


def test_isometry_to_perm_examples(phi):
    assert isometry_to_perm(Isometry.identity(), phi) == tuple(range(8))
    v = phi(B((2, 5)))
    g = Isometry.from_function(lambda x: f2core.transvection(v, x))
    assert isometry_to_perm(g, phi) == transposition(2, 5)
    black = next(u for u in range(1, 64) if phi.q(u) == 0)
    with pytest.raises(NotInduced):
        isometry_to_perm(Isometry.from_function(lambda x: f2core.transvection(black, x)), phi)


def test_transpositions_generate_s8(phi):
    # orbit of the transposition images under conjugation closes on all 28
    gens = [isometry_to_perm(Isometry.from_function(lambda x, v=phi(p): f2core.transvection(v, x)), phi) for p in PAIRS]
    assert len(set(gens)) == 28


def test_relabeled_phi_is_valid(phi):
    rng = random.Random(3)
    for _ in range(5):
        pi = tuple(rng.sample(range(8), 8))
        assert phi.relabeled(pi).is_valid()


def test_theta_monodromy_fixed_points_and_parity():
    for q in f2core.all_quadratic_functions()[::7]:
        for v in range(1, 64):
            t = theta_monodromy(q, v)
            for u in range(64):
                theta = q.shifted(u)
                image = q.shifted(t[u])
                assert (t[u] == u) == (theta(v) == 1)
                assert arf(image) == arf(theta)
    with pytest.raises(BadInput):
        theta_monodromy(EVEN[0], 0)


def test_monodromy_is_transposition_or_bifid(phi):
    for v in ALL_BIPARTITIONS[1:]:
        action = monodromy_on_bipartitions(phi, phi(v))
        if v.is_pair:
            t = transposition(*v.part)
            assert all(action[x] == permute(t, x) for x in ALL_BIPARTITIONS)
        else:
            assert all(action[p] == bifid(v, p) for p in PAIRS)
            assert sum(action[p] == p for p in PAIRS) == 16
        assert all(action[x] == picard_lefschetz(v, x) for x in ALL_BIPARTITIONS)
