import itertools
import random

import pytest
from hypothesis import given, strategies as st

from cayley_octads import f2core
from cayley_octads.errors import BadInput, EnumerationLimitExceeded, NoIsometry
from cayley_octads.f2core import (A0, A1, A2, A3, B1, B2, B3, BasisData, Isometry, QuadraticFunction, arf, dot,
                                  q_eval, transvection)

vecs = st.integers(0, 63)
qfuns = st.integers(0, 63).map(lambda n: QuadraticFunction.from_values(f2core.coords(n)))
EVEN = [q for q in f2core.all_quadratic_functions() if arf(q) == 0]


def test_dot_examples():
    assert dot(A1, B1) == 1
    assert dot(A1, A2) == 0
    assert dot(A1 ^ B2, A2 ^ B1) == 0


def test_form_is_symplectic():
    for u in range(64):
        assert dot(u, u) == 0
        for v in range(64):
            assert dot(u, v) == dot(v, u)
    # nondegenerate
    for u in range(1, 64):
        assert any(dot(u, v) for v in range(64))
    for i, j in itertools.combinations((A1, A2, A3), 2):
        assert dot(i, j) == 0
    for i, j in itertools.combinations((B1, B2, B3), 2):
        assert dot(i, j) == 0


@given(vecs, vecs, vecs)
def test_dot_bilinear(u, v, w):
    assert dot(u ^ v, w) == dot(u, w) ^ dot(v, w)


def test_derived_classes():
    assert A0 == A1 ^ A2 ^ A3
    assert f2core.oval(0) ^ f2core.oval(1) ^ f2core.oval(2) ^ f2core.oval(3) == 0
    assert f2core.bridge(1, 3) == B1 ^ B3
    assert f2core.bridge(0, 2) == B2


def test_q_eval_examples():
    q = QuadraticFunction.from_bits("000101")
    assert q.matrix == ((0, 0, 0), (1, 0, 1))
    assert q_eval(q, A0) == 0
    assert q_eval(q, B1 ^ B3) == 0
    assert all(q_eval(p, 0) == 0 for p in f2core.all_quadratic_functions())


def test_quadratic_rule_exhaustive():
    for q in f2core.all_quadratic_functions():
        t = q.table
        for x in range(64):
            for y in range(64):
                assert t[x ^ y] == t[x] ^ t[y] ^ f2core.DOT[x][y]


def test_arf_examples():
    assert arf(QuadraticFunction.from_bits("000000")) == 0
    assert arf(QuadraticFunction.from_bits("011101")) == 1
    assert arf(QuadraticFunction.from_bits("111101")) == 0


def test_arf_counts():
    assert len(EVEN) == 36
    for q in f2core.all_quadratic_functions():
        ones = sum(q.table[1:])
        assert ones == (28 if arf(q) == 0 else 36)


def test_arf_matches_basis_data():
    for q in f2core.all_quadratic_functions():
        assert f2core.standard_basis_data(q).arf() == arf(q)


def test_transvection_examples():
    for v in range(64):
        assert transvection(v, v) == v
    assert transvection(B1, A2) == A2
    assert transvection(B1, A1) == A1 ^ B1


def test_transvection_isometric_involution():
    for v in range(1, 64):
        t = [transvection(v, x) for x in range(64)]
        assert all(t[t[x]] == x for x in range(64))
        for x in range(64):
            for y in range(64):
                assert f2core.DOT[t[x]][t[y]] == f2core.DOT[x][y]


@given(qfuns, vecs)
def test_transvection_at_white_class_preserves_q(q, v):
    g = Isometry.from_function(lambda x: transvection(v, x))
    assert g.preserves_form()
    assert g.preserves(q) == (v == 0 or q(v) == 1)


def test_isometry_basics():
    e = Isometry.identity()
    assert e(A1 ^ B3) == A1 ^ B3
    g = Isometry.from_function(lambda x: transvection(A1 ^ B2, x))
    assert g * g == e
    assert g.inverse() == g
    with pytest.raises(BadInput):
        Isometry((1, 2, 3))


def test_stabilizer_is_a_group():
    q = QuadraticFunction.from_bits("111011")
    group = f2core.isometry_group(q)
    assert len(group) == 40320
    assert group == sorted(group)
    assert Isometry.identity() in group
    members = set(group)
    rng = random.Random(0)
    for _ in range(1000):
        g, h = rng.choice(group), rng.choice(group)
        assert g * h in members
    assert all(g.preserves(q) for g in group[::97])


def test_enumeration_guard():
    with pytest.raises(EnumerationLimitExceeded):
        f2core.isometry_group(None)
    assert len(f2core.isometry_group(QuadraticFunction.from_bits("000000"), limit=40320)) == 40320


@pytest.mark.slow
def test_counts_without_materializing():
    assert f2core.count_isometries(QuadraticFunction.from_bits("001110")) == 40320
    assert f2core.count_isometries(None) == 1451520


def test_arf_invariant_under_isometries():
    # transvections generate the symplectic group
    reps = ["000000", "000001", "000011", "001000", "001010", "001110", "111000", "111011",
            "001001", "001011", "111001"]
    for bits in reps:
        q = QuadraticFunction.from_bits(bits)
        for v in range(1, 64):
            g = Isometry.from_function(lambda x: transvection(v, x))
            pulled = QuadraticFunction.from_values([q(g(e)) for e in f2core.BASIS])
            assert arf(pulled) == arf(q)


def test_find_isometry():
    q = QuadraticFunction.from_bits("001010")
    assert f2core.find_isometry(f2core.standard_basis_data(q), q) == Isometry.identity()
    odd = BasisData(f2core.STANDARD_GRAM, (1, 0, 0, 1, 0, 0))
    with pytest.raises(NoIsometry):
        f2core.find_isometry(odd, q)
    with pytest.raises(BadInput):
        f2core.find_isometry(BasisData([[0] * 6] * 6, (0,) * 6), q)


@given(qfuns, vecs)
def test_shift_and_difference(q, u):
    p = q.shifted(u)
    assert q.difference(p) == u
    assert all(p(x) == q(x) ^ dot(u, x) for x in range(64))
