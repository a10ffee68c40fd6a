import itertools
import random

import pytest
from hypothesis import given, strategies as st

from cayley_octads import diagrams as dg
from cayley_octads import f2core
from cayley_octads.bipartitions import build_phi
from cayley_octads.errors import BadInput, MoveNotAllowed

diagrams_st = st.integers(0, 63).map(lambda n: dg.ThetaDiagram.from_values(f2core.coords(n)))
even_st = diagrams_st.filter(lambda d: d.parity == 0)
EVEN_REPS = {key: dg.even_representative(key) for key in dg.EVEN_CLASSES}


def test_class_label_examples():
    assert dg.class_label(dg.diagram("000101")) == dg.ClassLabel(0, 4, 0)
    assert dg.class_label(dg.diagram("000000")) == dg.ClassLabel(0, 0, 0)
    assert dg.class_label(dg.diagram("111001")) == dg.ClassLabel(4, 3, 1)


def test_coloring_is_linear():
    for d in dg.all_diagrams():
        ov = d.oval_colors
        assert ov[0] == ov[1] ^ ov[2] ^ ov[3]
        br = d.bridge_colors
        for i, j in [(1, 2), (1, 3), (2, 3)]:
            assert br[(i, j)] == br[(0, i)] ^ br[(0, j)]
        assert dg.ThetaDiagram.from_coloring(ov, br) == d


def test_s4_examples():
    d = dg.diagram("000101")
    assert dg.s4_apply((0, 1, 2, 3), d) == d
    assert dg.s4_apply((1, 0, 2, 3), d).matrix == ((0, 0, 0), (1, 1, 0))


def test_s4_preserves_labels_exhaustive():
    for d in dg.all_diagrams():
        for s in dg.S4:
            e = dg.s4_apply(s, d)
            assert dg.class_label(e) == dg.class_label(d)
            # the S4 action is the induced isometry acting on q
            g = dg.oval_permutation_isometry(s)
            assert all(e(g(x)) == d(x) for x in range(64))


def test_s4_action_composes():
    d = dg.diagram("001010")
    for s, t in itertools.product(dg.S4[::5], dg.S4[::7]):
        st_ = tuple(s[t[i]] for i in range(4))
        assert dg.s4_apply(s, dg.s4_apply(t, d)) == dg.s4_apply(st_, d)


def test_orbits():
    orbits = dg.enumerate_orbits()
    assert len(orbits) == 11
    sizes = {o.label.key: o.size for o in orbits if o.label.parity == 0}
    assert sizes == {(0, 0): 1, (4, 0): 1, (2, 0): 6, (0, 3): 4, (2, 3): 12, (0, 4): 3, (2, 4): 6, (4, 4): 3}
    assert sorted(o.label.key for o in orbits if o.label.parity) == [(2, 3), (2, 4), (4, 3)]
    for o in orbits:
        assert o.representative.bits == min(m.bits for m in o.members)
    assert dg.computed_even_exception() == [(4, 3)]
    assert "(4,3)" in dg.discrepancy_warning()


def test_move_examples():
    d00 = dg.diagram("000000")
    assert dg.class_label(dg.apply_move(d00, dg.BlackVertex(3))).key == (0, 3)
    assert set(dg.apply_move(d00, dg.BlackVertex(3)).white_bridges) == {(0, 3), (1, 3), (2, 3)}
    e = dg.apply_move(d00, dg.BlackEdge(0, 1))
    assert dg.class_label(e).key == (2, 0) and e.white_ovals == (0, 1)
    d23 = EVEN_REPS[(2, 3)]
    stays = [m for m in dg.admissible_moves(d23) if isinstance(m, dg.BlackEdge)
             and d23.oval_colors[m.i] != d23.oval_colors[m.j]]
    assert stays and all(dg.class_label(dg.apply_move(d23, m)).key == (2, 3) for m in stays)
    with pytest.raises(MoveNotAllowed):
        dg.apply_move(dg.diagram("111000"), dg.BlackVertex(1))


@given(even_st)
def test_moves_are_involutions(d):
    for m in dg.admissible_moves(d):
        e = dg.apply_move(d, m)
        assert e.parity == 0
        assert dg.apply_move(e, m) == d
        if isinstance(m, dg.BlackEdge):
            flipped = {i for i in range(4) if e.oval_colors[i] != d.oval_colors[i]}
            assert flipped == {m.i, m.j} and e.bridge_colors == d.bridge_colors
        else:
            flipped = {ij for ij in f2core.BRIDGE_PAIRS if e.bridge_colors[ij] != d.bridge_colors[ij]}
            assert flipped == {ij for ij in f2core.BRIDGE_PAIRS if m.i in ij} and e.oval_colors == d.oval_colors


def test_adjacency_graph():
    g = dg.adjacency_graph()
    assert set(g.loops) == {(2, 3), (2, 0)}
    assert g.neighbours((0, 0)) == {(0, 3), (2, 0)}
    assert (4, 4) not in g.neighbours((4, 0))


def test_adjacency_does_not_depend_on_representative():
    edges = set()
    for d in dg.all_diagrams():
        if d.parity == 0:
            for m in dg.admissible_moves(d):
                edges.add(tuple(sorted((dg.class_label(d).key, dg.class_label(dg.apply_move(d, m)).key))))
    assert edges == set(dg.adjacency_graph().edges)


def test_gamma_examples():
    g44 = dg.gamma_graph(EVEN_REPS[(4, 4)])
    assert len(g44.components()) == 1 and all(g44.degree(v) == 2 for v in range(8))
    assert g44.count(dg.ALPHA) == 4 and g44.count(dg.BETA) == 4
    assert dg.gamma_graph(EVEN_REPS[(0, 0)]).edges == ()
    g04 = dg.gamma_graph(EVEN_REPS[(0, 4)])
    assert g04.count(dg.BETA) == 4 and g04.is_matching(dg.BETA) and g04.count(dg.ALPHA) == 0
    with pytest.raises(BadInput):
        dg.gamma_graph(dg.diagram("001001"))


@given(even_st)
def test_gamma_invariants(d):
    g = dg.gamma_graph(d)
    label = dg.class_label(d)
    assert len(g.edges) == label.alpha + label.beta
    assert g.is_matching(dg.ALPHA) and g.is_matching(dg.BETA)
    assert g.is_isomorphic(dg.gamma_graph_from_diagram(d))


def test_gamma_independent_of_phi():
    rng = random.Random(7)
    for key, d in EVEN_REPS.items():
        base = dg.gamma_graph(d)
        phi = build_phi(d)
        for _ in range(5):
            other = phi.relabeled(tuple(rng.sample(range(8), 8)))
            assert dg.gamma_graph(d, other).is_isomorphic(base)


def test_isomorphism_detects_tags():
    a = dg.GammaGraph(8, ((0, 1, dg.ALPHA), (1, 2, dg.BETA)))
    b = dg.GammaGraph(8, ((5, 6, dg.BETA), (6, 7, dg.ALPHA)))
    c = dg.GammaGraph(8, ((0, 1, dg.ALPHA), (2, 3, dg.BETA)))
    assert a.is_isomorphic(b) and not a.is_isomorphic(c)


def test_reference_graphs():
    for key, d in EVEN_REPS.items():
        assert dg.gamma_graph(d).is_isomorphic(dg.reference_gamma(key)), key


def test_monodromy_examples():
    assert dg.monodromy_group(EVEN_REPS[(0, 0)]).name == "S4"
    assert dg.monodromy_group(EVEN_REPS[(0, 4)]).name == "D4"
    assert dg.monodromy_group(EVEN_REPS[(2, 3)]).name == "Z2"
    assert dg.vertex_orbits(EVEN_REPS[(0, 4)]) == 1
    assert dg.vertex_orbits(EVEN_REPS[(2, 3)]) == 4
    assert sum(dg.vertex_orbits(d) for d in EVEN_REPS.values()) == 14


def test_monodromy_preserves_gamma():
    for key, d in EVEN_REPS.items():
        phi = build_phi(d)
        group = dg.monodromy_group(d, phi)
        g = dg.gamma_graph(d, phi)
        assert all(g.preserved_by(p) for p in group.lifted)
        lifted = set(group.lifted)
        assert all(tuple(p[q[i]] for i in range(8)) in lifted for p in lifted for q in lifted)
        assert group.name == dg.REFERENCE_GROUPS[key]


def test_group_names():
    assert dg.group_name([(0, 1, 2, 3)]) == "trivial"
    assert dg.group_name([(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)]) == "Z2xZ2"
    assert dg.group_name([(0, 1, 2, 3), (1, 2, 3, 0), (2, 3, 0, 1), (3, 0, 1, 2)]) == "Z4"


def test_m1_checks():
    rep = dg.m1_diagram_checks()["diagrams"]
    assert [r["group_order"] for r in rep] == [2, 6]
    assert all(r["opposite_colors"] for r in rep)
    assert all(r["gamma_matches_expected"] and r["group_matches_expected"] for r in rep)


@st.composite
def tagged_graphs(draw, n=6):
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=7))
    tags = draw(st.lists(st.sampled_from([dg.ALPHA, dg.BETA]), min_size=len(chosen), max_size=len(chosen)))
    return dg.GammaGraph(n, tuple((u, v, t) for (u, v), t in zip(chosen, tags)))


@given(tagged_graphs(), tagged_graphs(), st.permutations(list(range(6))))
def test_isomorphism_agrees_with_canonical_form(g, h, pi):
    assert g.is_isomorphic(g.relabel(pi))
    assert g.canonical_form() == g.relabel(pi).canonical_form()
    assert g.is_isomorphic(h) == (g.canonical_form() == h.canonical_form())
