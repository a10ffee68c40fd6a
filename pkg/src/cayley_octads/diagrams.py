"""Theta-diagrams of spin M-quartics and the combinatorics built on them.

A theta-diagram colors the 4 ovals and 6 bridges of an M-quartic by the
values of a quadratic function: white = 1, black = 0.  It is encoded by the
2x3 matrix of :class:`~cayley_octads.f2core.QuadraticFunction`.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import f2core
from .bipartitions import PhiMap, Permutation, build_phi, isometry_to_perm
from .errors import BadInput, MoveNotAllowed
from .f2core import BRIDGE_PAIRS, Isometry, QuadraticFunction

ALPHA = "alpha"
BETA = "beta"

EVEN_CLASSES = tuple((a, b) for a in (0, 2, 4) for b in (0, 3, 4) if (a, b) != (4, 3))
ODD_CLASSES = ((2, 4), (2, 3), (4, 3))

# display layout of the even classes: rows beta = 4, 3, 0; columns alpha = 0, 2, 4
TABLE_LAYOUT = (((0, 4), (2, 4), (4, 4)), ((0, 3), (2, 3)), ((0, 0), (2, 0), (4, 0)))

# the even exception as sometimes quoted; enumeration disagrees
STATED_EVEN_EXCEPTION = (2, 4)
DISCREPANCY_NOTE = (
    "(alpha,beta)=(2,4) is quoted in one place as the missing even class; "
    "the even representative matrices and the enumeration give {computed} instead "
    "((2,4) is realized by an even orbit and by an odd one)."
)


class ThetaDiagram(QuadraticFunction):
    """A quadratic function viewed as a coloring of ovals and bridges."""

    @property
    def oval_colors(self) -> tuple[int, ...]:
        return tuple(self.table[v] for v in f2core.OVALS)

    @property
    def bridge_colors(self) -> dict[tuple[int, int], int]:
        return {ij: self.table[v] for ij, v in f2core.BRIDGES.items()}

    @property
    def coloring(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return self.oval_colors, tuple(self.bridge_colors[ij] for ij in BRIDGE_PAIRS)

    @property
    def parity(self) -> int:
        return f2core.arf(self)

    @property
    def white_ovals(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.oval_colors) if c)

    @property
    def white_bridges(self) -> tuple[tuple[int, int], ...]:
        return tuple(ij for ij in BRIDGE_PAIRS if self.bridge_colors[ij])

    @classmethod
    def from_coloring(cls, ovals: Sequence[int], bridges: dict) -> "ThetaDiagram":
        """Matrix from a full coloring; raises if the coloring is not linear."""
        qa = [ovals[1], ovals[2], ovals[3]]
        qb = [bridges[(0, 1)], bridges[(0, 2)], bridges[(0, 3)]]
        d = cls((tuple(qa), tuple(qb)))
        if d.oval_colors != tuple(ovals) or d.bridge_colors != {ij: bridges[ij] for ij in BRIDGE_PAIRS}:
            raise BadInput("coloring is not induced by a quadratic function")
        return d


def diagram(bits: str | QuadraticFunction) -> ThetaDiagram:
    if isinstance(bits, QuadraticFunction):
        return ThetaDiagram(bits.matrix)
    return ThetaDiagram.from_bits(bits)


def all_diagrams() -> list[ThetaDiagram]:
    return [ThetaDiagram.from_values(f2core.coords(n)) for n in range(f2core.NVEC)]


@dataclass(frozen=True, order=True)
class ClassLabel:
    alpha: int
    beta: int
    parity: int
    sign: int | None = None

    @property
    def key(self) -> tuple[int, int]:
        return (self.alpha, self.beta)

    @property
    def name(self) -> str:
        base = f"O{self.alpha}{self.beta}"
        if self.sign is not None:
            base += "+" if self.sign > 0 else "-"
        if self.parity:
            base += " (odd)"
        return base

    def __str__(self):
        return self.name


def class_label(d: QuadraticFunction) -> ClassLabel:
    d = diagram(d)
    return ClassLabel(sum(d.oval_colors), sum(d.bridge_colors.values()), d.parity)


def check_s4(sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = tuple(int(i) for i in sigma)
    if sorted(sigma) != [0, 1, 2, 3]:
        raise BadInput(f"not a permutation of 0..3: {sigma}")
    return sigma


def oval_permutation_isometry(sigma: Sequence[int]) -> Isometry:
    """Automorphism of the model sending ``a_i -> a_sigma(i)`` and
    ``b_ij -> b_sigma(i)sigma(j)``."""
    s = check_s4(sigma)
    cols = [f2core.oval(s[i]) for i in (1, 2, 3)]
    cols += [f2core.bridge(s[0], s[i]) for i in (1, 2, 3)]
    return Isometry(cols)


def s4_apply(sigma: Sequence[int], d: QuadraticFunction) -> ThetaDiagram:
    s = check_s4(sigma)
    d = diagram(d)
    ovals = [0] * 4
    for i, c in enumerate(d.oval_colors):
        ovals[s[i]] = c
    bridges = {}
    for (i, j), c in d.bridge_colors.items():
        bridges[tuple(sorted((s[i], s[j])))] = c
    return ThetaDiagram.from_coloring(ovals, bridges)


S4 = tuple(itertools.permutations(range(4)))


@dataclass(frozen=True)
class Orbit:
    representative: ThetaDiagram
    members: tuple[ThetaDiagram, ...]
    label: ClassLabel

    @property
    def size(self) -> int:
        return len(self.members)


@lru_cache(maxsize=1)
def enumerate_orbits() -> tuple[Orbit, ...]:
    """S4-orbits on the 64 diagrams, even classes first, then by (alpha, beta)."""
    seen = set()
    orbits = []
    for d in all_diagrams():
        if d.bits in seen:
            continue
        members = {s4_apply(s, d).bits for s in S4}
        seen |= members
        ms = tuple(sorted((ThetaDiagram.from_bits(b) for b in members), key=lambda x: x.bits))
        orbits.append(Orbit(ms[0], ms, class_label(ms[0])))
    orbits.sort(key=lambda o: (o.label.parity, o.label.alpha, o.label.beta))
    return tuple(orbits)


def orbit_of(d: QuadraticFunction, orbits: Iterable[Orbit] | None = None) -> Orbit:
    d = diagram(d)
    for o in orbits or enumerate_orbits():
        if d in o.members:
            return o
    raise AssertionError("every diagram lies in an orbit")


def even_representative(key: tuple[int, int]) -> ThetaDiagram:
    for o in enumerate_orbits():
        if o.label.parity == 0 and o.label.key == tuple(key):
            return o.representative
    raise BadInput(f"no even class with (alpha, beta) = {key}")


def computed_even_exception() -> list[tuple[int, int]]:
    present = {o.label.key for o in enumerate_orbits() if o.label.parity == 0}
    grid = {(a, b) for a in (0, 2, 4) for b in (0, 3, 4)}
    return sorted(grid - present)


def discrepancy_warning() -> str:
    return DISCREPANCY_NOTE.format(computed=", ".join(f"({a},{b})" for a, b in computed_even_exception()))


# -- wall-crossing moves ------------------------------------------------------


@dataclass(frozen=True)
class BlackEdge:
    i: int
    j: int

    @property
    def vanishing_class(self) -> int:
        return f2core.bridge(self.i, self.j)

    def __str__(self):
        return f"edge{min(self.i, self.j)}{max(self.i, self.j)}"


@dataclass(frozen=True)
class BlackVertex:
    i: int

    @property
    def vanishing_class(self) -> int:
        return f2core.oval(self.i)

    def __str__(self):
        return f"vertex{self.i}"


Move = BlackEdge | BlackVertex
ALL_MOVES = tuple(BlackEdge(i, j) for i, j in BRIDGE_PAIRS) + tuple(BlackVertex(i) for i in range(4))


def apply_move(d: QuadraticFunction, move: Move) -> ThetaDiagram:
    """Cross the wall of a black oval or bridge: ``theta -> theta + v*``."""
    d = diagram(d)
    v = move.vanishing_class
    if d.table[v]:
        raise MoveNotAllowed(f"{move} is white in {d.bits}; no interior wall there")
    return d.shifted(v)


def admissible_moves(d: QuadraticFunction) -> list[Move]:
    d = diagram(d)
    return [m for m in ALL_MOVES if not d.table[m.vanishing_class]]


@dataclass(frozen=True)
class AdjacencyGraph:
    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    @property
    def loops(self) -> tuple[tuple[int, int], ...]:
        return tuple(u for u, v in self.edges if u == v)

    @property
    def proper_edges(self) -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]:
        return tuple(e for e in self.edges if e[0] != e[1])

    def neighbours(self, key) -> set[tuple[int, int]]:
        out = set()
        for u, v in self.edges:
            if u == key:
                out.add(v)
            if v == key:
                out.add(u)
        return out


def adjacency_graph() -> AdjacencyGraph:
    edges = set()
    for key in EVEN_CLASSES:
        d = even_representative(key)
        for m in admissible_moves(d):
            k2 = class_label(apply_move(d, m)).key
            edges.add(tuple(sorted((key, k2))))
    return AdjacencyGraph(EVEN_CLASSES, tuple(sorted(edges)))


# -- collision graphs -----------------------------------------------------------


@dataclass(frozen=True)
class GammaGraph:
    n_vertices: int
    edges: tuple[tuple[int, int, str], ...]

    def __post_init__(self):
        norm = []
        for u, v, tag in self.edges:
            if u == v:
                raise BadInput("loops are not allowed")
            if tag not in (ALPHA, BETA):
                raise BadInput(f"bad edge tag {tag!r}")
            norm.append((min(u, v), max(u, v), tag))
        if len({(u, v) for u, v, _ in norm}) != len(norm):
            raise BadInput("multi-edges are not allowed")
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    def count(self, tag: str) -> int:
        return sum(1 for e in self.edges if e[2] == tag)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e[:2])

    def is_matching(self, tag: str) -> bool:
        seen = Counter()
        for u, v, t in self.edges:
            if t == tag:
                seen[u] += 1
                seen[v] += 1
        return all(c <= 1 for c in seen.values())

    def relabel(self, pi: Sequence[int]) -> "GammaGraph":
        return GammaGraph(self.n_vertices, tuple((pi[u], pi[v], t) for u, v, t in self.edges))

    def preserved_by(self, pi: Sequence[int]) -> bool:
        return self.relabel(pi).edges == self.edges

    def components(self) -> list[tuple[int, ...]]:
        parent = list(range(self.n_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v, _ in self.edges:
            parent[find(u)] = find(v)
        groups = defaultdict(list)
        for x in range(self.n_vertices):
            groups[find(x)].append(x)
        return sorted(tuple(g) for g in groups.values())

    def _refined_colors(self) -> list[int]:
        """Isomorphism-invariant vertex colors by iterated neighbourhood refinement."""
        inc = defaultdict(list)
        for u, v, t in self.edges:
            inc[u].append((v, t))
            inc[v].append((u, t))
        colors = [(tuple(sorted(t for _, t in inc[x])),) for x in range(self.n_vertices)]
        for _ in range(self.n_vertices):
            sigs = [(colors[x], tuple(sorted((t, colors[y]) for y, t in inc[x]))) for x in range(self.n_vertices)]
            ranks = {s: r for r, s in enumerate(sorted(set(sigs)))}
            new = [(ranks[s],) for s in sigs]
            if len(set(new)) == len(set(colors)):
                colors = new
                break
            colors = new
        return [c[0] for c in colors]

    def canonical_form(self) -> tuple:
        """Lexicographically least relabeled edge list among relabelings that
        respect the refined color classes (brute force within classes)."""
        colors = self._refined_colors()
        classes = defaultdict(list)
        for x, c in enumerate(colors):
            classes[c].append(x)
        order = sorted(classes)
        slots = []
        start = 0
        for c in order:
            slots.append((classes[c], list(range(start, start + len(classes[c])))))
            start += len(classes[c])
        best = None
        for choice in itertools.product(*(itertools.permutations(members) for members, _ in slots)):
            pi = [0] * self.n_vertices
            for (members, targets), perm in zip(slots, choice):
                for src, dst in zip(perm, targets):
                    pi[src] = dst
            form = tuple(sorted((min(pi[u], pi[v]), max(pi[u], pi[v]), t) for u, v, t in self.edges))
            if best is None or form < best:
                best = form
        return (self.n_vertices, tuple(colors.count(c) for c in order), best)

    def _tag_matrix(self) -> list[list[str | None]]:
        m: list[list[str | None]] = [[None] * self.n_vertices for _ in range(self.n_vertices)]
        for u, v, t in self.edges:
            m[u][v] = m[v][u] = t
        return m

    def find_isomorphism(self, other: "GammaGraph") -> tuple[int, ...] | None:
        """A tag-preserving vertex bijection onto ``other``, by backtracking
        over vertices with matching refined colors."""
        n = self.n_vertices
        if n != other.n_vertices or sorted(t for *_, t in self.edges) != sorted(t for *_, t in other.edges):
            return None
        ca, cb = self._joint_colors(other)
        if sorted(ca) != sorted(cb):
            return None
        ma, mb = self._tag_matrix(), other._tag_matrix()
        order = sorted(range(n), key=lambda x: (-self.degree(x), x))
        image = [-1] * n
        used = [False] * n

        def rec(k):
            if k == n:
                return True
            x = order[k]
            for y in range(n):
                if used[y] or cb[y] != ca[x]:
                    continue
                if any(ma[x][order[j]] != mb[y][image[order[j]]] for j in range(k)):
                    continue
                image[x], used[y] = y, True
                if rec(k + 1):
                    return True
                used[y] = False
            return False

        return tuple(image) if rec(0) else None

    def _joint_colors(self, other: "GammaGraph") -> tuple[list, list]:
        # refine both graphs with a shared palette so colors are comparable
        union = GammaGraph(self.n_vertices + other.n_vertices,
                           self.edges + tuple((u + self.n_vertices, v + self.n_vertices, t) for u, v, t in other.edges))
        colors = union._refined_colors()
        return colors[:self.n_vertices], colors[self.n_vertices:]

    def is_isomorphic(self, other: "GammaGraph") -> bool:
        return self.find_isomorphism(other) is not None


def _phi_for(d: ThetaDiagram, phi: PhiMap | None) -> PhiMap:
    if phi is None:
        return build_phi(d)
    if phi.q.matrix != d.matrix:
        raise BadInput("the identification was built for a different quadratic function")
    return phi


def _require_even(d: ThetaDiagram):
    if d.parity:
        raise BadInput(f"diagram {d.bits} is odd; octads correspond to even diagrams")


def gamma_graph(d: QuadraticFunction, phi: PhiMap | None = None) -> GammaGraph:
    d = diagram(d)
    _require_even(d)
    phi = _phi_for(d, phi)
    edges = []
    for i in d.white_ovals:
        edges.append((*phi.inverse(f2core.oval(i)).part, ALPHA))
    for ij in d.white_bridges:
        edges.append((*phi.inverse(f2core.bridge(*ij)).part, BETA))
    return GammaGraph(8, tuple(edges))


def graph_from_incidence(items: Sequence[tuple[str, str]], incident, n_vertices: int) -> GammaGraph | None:
    """Realize tagged items as edges of a graph on ``n_vertices`` vertices so
    that two edges share a vertex exactly when ``incident(x, y)`` holds.

    ``items`` are ``(name, tag)`` pairs.  Returns ``None`` if impossible.
    This is independent of any homology identification.
    """
    pairs = list(itertools.combinations(range(n_vertices), 2))
    chosen: list[tuple[int, int]] = []

    def rec(k):
        if k == len(items):
            return True
        for p in pairs:
            if p in chosen:
                continue
            if chosen and p[0] > max(max(c) for c in chosen) + 1:
                break  # vertex labels introduced in order (symmetry breaking)
            ok = True
            for j, c in enumerate(chosen):
                if bool(set(p) & set(c)) != bool(incident(items[j][0], items[k][0])):
                    ok = False
                    break
            if ok:
                chosen.append(p)
                if rec(k + 1):
                    return True
                chosen.pop()
        return False

    if not rec(0):
        return None
    return GammaGraph(n_vertices, tuple((u, v, items[k][1]) for k, (u, v) in enumerate(chosen)))


def gamma_graph_from_diagram(d: QuadraticFunction) -> GammaGraph:
    """Collision graph from oval/bridge incidence alone (white items only)."""
    d = diagram(d)
    items = [(f"a{i}", ALPHA) for i in d.white_ovals] + [(f"b{i}{j}", BETA) for i, j in d.white_bridges]

    def incident(x, y):
        return f2core.DOT[_named_class(x)][_named_class(y)] == 1

    g = graph_from_incidence(items, incident, 8)
    if g is None:
        raise AssertionError("incidence data is not realizable as a graph")
    return g


def _named_class(name: str) -> int:
    if name[0] == "a":
        return f2core.oval(int(name[1]))
    return f2core.bridge(int(name[1]), int(name[2]))


# reference collision graphs; vertices sit around an octagon: T1 T2 R1 R2 B2 B1 L2 L1
T1, T2, R1, R2, B2, B1, L2, L1 = range(8)
REFERENCE_GAMMA = {
    (0, 4): ((L1, T1, BETA), (T2, R1, BETA), (L2, B1, BETA), (R2, B2, BETA)),
    (2, 4): ((T1, T2, ALPHA), (L1, T1, BETA), (R1, T2, BETA), (L2, B1, BETA), (R2, B2, BETA), (B1, B2, ALPHA)),
    (4, 4): (
        (T1, T2, ALPHA), (L1, T1, BETA), (R1, T2, BETA), (L1, L2, ALPHA),
        (R1, R2, ALPHA), (L2, B1, BETA), (R2, B2, BETA), (B1, B2, ALPHA),
    ),
    (0, 3): ((T1, L1, BETA), (T2, R1, BETA), (L2, B1, BETA)),
    (2, 3): ((L1, T1, BETA), (T2, R1, BETA), (R1, R2, ALPHA), (L2, B1, BETA), (B1, B2, ALPHA)),
    (0, 0): (),
    (2, 0): ((T1, T2, ALPHA), (B1, B2, ALPHA)),
    (4, 0): ((T1, T2, ALPHA), (L1, L2, ALPHA), (R1, R2, ALPHA), (B1, B2, ALPHA)),
}
REFERENCE_GROUPS = {(0, 4): "D4", (2, 4): "Z2xZ2", (4, 4): "D4", (0, 3): "S3", (2, 3): "Z2",
          (0, 0): "S4", (2, 0): "Z2xZ2", (4, 0): "S4"}
REFERENCE_ORBITS = {(0, 4): 1, (2, 4): 2, (4, 4): 1, (0, 3): 2, (2, 3): 4, (0, 0): 1, (2, 0): 2, (4, 0): 1}


def reference_gamma(key: tuple[int, int]) -> GammaGraph:
    return GammaGraph(8, REFERENCE_GAMMA[tuple(key)])


# -- monodromy ---------------------------------------------------------------


def _perm_order(p: Sequence[int]) -> int:
    ident = tuple(range(len(p)))
    q = tuple(p)
    k = 1
    while q != ident:
        q = tuple(p[x] for x in q)
        k += 1
    return k


def group_name(elements: Sequence[Sequence[int]]) -> str:
    n = len(elements)
    orders = Counter(_perm_order(p) for p in elements)
    if n == 24:
        return "S4"
    if n == 6:
        return "S3"
    if n == 8 and orders[4] == 2:
        return "D4"
    if n == 4 and orders[2] == 3:
        return "Z2xZ2"
    if n == 4 and orders[4] == 2:
        return "Z4"
    if n == 3:
        return "Z3"
    if n == 2:
        return "Z2"
    if n == 1:
        return "trivial"
    return f"order{n}"


@dataclass(frozen=True)
class MonodromyGroup:
    elements: tuple[tuple[int, ...], ...]
    lifted: tuple[Permutation, ...]
    name: str

    @property
    def order(self) -> int:
        return len(self.elements)


def diagram_symmetries(d: QuadraticFunction) -> list[tuple[int, ...]]:
    d = diagram(d)
    return [s for s in S4 if s4_apply(s, d).matrix == d.matrix]


def monodromy_group(d: QuadraticFunction, phi: PhiMap | None = None) -> MonodromyGroup:
    d = diagram(d)
    _require_even(d)
    phi = _phi_for(d, phi)
    elements = diagram_symmetries(d)
    lifted = tuple(isometry_to_perm(oval_permutation_isometry(s), phi) for s in elements)
    return MonodromyGroup(tuple(elements), lifted, group_name(elements))


def count_orbits(perms: Iterable[Sequence[int]], n: int) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for x in range(n):
            parent[find(x)] = find(p[x])
    return len({find(x) for x in range(n)})


def vertex_orbits(d: QuadraticFunction, phi: PhiMap | None = None) -> int:
    return count_orbits(monodromy_group(d, phi).lifted, 8)


# -- (M-1) fixed data ---------------------------------------------------------


@dataclass(frozen=True)
class M1Diagram:
    """Theta-diagram of an even spin (M-1)-quartic: 3 ovals, bridges b_ij^+/-."""

    name: str
    ovals: tuple[int, int, int]  # colors of a1, a2, a3
    bridges: dict  # (i, j, sign) -> color, 1 <= i < j <= 3, sign in "+-"

    def symmetries(self) -> list[tuple[int, ...]]:
        out = []
        for s in itertools.permutations(range(3)):
            if any(self.ovals[s[i]] != self.ovals[i] for i in range(3)):
                continue
            ok = True
            for (i, j, sg), c in self.bridges.items():
                a, b = sorted((s[i - 1] + 1, s[j - 1] + 1))
                if self.bridges[(a, b, sg)] != c:
                    ok = False
            if ok:
                out.append(s)
        return out

    def opposite_colors(self) -> bool:
        return all(self.bridges[(i, j, "+")] != self.bridges[(i, j, "-")] for i, j in itertools.combinations((1, 2, 3), 2))

    def gamma_graph(self) -> GammaGraph | None:
        items = [(f"a{i + 1}", ALPHA) for i in range(3) if self.ovals[i]]
        items += [(f"b{i}{j}{s}", BETA) for (i, j, s), c in sorted(self.bridges.items()) if c]

        def incident(x, y):
            if x[0] == y[0]:
                return False  # ovals pairwise disjoint; same-sign bridges taken orthogonal
            oval_name, bridge_name = (x, y) if x[0] == "a" else (y, x)
            return oval_name[1] in bridge_name[1:3]

        return graph_from_incidence(items, incident, 6)


_SHORT_WHITE = {(i, j, s): int(s == "+") for i, j in itertools.combinations((1, 2, 3), 2) for s in "+-"}
M1_DIAGRAMS = (
    M1Diagram("one white oval", (1, 0, 0), dict(_SHORT_WHITE)),
    M1Diagram("three white ovals", (1, 1, 1), dict(_SHORT_WHITE)),
)

# expected collision graphs on 6 vertices, labeled T1 T2 R B2 B1 L
_M1_T1, _M1_T2, _M1_R, _M1_B2, _M1_B1, _M1_L = range(6)
M1_EXPECTED_GRAPHS = (
    GammaGraph(6, ((_M1_T1, _M1_T2, ALPHA), (_M1_L, _M1_T1, BETA), (_M1_R, _M1_T2, BETA), (_M1_B1, _M1_B2, BETA))),
    GammaGraph(6, (
        (_M1_T1, _M1_T2, ALPHA), (_M1_L, _M1_T1, BETA), (_M1_L, _M1_B1, ALPHA),
        (_M1_R, _M1_T2, BETA), (_M1_R, _M1_B2, ALPHA), (_M1_B1, _M1_B2, BETA),
    )),
)
M1_EXPECTED_GROUPS = ("Z2", "S3")


def m1_diagram_checks() -> dict:
    report = []
    for diag, exp_graph, exp_group in zip(M1_DIAGRAMS, M1_EXPECTED_GRAPHS, M1_EXPECTED_GROUPS):
        syms = diag.symmetries()
        g = diag.gamma_graph()
        name = {1: "trivial", 2: "Z2", 3: "Z3", 6: "S3"}[len(syms)]
        report.append({
            "diagram": diag.name,
            "opposite_colors": diag.opposite_colors(),
            "group_order": len(syms),
            "group": name,
            "group_matches_expected": name == exp_group,
            "gamma_edges": [list(e) for e in g.edges] if g else None,
            "gamma_matches_expected": bool(g and g.is_isomorphic(exp_graph)),
        })
    return {"diagrams": report}
