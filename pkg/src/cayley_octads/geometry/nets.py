"""Nets of quadrics through point configurations, their base points and Hessians."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Sequence

from ..errors import (BadInput, Degenerate, DegenerateInput, MultiplePoint, NotOnBase,
                      NotZeroDimensional)
from . import linalg
from .points import Points, ProjPoint, as_points, coplanar_quadruples


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of the given degree, in descending lexicographic order."""
    out = [e for e in itertools.product(range(degree + 1), repeat=nvars) if sum(e) == degree]
    return tuple(sorted(out, reverse=True))


def monomial_value(exps: Sequence[int], point: Sequence) -> int | Fraction:
    v = 1
    for e, x in zip(exps, point):
        if e:
            v *= x**e
    return v


def poly_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


# -- quadrics -----------------------------------------------------------------

QUADRIC_MONOMIALS = tuple(itertools.combinations_with_replacement(range(4), 2))


@dataclass(frozen=True)
class QuadricForm:
    """Symmetric 4x4 matrix ``M`` of ``Q(x) = x^T M x``, scaled to coprime
    integers with first nonzero entry positive."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = [[linalg.to_fraction(x) for x in row] for row in self.matrix]
        if len(m) != 4 or any(len(r) != 4 for r in m):
            raise BadInput("quadric matrix must be 4x4")
        if any(m[i][j] != m[j][i] for i in range(4) for j in range(4)):
            raise BadInput("quadric matrix must be symmetric")
        try:
            flat = linalg.primitive([x for row in m for x in row])
        except ValueError:
            raise BadInput("zero quadric") from None
        object.__setattr__(self, "matrix", tuple(tuple(flat[4 * i: 4 * i + 4]) for i in range(4)))

    @classmethod
    def from_monomial_coefficients(cls, coeffs: Sequence) -> "QuadricForm":
        """Coefficients on ``x_i x_j`` (i <= j) in ``QUADRIC_MONOMIALS`` order."""
        m = [[Fraction(0)] * 4 for _ in range(4)]
        for (i, j), c in zip(QUADRIC_MONOMIALS, coeffs):
            c = linalg.to_fraction(c)
            if i == j:
                m[i][i] = c
            else:
                m[i][j] = m[j][i] = c / 2
        return cls(tuple(tuple(r) for r in m))

    def __call__(self, p: Sequence) -> int:
        x = p.coords if isinstance(p, ProjPoint) else p
        return sum(self.matrix[i][j] * x[i] * x[j] for i in range(4) for j in range(4))

    def bilinear(self, p: Sequence, q: Sequence) -> int:
        x = p.coords if isinstance(p, ProjPoint) else p
        y = q.coords if isinstance(q, ProjPoint) else q
        return sum(self.matrix[i][j] * x[i] * y[j] for i in range(4) for j in range(4))

    def polynomial(self) -> dict:
        out = {}
        for i in range(4):
            for j in range(4):
                c = self.matrix[i][j]
                if c:
                    e = [0] * 4
                    e[i] += 1
                    e[j] += 1
                    out[tuple(e)] = out.get(tuple(e), 0) + c
        return {e: c for e, c in out.items() if c}


def quadric_row(p: ProjPoint) -> list[int]:
    return [p.coords[i] * p.coords[j] for i, j in QUADRIC_MONOMIALS]


def evaluation_matrix(points: Points) -> list[list[int]]:
    return [quadric_row(p) for p in points]


@dataclass(frozen=True)
class NetOfQuadrics:
    generators: tuple[QuadricForm, QuadricForm, QuadricForm]

    def __post_init__(self):
        gens = tuple(g if isinstance(g, QuadricForm) else QuadricForm(g) for g in self.generators)
        if len(gens) != 3:
            raise BadInput("a net has exactly three generators")
        rows = [[g.matrix[i][j] for i, j in QUADRIC_MONOMIALS] for g in gens]
        if linalg.rank(rows) != 3:
            raise BadInput("net generators are linearly dependent")
        object.__setattr__(self, "generators", gens)

    def member(self, t: Sequence) -> list[list]:
        return [[sum(tk * g.matrix[i][j] for tk, g in zip(t, self.generators)) for j in range(4)] for i in range(4)]

    def contains(self, p: ProjPoint) -> bool:
        return all(g(p) == 0 for g in self.generators)


def net_through(points: Points) -> NetOfQuadrics:
    """The net of quadrics through 7 (or 8) points imposing 7 conditions."""
    pts = as_points(points)
    if len(pts) < 7:
        raise BadInput("need at least 7 points to determine a net")
    rows = evaluation_matrix(pts)
    r = linalg.rank(rows)
    if r != 7:
        raise DegenerateInput(f"the points impose {r} conditions on quadrics instead of 7")
    kernel = linalg.nullspace(rows)
    return NetOfQuadrics(tuple(QuadricForm.from_monomial_coefficients(v) for v in kernel))


# -- the eighth base point -----------------------------------------------------


def _ideal_rows(net: NetOfQuadrics, degree: int) -> list[list]:
    """Coefficient rows of ``S_{degree-2} * net`` in the degree-``degree`` monomial basis."""
    mons = monomials(4, degree)
    index = {e: k for k, e in enumerate(mons)}
    rows = []
    for g in net.generators:
        gp = g.polynomial()
        for m in monomials(4, degree - 2):
            prod = poly_mul(gp, {m: 1})
            row = [0] * len(mons)
            for e, c in prod.items():
                row[index[e]] = c
            rows.append(row)
    return rows


class _Quotient:
    """Degree-d part of S/I with coordinates on the non-pivot monomials."""

    def __init__(self, net: NetOfQuadrics, degree: int):
        self.monomials = monomials(4, degree)
        self.index = {e: k for k, e in enumerate(self.monomials)}
        red, pivots = linalg.rref(_ideal_rows(net, degree))
        self.rows = red
        self.pivots = pivots
        self.free = [k for k in range(len(self.monomials)) if k not in set(pivots)]

    @property
    def dim(self) -> int:
        return len(self.free)

    def coordinates(self, poly: dict) -> list[Fraction]:
        vec = [Fraction(0)] * len(self.monomials)
        for e, c in poly.items():
            vec[self.index[e]] += c
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if c:
                for k in self.free:
                    if row[k]:
                        vec[k] -= c * row[k]
        return [vec[k] for k in self.free]


def _linear(coeffs: Sequence[int]) -> dict:
    out = {}
    for k, c in enumerate(coeffs):
        if c:
            e = [0] * 4
            e[k] = 1
            out[tuple(e)] = c
    return out


def complete_octad(points: Points, rng: random.Random | None = None, attempts: int = 5) -> ProjPoint:
    """Eighth base point of the net through 7 given points.

    Multiplication by linear forms on the 8-dimensional quotient ``S_3/I_3``
    has eigenvalues ``m(x)/l(x)`` over the base points ``x``; subtracting the
    7 known eigenvalues from the (rational) trace gives the missing one.
    """
    pts = as_points(points)
    if len(pts) != 7:
        raise BadInput(f"complete_octad needs exactly 7 points, got {len(pts)}")
    if len(set(pts)) != 7:
        raise DegenerateInput("repeated points among the 7 given")
    net = net_through(pts)
    q3 = _Quotient(net, 3)
    q4 = _Quotient(net, 4)
    if q3.dim != 8 or q4.dim != 8:
        raise NotZeroDimensional(f"quotient dimensions ({q3.dim}, {q4.dim}) differ from 8: base locus is not 8 points")
    basis3 = [q3.monomials[k] for k in q3.free]

    def mult_matrix(lin: dict) -> list[list[Fraction]]:
        cols = [q4.coordinates(poly_mul(lin, {b: 1})) for b in basis3]
        return [[cols[j][i] for j in range(8)] for i in range(8)]

    rng = rng or random.Random(8)
    for _ in range(attempts):
        ell = [rng.randint(-7, 7) for _ in range(4)]
        values = [sum(a * x for a, x in zip(ell, p.coords)) for p in pts]
        if any(v == 0 for v in values):
            continue
        a_ell = mult_matrix(_linear(ell))
        if linalg.rank(a_ell) < 8:
            continue  # ell vanishes at the unknown point
        a_inv = linalg.inverse(a_ell)
        coords = []
        for k in range(4):
            e = [0] * 4
            e[k] = 1
            a_k = mult_matrix(_linear(e))
            trace = sum(sum(a_inv[i][j] * a_k[j][i] for j in range(8)) for i in range(8))
            known = sum(Fraction(p.coords[k], v) for p, v in zip(pts, values))
            coords.append(trace - known)
        if not any(coords):
            continue
        y = ProjPoint(tuple(coords))
        if not net.contains(y):
            raise NotZeroDimensional("recovered point is not a base point of the net")
        if y in pts:
            raise MultiplePoint(f"the eighth base point coincides with {y}")
        return y
    raise NotZeroDimensional("no separating linear form found")


# -- Hessian quartic ------------------------------------------------------------

QUARTIC_MONOMIALS = monomials(3, 4)


@dataclass(frozen=True)
class QuarticForm:
    """Ternary quartic; ``coeffs`` follow ``QUARTIC_MONOMIALS`` (descending lex)."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(linalg.to_fraction(x) for x in self.coeffs)
        if len(c) != 15:
            raise BadInput("a ternary quartic has 15 coefficients")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_dict(cls, poly: dict) -> "QuarticForm":
        for e in poly:
            if sum(e) != 4 or len(e) != 3:
                raise BadInput(f"not a ternary quartic monomial: {e}")
        return cls(tuple(poly.get(e, 0) for e in QUARTIC_MONOMIALS))

    @classmethod
    def parse(cls, text: str) -> "QuarticForm":
        """Parse an expression in ``t0, t1, t2``, e.g. ``"t0^4 + t1^4 - t2^4"``."""
        import sympy

        t = sympy.symbols("t0 t1 t2")
        expr = sympy.sympify(text.replace("^", "**"), locals=dict(zip(("t0", "t1", "t2"), t)))
        poly = sympy.Poly(sympy.expand(expr), *t)
        terms = {}
        for e, c in poly.terms():
            terms[tuple(e)] = Fraction(int(c.p), int(c.q))
        return cls.from_dict(terms)

    def as_dict(self) -> dict:
        return {e: c for e, c in zip(QUARTIC_MONOMIALS, self.coeffs) if c}

    def __call__(self, t: Sequence) -> Fraction:
        return sum(c * monomial_value(e, t) for e, c in zip(QUARTIC_MONOMIALS, self.coeffs) if c)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def canonical(self) -> tuple[int, ...]:
        return linalg.primitive(self.coeffs)

    def integer_coefficients(self) -> tuple[int, ...]:
        if any(c.denominator != 1 for c in self.coeffs):
            return self.canonical()
        return tuple(int(c) for c in self.coeffs)

    def __str__(self):
        terms = []
        for e, c in zip(QUARTIC_MONOMIALS, self.coeffs):
            if not c:
                continue
            mon = "*".join(f"t{k}" + (f"^{p}" if p > 1 else "") for k, p in enumerate(e) if p)
            terms.append(f"{c}*{mon}")
        return " + ".join(terms) if terms else "0"


def hessian(net: NetOfQuadrics) -> QuarticForm:
    """``det(t0 M0 + t1 M1 + t2 M2)`` by expansion over the 24 permutations."""
    return pencil_determinant([g.matrix for g in net.generators])


def pencil_determinant(matrices: Sequence) -> QuarticForm:
    entries = [[{}] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            lin = {}
            for k, m in enumerate(matrices):
                if m[i][j]:
                    e = [0, 0, 0]
                    e[k] = 1
                    lin[tuple(e)] = m[i][j]
            entries[i][j] = lin
    total: dict = {}
    for perm in itertools.permutations(range(4)):
        prod = {(0, 0, 0): _perm_sign(perm)}
        for i in range(4):
            prod = poly_mul(prod, entries[i][perm[i]])
            if not prod:
                break
        for e, c in prod.items():
            total[e] = total.get(e, 0) + c
    return QuarticForm.from_dict({e: c for e, c in total.items() if c})


def conditioned_generators(net: NetOfQuadrics, bits: int = 40) -> list[list[list[Fraction]]]:
    """Another basis of the net, orthogonal for the Frobenius product and of
    roughly unit length (rational, to ``bits`` binary digits).

    The Hessian in this basis differs from ``hessian(net)`` by an invertible
    linear substitution, so its real topology is the same, but it is far
    better spread over the plane for grid sampling.
    """
    vecs = [[Fraction(x) for row in g.matrix for x in row] for g in net.generators]
    ortho: list = []
    for v in vecs:
        for u in ortho:
            c = sum(a * b for a, b in zip(v, u)) / sum(a * a for a in u)
            v = [a - c * b for a, b in zip(v, u)]
        ortho.append(v)
    out = []
    for v in ortho:
        norm2 = sum(a * a for a in v)
        scale = Fraction(isqrt(int(norm2 * 4**bits)) or 1, 2**bits)
        out.append([[v[4 * i + j] / scale for j in range(4)] for i in range(4)])
    return out


def conditioned_hessian(net: NetOfQuadrics) -> QuarticForm:
    return pencil_determinant(conditioned_generators(net))


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


# principal lattice of order 4: unisolvent for ternary quartics
INTERPOLATION_NODES = tuple(e for e in QUARTIC_MONOMIALS)


def hessian_by_interpolation(net: NetOfQuadrics) -> QuarticForm:
    """Same quartic from exact determinants at 15 nodes and an exact linear solve."""
    rows = [[monomial_value(e, t) for e in QUARTIC_MONOMIALS] for t in INTERPOLATION_NODES]
    values = [linalg.det(net.member(t)) for t in INTERPOLATION_NODES]
    return QuarticForm(tuple(linalg.solve(rows, values)))


# -- bitangent pencils ---------------------------------------------------------


def bitangent_pencil(net: NetOfQuadrics, p: ProjPoint, q: ProjPoint) -> tuple[int, int, int]:
    """Coefficients of the line ``{t : Q_t vanishes on the line pq}`` in the net plane."""
    if p == q:
        raise BadInput("a chord needs two distinct points")
    for x in (p, q):
        if not net.contains(x):
            raise NotOnBase(f"{x} is not a base point of the net")
    lam = [g.bilinear(p, q) for g in net.generators]
    if not any(lam):
        raise Degenerate("every quadric of the net contains the chord")
    return linalg.primitive(lam)


def all_bitangent_pencils(points: Points, net: NetOfQuadrics | None = None) -> dict:
    pts = as_points(points)
    net = net or net_through(pts)
    return {(i, j): bitangent_pencil(net, pts[i], pts[j]) for i, j in itertools.combinations(range(len(pts)), 2)}


# -- verification -------------------------------------------------------------

REGULAR = "regular-candidate"
WALL = "4-collision-wall"
INVALID = "invalid"


@dataclass
class OctadReport:
    distinct: bool
    net_rank: int
    coplanar_quadruples: list
    m_octad: bool = True
    classification: str = INVALID
    notes: list = field(default_factory=list)

    @property
    def net_condition(self) -> bool:
        return self.net_rank == 7

    def as_dict(self) -> dict:
        return {
            "classification": self.classification,
            "distinct": self.distinct,
            "net_rank": self.net_rank,
            "net_condition": self.net_condition,
            "coplanar_quadruples": [list(q) for q in self.coplanar_quadruples],
            "m_octad": self.m_octad,
            "notes": list(self.notes),
        }


def verify_octad(points: Points) -> OctadReport:
    """Exact point-level checks of an 8-point configuration.

    Nonsingularity of the Hessian quartic is not certified, and a
    positive-dimensional base locus is not excluded by these checks.
    """
    pts = as_points(points)
    if len(pts) != 8:
        raise BadInput(f"an octad has 8 points, got {len(pts)}")
    distinct = len(set(pts)) == 8
    r = linalg.rank(evaluation_matrix(pts))
    quads = coplanar_quadruples(pts) if distinct else []
    report = OctadReport(distinct, r, quads)
    if distinct and r == 7:
        if not quads:
            report.classification = REGULAR
        elif len(quads) == 2 and set(quads[0]).isdisjoint(quads[1]):
            report.classification = WALL
    if not distinct:
        report.notes.append("repeated points")
    if r != 7:
        report.notes.append(f"points impose {r} conditions on quadrics (octads impose 7)")
    report.notes.append("Hessian nonsingularity is not certified")
    return report
