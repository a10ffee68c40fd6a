"""Heuristic count of the connected components of a real plane quartic in RP^2.

Signs of ``f`` are exact (integer arithmetic at integer grid points), so the
only approximation is the grid itself: components smaller than a cell, or two
branches closer than a cell, are not resolved.  The answer is therefore not a
certified topology; agreement between two consecutive resolutions is reported
as ``stabilized``.

Grid: for chart ``k`` the points ``t`` with ``t_k = N = 2**depth`` and the two
other coordinates in ``-N, -N+2, ..., N``.  The three charts cover RP^2 and
share their boundary grid points, so crossing edges keyed by canonical
projective triples glue the charts exactly.  Saddle cells (four sign changes)
are resolved on an exact ``2**SADDLE_REFINE`` subgrid of the cell, which
separates branches passing closer than a cell.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from ..errors import BadInput
from .nets import QUARTIC_MONOMIALS, QuarticForm

DEFAULT_DEPTH = 9
SADDLE_REFINE = 5


def _canonical(t: tuple[int, int, int]) -> tuple[int, int, int]:
    g = gcd(*t)
    t = tuple(x // g for x in t)
    for x in t:
        if x:
            return t if x > 0 else tuple(-y for y in t)
    raise BadInput("zero point")


def chart_signs(coeffs: tuple[int, ...], k: int, n: int) -> np.ndarray:
    """Boolean array ``S[a, b] = f(...) > 0`` for chart ``k``, where the free
    coordinates ``(i, j)`` (in increasing index order) are ``-n + 2a`` and ``-n + 2b``."""
    i, j = [m for m in range(3) if m != k]
    size = n + 1
    grid = np.array([-n + 2 * a for a in range(size)], dtype=object)
    powers = [np.array([1] * size, dtype=object)]
    for _ in range(4):
        powers.append(powers[-1] * grid)

    def values_at(b: int) -> np.ndarray:
        v = -n + 2 * b
        out = np.array([0] * size, dtype=object)
        for e, c in zip(QUARTIC_MONOMIALS, coeffs):
            if c:
                out = out + powers[e[i]] * (c * v ** e[j] * n ** e[k])
        return out

    # forward differences along b: f is a quartic in b on each row a
    diffs = [values_at(b) for b in range(5)]
    for level in range(1, 5):
        for m in range(4, level - 1, -1):
            diffs[m] = diffs[m] - diffs[m - 1]
    signs = np.zeros((size, size), dtype=bool)
    d0, d1, d2, d3, d4 = diffs
    for b in range(size):
        signs[:, b] = d0 > 0
        d0 = d0 + d1
        d1 = d1 + d2
        d2 = d2 + d3
        d3 = d3 + d4
    return signs


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry

    def count(self) -> int:
        return len({self.find(x) for x in self.parent})


def _evaluate(coeffs, t) -> int:
    return sum(c * t[0] ** e[0] * t[1] ** e[1] * t[2] ** e[2] for e, c in zip(QUARTIC_MONOMIALS, coeffs) if c)


def _positive_corners_joined(coeffs, k: int, n: int, a: int, b: int, refine: int = SADDLE_REFINE) -> bool:
    """Whether the two positive corners of a saddle cell are joined through
    the positive region, sampled exactly on a ``2**refine`` subgrid.

    Positive sub-cells connect along sides only and negative ones also along
    diagonals, so exactly one of the two corner pairs is connected.
    """
    m = 2**refine
    i, j = [x for x in range(3) if x != k]
    t = [0, 0, 0]
    t[k] = n * m
    pos = np.zeros((m + 1, m + 1), dtype=bool)
    for u in range(m + 1):
        t[i] = (-n + 2 * a) * m + 2 * u
        for v in range(m + 1):
            t[j] = (-n + 2 * b) * m + 2 * v
            pos[u, v] = _evaluate(coeffs, t) > 0
    start, goal = ((0, 0), (m, m)) if pos[0, 0] else ((m, 0), (0, m))
    seen = {start}
    stack = [start]
    while stack:
        u, v = stack.pop()
        if (u, v) == goal:
            return True
        for nu, nv in ((u + 1, v), (u - 1, v), (u, v + 1), (u, v - 1)):
            if 0 <= nu <= m and 0 <= nv <= m and pos[nu, nv] and (nu, nv) not in seen:
                seen.add((nu, nv))
                stack.append((nu, nv))
    return False


def _point(k: int, n: int, a: int, b: int) -> tuple[int, int, int]:
    i, j = [m for m in range(3) if m != k]
    t = [0, 0, 0]
    t[k], t[i], t[j] = n, -n + 2 * a, -n + 2 * b
    return _canonical(tuple(t))


def component_count(f: QuarticForm, depth: int) -> int:
    if f.is_zero():
        raise BadInput("the zero form has no curve")
    if depth < 1:
        raise BadInput("depth must be positive")
    coeffs = f.canonical()
    n = 2**depth
    uf = _UnionFind()
    for k in range(3):
        s = chart_signs(coeffs, k, n)
        horiz = s[:, :-1] != s[:, 1:]  # edge (a,b)-(a,b+1)
        vert = s[:-1, :] != s[1:, :]  # edge (a,b)-(a+1,b)
        cells = horiz[:-1, :] | horiz[1:, :] | vert[:, :-1] | vert[:, 1:]
        pt = lambda a, b: _point(k, n, a, b)

        def key(p, q):
            return (p, q) if p <= q else (q, p)

        for a, b in zip(*np.nonzero(cells)):
            a, b = int(a), int(b)
            c00, c10, c01, c11 = pt(a, b), pt(a + 1, b), pt(a, b + 1), pt(a + 1, b + 1)
            edges = {}
            if vert[a, b]:
                edges["left"] = key(c00, c10)
            if horiz[a + 1, b]:
                edges["top"] = key(c10, c11)
            if vert[a, b + 1]:
                edges["right"] = key(c01, c11)
            if horiz[a, b]:
                edges["bottom"] = key(c00, c01)
            for e in edges.values():
                uf.find(e)
            if len(edges) == 2:
                uf.union(*edges.values())
            elif len(edges) == 4:
                # saddle: decided on a finer local grid; the pair of opposite
                # corners that is not connected gets cut off
                joined = _positive_corners_joined(coeffs, k, n, a, b)
                corners = {"00": (s[a, b], "left", "bottom"), "10": (s[a + 1, b], "left", "top"),
                           "01": (s[a, b + 1], "bottom", "right"), "11": (s[a + 1, b + 1], "top", "right")}
                for positive, e1, e2 in corners.values():
                    if positive != joined:
                        uf.union(edges[e1], edges[e2])
    return uf.count()


def count_ovals(f: QuarticForm, depth: int = DEFAULT_DEPTH) -> tuple[int, bool]:
    """Components of ``{f = 0}`` at resolution ``2**depth``, and whether the count
    agrees with the one at ``depth - 1``."""
    if depth < 2:
        raise BadInput("depth must be at least 2")
    count = component_count(f, depth)
    return count, component_count(f, depth - 1) == count


def count_until_stable(f: QuarticForm, depths=range(DEFAULT_DEPTH - 1, 11)) -> tuple[int, bool, int]:
    """Increase the depth until two consecutive counts agree; returns (count, stabilized, depth)."""
    previous = None
    count, depth = 0, 0
    for depth in depths:
        count = component_count(f, depth)
        if count == previous:
            return count, True, depth
        previous = count
    return count, False, depth
