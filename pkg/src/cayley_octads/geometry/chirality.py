"""Linking-number signs of skew lines spanned by point configurations in RP^3.

The sign of ``det[p_a, q_a, p_b, q_b]`` is the (normalized) linking number of
two skew lines ``p_a q_a`` and ``p_b q_b``.  A single such sign depends on the
chosen lifts; a product over three lines does not.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from ..errors import BadInput, Inconsistent, NotRegular, NotSimple, NotSkew
from .linalg import det4
from .points import Points, ProjPoint, as_points

Line = tuple[ProjPoint, ProjPoint]


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def link_sign(l1: Line, l2: Line) -> int:
    """Lift-dependent sign of a pair of lines; 0 if they meet."""
    return _sign(det4((l1[0].coords, l1[1].coords, l2[0].coords, l2[1].coords)))


def triple_link(l1: Line, l2: Line, l3: Line) -> int:
    s = 1
    for a, b in ((l1, l2), (l1, l3), (l2, l3)):
        v = link_sign(a, b)
        if v == 0:
            raise NotSkew(f"lines {a[0]}{a[1]} and {b[0]}{b[1]} meet")
        s *= v
    return s


def perfect_matchings(items: Sequence) -> list[list[tuple]]:
    items = list(items)
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    out = []
    for k, partner in enumerate(rest):
        for m in perfect_matchings(rest[:k] + rest[k + 1:]):
            out.append([(first, partner)] + m)
    return out


MATCHINGS6 = tuple(tuple(m) for m in perfect_matchings(range(6)))  # 15 of them


def _check_simple(pts: list[ProjPoint]) -> None:
    for quad in itertools.combinations(range(len(pts)), 4):
        if det4(tuple(pts[i].coords for i in quad)) == 0:
            raise NotSimple(f"points {quad} are coplanar")


def _sign6(pts: list[ProjPoint]) -> int:
    s = 1
    for m in MATCHINGS6:
        lines = [(pts[i], pts[j]) for i, j in m]
        s *= triple_link(*lines)
    return s


def sign6(points: Points) -> int:
    pts = as_points(points)
    if len(pts) != 6:
        raise BadInput(f"sign6 needs 6 points, got {len(pts)}")
    _check_simple(pts)
    return _sign6(pts)


def _sign7(pts: list[ProjPoint]) -> int:
    s = 1
    for k in range(7):
        s *= _sign6(pts[:k] + pts[k + 1:])
    return s


def sign7(points: Points) -> int:
    pts = as_points(points)
    if len(pts) != 7:
        raise BadInput(f"sign7 needs 7 points, got {len(pts)}")
    _check_simple(pts)
    return _sign7(pts)


def residual_signs(points: Points) -> list[int]:
    """``sign7`` of each 7-point residual of a simple octad, no consistency check."""
    pts = as_points(points)
    if len(pts) != 8:
        raise BadInput(f"an octad has 8 points, got {len(pts)}")
    _check_simple(pts)
    return [_sign7(pts[:k] + pts[k + 1:]) for k in range(8)]


def octad_signs(points: Points) -> tuple[int, list[int]]:
    from .nets import REGULAR, verify_octad

    report = verify_octad(points)
    if report.classification != REGULAR:
        raise NotRegular(f"octad is {report.classification}, chirality needs a regular octad")
    signs = residual_signs(points)
    if len(set(signs)) != 1:
        raise Inconsistent(f"residual signs disagree: {signs}")
    return signs[0], signs


def chirality(points: Points) -> dict:
    """Dispatch on the number of points (6, 7 or 8)."""
    pts = as_points(points)
    if len(pts) == 6:
        return {"kind": "sign6", "sign": sign6(pts)}
    if len(pts) == 7:
        return {"kind": "sign7", "sign": sign7(pts)}
    if len(pts) == 8:
        s, signs = octad_signs(pts)
        return {"kind": "octad", "sign": s, "signs": signs}
    raise BadInput(f"chirality needs 6, 7 or 8 points, got {len(pts)}")
