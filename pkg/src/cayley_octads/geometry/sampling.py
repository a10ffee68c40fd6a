"""Random rational octads and wall-crossing constructions."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from ..errors import OctadError
from .linalg import det4
from .nets import REGULAR, WALL, complete_octad, verify_octad
from .points import ProjPoint

CUBE = tuple(ProjPoint.of(x, y, z, 1) for x in (1, -1) for y in (1, -1) for z in (1, -1))


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 2024
    scale: Fraction = Fraction(1, 8)  # max perturbation per affine coordinate
    denominator: int = 64
    max_tries: int = 50


def _perturb(p: ProjPoint, rng: random.Random, cfg: SamplerConfig) -> ProjPoint:
    w = p.coords[3]
    steps = int(cfg.scale * cfg.denominator)
    return ProjPoint(tuple(Fraction(c, w) + Fraction(rng.randint(-steps, steps), cfg.denominator) for c in p.coords[:3]) + (1,))


def perturbed_cube(rng: random.Random, cfg: SamplerConfig = SamplerConfig()) -> list[ProjPoint]:
    """Perturb 7 cube vertices, complete by the 8th base point, retry until regular."""
    for _ in range(cfg.max_tries):
        seven = [_perturb(p, rng, cfg) for p in CUBE[:7]]
        try:
            eighth = complete_octad(seven, rng=rng)
        except OctadError:
            continue
        octad = seven + [eighth]
        if verify_octad(octad).classification == REGULAR:
            return octad
    raise RuntimeError("no regular octad found; loosen the sampler")


def sample_octads(n: int, cfg: SamplerConfig = SamplerConfig()) -> Iterator[list[ProjPoint]]:
    rng = random.Random(cfg.seed)
    for _ in range(n):
        yield perturbed_cube(rng, cfg)


# -- walls ----------------------------------------------------------------------


def _affine(p: ProjPoint) -> tuple[Fraction, ...]:
    return tuple(Fraction(c, p.coords[3]) for c in p.coords[:3])


def _lerp(a, b, t: Fraction) -> ProjPoint:
    return ProjPoint(tuple(x + t * (y - x) for x, y in zip(a, b)) + (1,))


def wall_crossing_pair(points: list[ProjPoint], mover: int, plane: tuple[int, int, int]):
    """Two simple configurations on either side of a single coplanarity wall.

    Point ``mover`` moves along a segment through the plane spanned by
    ``plane``; every quadruple determinant is affine in the parameter, so the
    segment is shrunk around the crossing until no other determinant vanishes
    on it.  Returns ``(before, after)`` or None when the segment misses the
    plane.  Points must be affine (last coordinate nonzero).
    """
    pts = list(points)
    p = _affine(pts[mover])
    a, b, c = (_affine(pts[i]) for i in plane)
    normal = _cross(_sub(b, a), _sub(c, a))
    dist = sum(n * (x - y) for n, x, y in zip(normal, p, a))
    nn = sum(n * n for n in normal)
    if nn == 0 or dist == 0:
        return None
    # reflect p through the plane: the segment p -> p' crosses the plane at t = 1/2
    p_ref = tuple(x - 2 * dist * n / nn for x, n in zip(p, normal))

    def det_at(quad, t):
        # raw affine lifts: canonical forms would rescale the rows
        moving = tuple(x + t * (y - x) for x, y in zip(p, p_ref)) + (1,)
        return det4(tuple(moving if i == mover else _affine(pts[i]) + (1,) for i in quad))

    roots = []
    for quad in itertools.combinations(range(len(pts)), 4):
        if mover not in quad:
            continue
        d0, d1 = det_at(quad, Fraction(0)), det_at(quad, Fraction(1))
        if d0 != d1:
            roots.append((Fraction(d0, d0 - d1), quad))
    wall = Fraction(1, 2)
    others = [abs(t - wall) for t, quad in roots if set(quad) != {mover, *plane} and t != wall]
    if any(t == wall for t, quad in roots if set(quad) != {mover, *plane}):
        return None
    half = min([Fraction(1, 2)] + others) / 2
    before = pts[:mover] + [_lerp(p, p_ref, wall - half)] + pts[mover + 1:]
    after = pts[:mover] + [_lerp(p, p_ref, wall + half)] + pts[mover + 1:]
    return before, after


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def wall_octad(rng: random.Random, cfg: SamplerConfig = SamplerConfig()) -> list[ProjPoint]:
    """An octad split into two coplanar quadruples (a 4-collision wall).

    Four random points on the plane ``z = 1`` and three on ``z = -1``; the
    eighth base point lands on ``z = -1`` because the reducible quadric
    ``z^2 - w^2`` belongs to the net.
    """
    for _ in range(cfg.max_tries):
        steps = int(4 * cfg.scale * cfg.denominator)
        rnd = lambda: Fraction(rng.randint(-steps, steps), cfg.denominator)
        top = [ProjPoint.of(s * (1 + rnd()), t * (1 + rnd()), 1, 1) for s, t in ((1, 1), (1, -1), (-1, 1), (-1, -1))]
        bottom = [ProjPoint.of(s * (1 + rnd()), t * (1 + rnd()), -1, 1) for s, t in ((1, 1), (1, -1), (-1, 1))]
        try:
            eighth = complete_octad(top + bottom, rng=rng)
        except OctadError:
            continue
        octad = top + bottom + [eighth]
        if verify_octad(octad).classification == WALL:
            return octad
    raise RuntimeError("no 4-collision wall octad found")


def wall_neighbours(octad: list[ProjPoint], eps: Fraction = Fraction(1, 100)) -> tuple[list[ProjPoint], list[ProjPoint]]:
    """Push point 0 of ``wall_octad`` off the plane ``z = w`` to either side and recomplete."""
    out = []
    for s in (1, -1):
        x, y, z, w = octad[0].coords
        seven = [ProjPoint((x, y, z + s * eps * w, w))] + list(octad[1:7])
        out.append(seven + [complete_octad(seven)])
    return out[0], out[1]
