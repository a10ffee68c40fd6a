"""Points of real projective 3-space with exact rational coordinates."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from ..errors import BadInput
from .linalg import det4, primitive, to_fraction


@dataclass(frozen=True, order=True)
class ProjPoint:
    """Point of RP^n stored as a primitive integer vector, first nonzero entry positive."""

    coords: tuple[int, ...]

    def __post_init__(self):
        try:
            c = primitive(self.coords)
        except ValueError:
            raise BadInput("all homogeneous coordinates are zero") from None
        object.__setattr__(self, "coords", c)

    @classmethod
    def of(cls, *values) -> "ProjPoint":
        if len(values) == 1 and not isinstance(values[0], (int, str, Fraction)):
            values = tuple(values[0])
        try:
            return cls(tuple(to_fraction(v) for v in values))
        except (ValueError, ZeroDivisionError) as exc:
            raise BadInput(f"bad coordinates {values!r}: {exc}") from None

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __str__(self):
        return "(" + ", ".join(map(str, self.coords)) + ")"


Points = Sequence[ProjPoint]


def as_points(points: Iterable) -> list[ProjPoint]:
    out = []
    for p in points:
        out.append(p if isinstance(p, ProjPoint) else ProjPoint.of(p))
    for p in out:
        if p.dim != 3:
            raise BadInput(f"expected points of P^3, got {p}")
    return out


def det_points(p, q, r, s) -> int:
    return det4((p.coords, q.coords, r.coords, s.coords))


def coplanar(p: ProjPoint, q: ProjPoint, r: ProjPoint, s: ProjPoint) -> bool:
    return det_points(p, q, r, s) == 0


def coplanar_quadruples(points: Points) -> list[tuple[int, int, int, int]]:
    return [quad for quad in itertools.combinations(range(len(points)), 4) if coplanar(*(points[i] for i in quad))]


def is_simple(points: Points) -> bool:
    return not coplanar_quadruples(points)


def mirror(points: Points, axis: int = 0) -> list[ProjPoint]:
    """Image under the orientation-reversing map negating one coordinate."""
    out = []
    for p in points:
        c = list(p.coords)
        c[axis] = -c[axis]
        out.append(ProjPoint(tuple(c)))
    return out


def apply_linear(matrix: Sequence[Sequence], points: Points) -> list[ProjPoint]:
    out = []
    for p in points:
        out.append(ProjPoint(tuple(sum(to_fraction(m) * x for m, x in zip(row, p.coords)) for row in matrix)))
    return out


# -- configuration files ---------------------------------------------------


def parse_config(text: str) -> list[ProjPoint]:
    """UTF-8 text, '#' comments, one point per line as 4 rationals ("p/q" or integer)."""
    points = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 4:
            raise BadInput(f"line {lineno}: expected 4 coordinates, got {len(fields)}")
        try:
            values = [Fraction(f) for f in fields]
        except (ValueError, ZeroDivisionError):
            raise BadInput(f"line {lineno}: cannot parse rationals in {line!r}") from None
        try:
            points.append(ProjPoint(tuple(values)))
        except BadInput as exc:
            raise BadInput(f"line {lineno}: {exc}") from None
    return points


def read_config(path: str | Path, counts: Iterable[int] | None = None) -> list[ProjPoint]:
    points = parse_config(Path(path).read_text(encoding="utf-8"))
    if counts is not None:
        counts = tuple(counts)
        if len(points) not in counts:
            allowed = " or ".join(map(str, counts))
            raise BadInput(f"{path}: expected {allowed} points, found {len(points)}")
    return points


def format_config(points: Points, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines += [f"# {c}" for c in comment.splitlines()]
    lines += [" ".join(str(x) for x in p.coords) for p in points]
    return "\n".join(lines) + "\n"


def write_config(path: str | Path, points: Points, comment: str | None = None) -> None:
    Path(path).write_text(format_config(points, comment), encoding="utf-8")
