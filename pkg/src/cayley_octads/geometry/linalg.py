"""Exact rational linear algebra on top of sympy's ``DomainMatrix`` over QQ."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    return Fraction(int(x.numerator), int(x.denominator))


def dm(rows: Sequence[Sequence]) -> DomainMatrix:
    rows = [[QQ(int(to_fraction(x).numerator), int(to_fraction(x).denominator)) for x in r] for r in rows]
    ncols = len(rows[0]) if rows else 0
    return DomainMatrix(rows, (len(rows), ncols), QQ)


def to_rows(m: DomainMatrix) -> list[list[Fraction]]:
    return [[to_fraction(x) for x in row] for row in m.to_list()]


def rank(rows) -> int:
    if not rows:
        return 0
    return dm(rows).rank()


def rref(rows) -> tuple[list[list[Fraction]], tuple[int, ...]]:
    m, pivots = dm(rows).rref()
    out = [r for r in to_rows(m) if any(r)]
    return out, tuple(pivots)


def nullspace(rows) -> list[list[Fraction]]:
    """Basis of the right kernel, in reduced row echelon form."""
    ns = dm(rows).nullspace()
    basis = to_rows(ns)
    if not basis:
        return []
    red, _ = rref(basis)
    return red


def det(rows) -> Fraction:
    return to_fraction(dm(rows).det())


def solve(rows, rhs) -> list[Fraction]:
    a = dm(rows)
    b = dm([[x] for x in rhs])
    x = a.lu_solve(b)
    return [r[0] for r in to_rows(x)]


def inverse(rows) -> list[list[Fraction]]:
    return to_rows(dm(rows).inv())


def primitive(values: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, first nonzero entry positive."""
    fr = [to_fraction(v) for v in values]
    if not any(fr):
        raise ValueError("zero vector has no primitive form")
    den = 1
    for f in fr:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def det4(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a 4x4 integer matrix by cofactor expansion."""
    (a, b, c, d), (e, f, g, h), (i, j, k, l), (mm, n, o, p) = m
    kp_lo = k * p - l * o
    jp_ln = j * p - l * n
    jo_kn = j * o - k * n
    ip_lm = i * p - l * mm
    io_km = i * o - k * mm
    in_jm = i * n - j * mm
    return (
        a * (f * kp_lo - g * jp_ln + h * jo_kn)
        - b * (e * kp_lo - g * ip_lm + h * io_km)
        + c * (e * jp_ln - f * ip_lm + h * in_jm)
        - d * (e * jo_kn - f * io_km + g * in_jm)
    )
