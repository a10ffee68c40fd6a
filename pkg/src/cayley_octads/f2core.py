"""Z/2 linear algebra on the rank-6 homology model of an M-quartic.

Vectors are packed into 6-bit integers.  Bit ``k`` is the coordinate along the
k-th element of the ordered basis ``(a1, a2, a3, b1, b2, b3)``: the ``a``'s
are oval classes, ``b_i`` is the bridge class joining oval ``a0`` to oval
``a_i``.  The pairing is ``a_i . b_j = delta_ij`` with both halves isotropic.

Derived classes::

    a0   = a1 + a2 + a3
    b0i  = b_i
    b_ij = b_i + b_j        (1 <= i < j <= 3)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .errors import BadInput, EnumerationLimitExceeded, NoIsometry

DIM = 6
NVEC = 1 << DIM
FULL_MASK = (1 << NVEC) - 1

A1, A2, A3, B1, B2, B3 = (1 << k for k in range(DIM))
A0 = A1 | A2 | A3
BASIS = (A1, A2, A3, B1, B2, B3)
BASIS_NAMES = ("a1", "a2", "a3", "b1", "b2", "b3")

# enumeration guard for isometry_group; the even stabilizer (8! = 40320) fits
DEFAULT_ENUMERATION_LIMIT = 50_000


def oval(i: int) -> int:
    """Class of oval ``a_i``, ``0 <= i <= 3``."""
    if i == 0:
        return A0
    if 1 <= i <= 3:
        return 1 << (i - 1)
    raise BadInput(f"oval index out of range: {i}")


def bridge(i: int, j: int) -> int:
    """Class of the bridge joining ovals ``a_i`` and ``a_j``."""
    if i == j or not (0 <= i <= 3 and 0 <= j <= 3):
        raise BadInput(f"bad bridge indices: {(i, j)}")
    i, j = min(i, j), max(i, j)
    if i == 0:
        return 1 << (2 + j)
    return (1 << (2 + i)) ^ (1 << (2 + j))


OVALS = tuple(oval(i) for i in range(4))
BRIDGE_PAIRS = tuple(itertools.combinations(range(4), 2))
BRIDGES = {ij: bridge(*ij) for ij in BRIDGE_PAIRS}


def vec(bits: str | Sequence[int]) -> int:
    """Pack 6 coordinates (string like ``"100010"`` or a sequence) into an int."""
    if isinstance(bits, str):
        bits = [int(c) for c in bits if c in "01"]
    bits = list(bits)
    if len(bits) != DIM or any(b not in (0, 1) for b in bits):
        raise BadInput(f"expected 6 binary coordinates, got {bits!r}")
    return sum(b << k for k, b in enumerate(bits))


def coords(v: int) -> tuple[int, ...]:
    return tuple((v >> k) & 1 for k in range(DIM))


def dot(u: int, v: int) -> int:
    return (((u & 7) & (v >> 3)).bit_count() + ((u >> 3) & (v & 7)).bit_count()) & 1


DOT = tuple(tuple(dot(u, v) for v in range(NVEC)) for u in range(NVEC))

# ORTH[v]: bitmask (over the 64 vectors) of w with v.w == 0
ORTH = tuple(sum(1 << w for w in range(NVEC) if not DOT[v][w]) for v in range(NVEC))
NONORTH = tuple(FULL_MASK ^ m for m in ORTH)

STANDARD_GRAM = tuple(tuple(DOT[u][v] for v in BASIS) for u in BASIS)


def transvection(v: int, x: int) -> int:
    """Picard-Lefschetz transvection ``x -> x + (x.v) v``."""
    return x ^ v if DOT[x][v] else x


@dataclass(frozen=True, order=True)
class QuadraticFunction:
    """Quadratic refinement of the pairing, given by its values on the basis.

    ``matrix[0]`` holds ``q(a1), q(a2), q(a3)`` and ``matrix[1]`` holds
    ``q(b1), q(b2), q(b3)``.
    """

    matrix: tuple[tuple[int, int, int], tuple[int, int, int]]

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        if len(m) != 2 or any(len(r) != 3 for r in m) or any(x not in (0, 1) for r in m for x in r):
            raise BadInput(f"expected a binary 2x3 matrix, got {self.matrix!r}")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_bits(cls, bits: str) -> "QuadraticFunction":
        """Row-major 6-character string, ``"000101"`` = [[0,0,0],[1,0,1]]."""
        b = [int(c) for c in bits.strip() if c in "01"]
        if len(b) != 6 or len(b) != len(bits.strip()):
            raise BadInput(f"expected 6 bits, got {bits!r}")
        return cls((tuple(b[:3]), tuple(b[3:])))

    @classmethod
    def from_values(cls, basis_values: Sequence[int]) -> "QuadraticFunction":
        v = list(basis_values)
        return cls((tuple(v[:3]), tuple(v[3:])))

    @property
    def bits(self) -> str:
        return "".join(str(x) for row in self.matrix for x in row)

    @property
    def basis_values(self) -> tuple[int, ...]:
        return self.matrix[0] + self.matrix[1]

    @cached_property
    def table(self) -> tuple[int, ...]:
        qa, qb = self.matrix
        out = []
        for x in range(NVEC):
            val = 0
            for i in range(3):
                xa = (x >> i) & 1
                xb = (x >> (3 + i)) & 1
                val ^= (xa & qa[i]) ^ (xb & qb[i]) ^ (xa & xb)
            out.append(val)
        return tuple(out)

    @cached_property
    def ones_mask(self) -> int:
        return sum(1 << x for x in range(NVEC) if self.table[x])

    def __call__(self, v: int) -> int:
        return self.table[v]

    def shifted(self, u: int) -> "QuadraticFunction":
        """The function ``x -> q(x) + u.x`` (the theta-characteristic ``theta + u*``)."""
        return type(self).from_values([self.table[e] ^ DOT[u][e] for e in BASIS])

    def difference(self, other: "QuadraticFunction") -> int:
        """The class ``u`` with ``other = self.shifted(u)``."""
        d = [a ^ b for a, b in zip(self.basis_values, other.basis_values)]
        # u.e_k = d_k; u.a_i reads the b_i coordinate of u and vice versa
        return sum(d[k] << ((k + 3) % 6) for k in range(DIM))

    def __str__(self):
        return self.bits


def all_quadratic_functions() -> list[QuadraticFunction]:
    return [QuadraticFunction.from_values(coords(n)) for n in range(NVEC)]


def q_eval(q: QuadraticFunction, v: int) -> int:
    return q.table[v]


def arf(q: QuadraticFunction) -> int:
    qa, qb = q.matrix
    return (qa[0] & qb[0]) ^ (qa[1] & qb[1]) ^ (qa[2] & qb[2])


class Isometry(tuple):
    """Linear map of the model given by the images of the 6 basis vectors."""

    __slots__ = ()

    def __new__(cls, columns: Sequence[int]):
        cols = tuple(columns)
        if len(cols) != DIM:
            raise BadInput("an isometry needs exactly 6 columns")
        return super().__new__(cls, cols)

    @classmethod
    def identity(cls) -> "Isometry":
        return cls(BASIS)

    @classmethod
    def from_function(cls, f) -> "Isometry":
        return cls(f(e) for e in BASIS)

    def __call__(self, x: int) -> int:
        y = 0
        k = 0
        while x:
            if x & 1:
                y ^= self[k]
            x >>= 1
            k += 1
        return y

    def compose(self, other: "Isometry") -> "Isometry":
        """``self o other``."""
        return Isometry(self(c) for c in other)

    def __mul__(self, other):
        if isinstance(other, Isometry):
            return self.compose(other)
        return NotImplemented

    def table(self) -> tuple[int, ...]:
        return tuple(self(x) for x in range(NVEC))

    def inverse(self) -> "Isometry":
        t = self.table()
        inv = [0] * NVEC
        for x, y in enumerate(t):
            inv[y] = x
        return Isometry(inv[e] for e in BASIS)

    def is_invertible(self) -> bool:
        return len(set(self.table())) == NVEC

    def preserves_form(self) -> bool:
        return all(DOT[self[i]][self[j]] == STANDARD_GRAM[i][j] for i in range(DIM) for j in range(i + 1, DIM))

    def preserves(self, q: QuadraticFunction) -> bool:
        return self.preserves_form() and all(q.table[c] == q.table[e] for c, e in zip(self, BASIS))

    def __repr__(self):
        return f"Isometry({tuple(self)})"


def _gf2_rank(rows: Sequence[int]) -> int:
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    return len(basis)


_SPAN_CACHE: dict[tuple[int, int], int] = {}


def _extend_span(span: int, c: int) -> int:
    """Membership mask of ``span + <c>`` given the mask of a subspace."""
    key = (span, c)
    res = _SPAN_CACHE.get(key)
    if res is None:
        res = span
        s = span
        while s:
            lb = s & -s
            res |= 1 << ((lb.bit_length() - 1) ^ c)
            s ^= lb
        _SPAN_CACHE[key] = res
    return res


def _candidate_masks(qvals, qtable, n):
    if qtable is None:
        return [FULL_MASK] * n
    ones = sum(1 << x for x in range(NVEC) if qtable[x])
    return [ones if qv else FULL_MASK ^ ones for qv in qvals]


def _search(gram, qvals, qtable, out, limit, first_only=False):
    """Depth-first search for images ``c_0..c_5`` with prescribed Gram matrix
    and, when ``qtable`` is given, prescribed q-values.  Candidates are tried
    in increasing order, so solutions come out lexicographically sorted."""
    n = len(gram)
    qmask = _candidate_masks(qvals, qtable, n)
    chosen = [0] * n
    new = tuple.__new__

    def rec(k, span):
        cand = qmask[k]
        for j in range(k):
            cand &= NONORTH[chosen[j]] if gram[k][j] else ORTH[chosen[j]]
        cand &= ~span
        if k == n - 1:
            while cand:
                low = cand & -cand
                cand ^= low
                chosen[k] = low.bit_length() - 1
                out.append(new(Isometry, chosen))
                if first_only:
                    return True
            if limit is not None and len(out) > limit:
                raise EnumerationLimitExceeded(f"enumeration exceeded the limit of {limit} isometries")
            return False
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            cand ^= low
            chosen[k] = c
            if rec(k + 1, _extend_span(span, c)):
                return True
        return False

    rec(0, 1)


def iter_isometries(q: QuadraticFunction | None = None) -> Iterator[Isometry]:
    out: list[Isometry] = []
    _search(STANDARD_GRAM, q.basis_values if q else None, q.table if q else None, out, None)
    yield from out


def isometry_group(q: QuadraticFunction | None = None, limit: int | None = DEFAULT_ENUMERATION_LIMIT) -> list[Isometry]:
    """All symplectic isometries (``q=None``) or the stabilizer of ``q``.

    Elements are returned sorted lexicographically by their columns.  The
    full symplectic group has 1 451 520 elements and exceeds the default
    ``limit``; pass ``limit=None`` to materialize it anyway.
    """
    out: list[Isometry] = []
    _search(STANDARD_GRAM, q.basis_values if q else None, q.table if q else None, out, limit)
    return out


def count_isometries(q: QuadraticFunction | None = None) -> int:
    """Order of the (stabilizer) group, counted without materializing it."""
    qmask = _candidate_masks(q.basis_values if q else None, q.table if q else None, DIM)
    chosen = [0] * DIM

    def rec(k, span):
        cand = qmask[k]
        for j in range(k):
            cand &= NONORTH[chosen[j]] if STANDARD_GRAM[k][j] else ORTH[chosen[j]]
        cand &= ~span
        if k == DIM - 1:
            return cand.bit_count()
        total = 0
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            cand ^= low
            chosen[k] = c
            total += rec(k + 1, _extend_span(span, c))
        return total

    return rec(0, 1)


@dataclass(frozen=True)
class BasisData:
    """Six abstract basis vectors described by their Gram matrix and q-values."""

    gram: tuple[tuple[int, ...], ...]
    q: tuple[int, ...]

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        qv = tuple(int(x) for x in self.q)
        object.__setattr__(self, "gram", g)
        object.__setattr__(self, "q", qv)

    def validate(self):
        g = self.gram
        if len(g) != DIM or any(len(r) != DIM for r in g) or len(self.q) != DIM:
            raise BadInput("basis data must be 6x6 Gram matrix with 6 q-values")
        if any(x not in (0, 1) for r in g for x in r) or any(x not in (0, 1) for x in self.q):
            raise BadInput("Gram entries and q-values must be 0 or 1")
        if any(g[i][i] for i in range(DIM)):
            raise BadInput("Gram matrix must have zero diagonal (x.x = 0 over Z/2)")
        if any(g[i][j] != g[j][i] for i in range(DIM) for j in range(DIM)):
            raise BadInput("Gram matrix must be symmetric")
        if _gf2_rank([sum(b << j for j, b in enumerate(r)) for r in g]) != DIM:
            raise BadInput("Gram matrix is degenerate; no symplectic realization")

    def value(self, combo: int) -> int:
        """q of the combination with coefficient bits ``combo``."""
        idx = [k for k in range(DIM) if (combo >> k) & 1]
        val = sum(self.q[k] for k in idx)
        val += sum(self.gram[i][j] for i, j in itertools.combinations(idx, 2))
        return val & 1

    def arf(self) -> int:
        zeros = sum(1 for c in range(NVEC) if self.value(c) == 0)
        return 0 if zeros == 36 else 1


def standard_basis_data(q: QuadraticFunction) -> BasisData:
    return BasisData(STANDARD_GRAM, q.basis_values)


def find_isometry(source: BasisData, target: QuadraticFunction) -> Isometry:
    """Images of the abstract basis in the model matching products and q-values.

    The lexicographically smallest solution is returned.
    """
    source.validate()
    if source.arf() != arf(target):
        raise NoIsometry("Arf invariants differ")
    out: list[Isometry] = []
    _search(source.gram, source.q, target.table, out, None, first_only=True)
    if not out:
        raise NoIsometry("no isometry realizes the given data")
    return out[0]
