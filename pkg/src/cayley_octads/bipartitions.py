"""Even bipartitions of an 8-point octad and their identification with homology.

A bipartition ``{A, B}`` of the labels ``0..7`` is stored as the 8-bit mask of
its canonical side: the smaller side, and for a 4+4 split the side that does
not contain label 0.  The 64 bipartitions form a Z/2 space under symmetric
difference, with pairing ``|A n C| mod 2`` and parity ``|A|/2 mod 2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import f2core
from .errors import BadInput, NotInduced
from .f2core import BasisData, Isometry, QuadraticFunction

NPOINTS = 8
ALL_LABELS = (1 << NPOINTS) - 1

Permutation = tuple[int, ...]


def canonical_mask(mask: int) -> int:
    if not 0 <= mask <= ALL_LABELS:
        raise BadInput(f"mask out of range: {mask}")
    n = mask.bit_count()
    if n % 2:
        raise BadInput(f"odd subset {mask:08b} does not define an even bipartition")
    if n > 4 or (n == 4 and mask & 1):
        mask ^= ALL_LABELS
    return mask


@dataclass(frozen=True, order=True)
class Bipartition:
    mask: int

    def __post_init__(self):
        object.__setattr__(self, "mask", canonical_mask(self.mask))

    @classmethod
    def of(cls, labels: Iterable[int]) -> "Bipartition":
        m = 0
        for i in labels:
            if not 0 <= i < NPOINTS:
                raise BadInput(f"label out of range: {i}")
            if m >> i & 1:
                raise BadInput(f"repeated label {i}")
            m |= 1 << i
        return cls(m)

    @property
    def part(self) -> tuple[int, ...]:
        return tuple(i for i in range(NPOINTS) if self.mask >> i & 1)

    @property
    def complement(self) -> tuple[int, ...]:
        return tuple(i for i in range(NPOINTS) if not self.mask >> i & 1)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def is_pair(self) -> bool:
        return self.size == 2

    @property
    def is_quadruple(self) -> bool:
        return self.size == 4

    def __add__(self, other: "Bipartition") -> "Bipartition":
        return bp_add(self, other)

    def __str__(self):
        return "{" + ",".join(map(str, self.part)) + "}"


EMPTY = Bipartition(0)
ALL_BIPARTITIONS = tuple(
    sorted({Bipartition(m) for m in range(1 << NPOINTS) if m.bit_count() % 2 == 0}, key=lambda b: (b.size, b.part))
)
PAIRS = tuple(b for b in ALL_BIPARTITIONS if b.is_pair)
QUADRUPLES = tuple(b for b in ALL_BIPARTITIONS if b.is_quadruple)


def bp_add(x: Bipartition, y: Bipartition) -> Bipartition:
    return Bipartition(x.mask ^ y.mask)


def bp_dot(x: Bipartition, y: Bipartition) -> int:
    # |A n C| and |A n D| agree mod 2 because |A| is even
    return (x.mask & y.mask).bit_count() & 1


def bp_h(x: Bipartition) -> int:
    return (x.size // 2) & 1


def permute(pi: Sequence[int], x: Bipartition) -> Bipartition:
    """Image of ``x`` under the label permutation ``i -> pi[i]``."""
    m = 0
    for i in x.part:
        m |= 1 << pi[i]
    return Bipartition(m)


def check_permutation(pi: Sequence[int]) -> Permutation:
    pi = tuple(int(i) for i in pi)
    if sorted(pi) != list(range(NPOINTS)):
        raise BadInput(f"not a permutation of 0..7: {pi}")
    return pi


def compose_perms(p: Sequence[int], s: Sequence[int]) -> Permutation:
    """``p o s`` (apply ``s`` first)."""
    return tuple(p[s[i]] for i in range(len(s)))


def transposition(i: int, j: int, n: int = NPOINTS) -> Permutation:
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


def bifid(v: Bipartition, pair: Bipartition) -> Bipartition:
    """Cayley's bifid substitution of a pair class attached to the 4+4 split ``v``."""
    if not v.is_quadruple:
        raise BadInput(f"bifid needs a 4+4 bipartition, got {v}")
    if not pair.is_pair:
        raise BadInput(f"bifid acts on pair classes, got {pair}")
    side_a, side_b = v.mask, ALL_LABELS ^ v.mask
    if pair.mask & side_a == pair.mask:
        return Bipartition(side_a ^ pair.mask)
    if pair.mask & side_b == pair.mask:
        return Bipartition(side_b ^ pair.mask)
    return pair


def picard_lefschetz(v: Bipartition, x: Bipartition) -> Bipartition:
    """Monodromy of the wall with vanishing bipartition ``v`` acting on ``x``.

    ``x -> x + eps v`` with ``eps = |A_v|/2 + |A n A_v| + 1 mod 2``.
    """
    eps = (v.size // 2 + (x.mask & v.mask).bit_count() + 1) & 1
    return bp_add(x, v) if eps else x


# {0,1}, ..., {0,6}: a basis of the bipartition space
PAIR_BASIS = tuple(Bipartition.of((0, i)) for i in range(1, 7))
PAIR_BASIS_DATA = BasisData(
    tuple(tuple(bp_dot(x, y) for y in PAIR_BASIS) for x in PAIR_BASIS),
    tuple(bp_h(x) for x in PAIR_BASIS),
)


def basis_coordinates(x: Bipartition) -> tuple[int, ...]:
    """Coordinates of ``x`` in ``PAIR_BASIS``."""
    m = x.mask
    if m >> 7 & 1:
        m ^= ALL_LABELS
    return tuple(m >> i & 1 for i in range(1, 7))


@dataclass(frozen=True)
class PhiMap:
    """Linear isomorphism from bipartitions to the homology model.

    It matches ``bp_dot`` with ``dot`` and ``bp_h`` with the target function
    ``q``.
    """

    q: QuadraticFunction
    images: tuple[int, ...]  # images of PAIR_BASIS
    forward: dict = field(init=False, repr=False, compare=False)
    backward: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        fwd = {}
        for x in ALL_BIPARTITIONS:
            v = 0
            for c, img in zip(basis_coordinates(x), self.images):
                if c:
                    v ^= img
            fwd[x] = v
        object.__setattr__(self, "forward", fwd)
        object.__setattr__(self, "backward", {v: x for x, v in fwd.items()})

    def __call__(self, x: Bipartition) -> int:
        return self.forward[x]

    def inverse(self, v: int) -> Bipartition:
        return self.backward[v]

    def relabeled(self, pi: Sequence[int]) -> "PhiMap":
        """The map ``x -> Phi(pi . x)``; every valid map for ``q`` arises this way."""
        pi = check_permutation(pi)
        return PhiMap(self.q, tuple(self(permute(pi, b)) for b in PAIR_BASIS))

    def is_valid(self) -> bool:
        if len(self.backward) != len(ALL_BIPARTITIONS):
            return False
        for x in ALL_BIPARTITIONS:
            if self.q(self(x)) != bp_h(x):
                return False
            for y in ALL_BIPARTITIONS:
                if bp_dot(x, y) != f2core.DOT[self(x)][self(y)]:
                    return False
        return True


def build_phi(q: QuadraticFunction) -> PhiMap:
    if f2core.arf(q) != 0:
        raise BadInput(f"build_phi needs an even quadratic function, got Arf 1 for {q}")
    iso = f2core.find_isometry(PAIR_BASIS_DATA, q)
    return PhiMap(q, tuple(iso))


def perm_to_isometry(pi: Sequence[int], phi: PhiMap) -> Isometry:
    pi = check_permutation(pi)
    return Isometry(phi(permute(pi, phi.inverse(e))) for e in f2core.BASIS)


def isometry_to_perm(g: Isometry, phi: PhiMap) -> Permutation:
    if not g.preserves(phi.q):
        raise NotInduced("isometry does not preserve the quadratic function of the identification")
    pi = []
    for i in range(NPOINTS):
        j, k = [x for x in range(NPOINTS) if x != i][:2]
        p1 = phi.inverse(g(phi(Bipartition.of((i, j)))))
        p2 = phi.inverse(g(phi(Bipartition.of((i, k)))))
        common = p1.mask & p2.mask
        if not (p1.is_pair and p2.is_pair) or common.bit_count() != 1:
            raise NotInduced("isometry does not permute pair classes coherently")
        pi.append(common.bit_length() - 1)
    pi = check_permutation(pi)
    if perm_to_isometry(pi, phi) != g:
        raise NotInduced("recovered permutation does not induce the isometry")
    return pi


def theta_monodromy(q: QuadraticFunction, v: int) -> tuple[int, ...]:
    """Picard-Lefschetz action on the 64 theta-characteristics.

    A theta-characteristic is labeled by its difference class ``u`` from ``q``
    (i.e. it is ``q.shifted(u)``).  Entry ``u`` of the result is the label of
    its image ``theta + (q_theta(v) + 1) v*``.
    """
    if v == 0:
        raise BadInput("vanishing class must be nonzero")
    out = []
    for u in range(f2core.NVEC):
        q_theta_v = q.table[v] ^ f2core.DOT[u][v]
        out.append(u if q_theta_v else u ^ v)
    return tuple(out)


def monodromy_on_bipartitions(phi: PhiMap, v: int) -> dict[Bipartition, Bipartition]:
    """Action of ``theta_monodromy(phi.q, v)`` transported to bipartitions."""
    t = theta_monodromy(phi.q, v)
    return {x: phi.inverse(t[phi(x)]) for x in ALL_BIPARTITIONS}


def all_permutations(n: int = NPOINTS):
    return itertools.permutations(range(n))
