"""Matroids as basis families, their polytopes, antipode and invariants."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

from .core import Character, HopfFamily, polynomial_invariant, character_inverse
from .errors import ConsistencyError, InputError, InvalidDecomposition
from .formal import FormalSum, Structure, join_labels
from .polynomial import PolynomialQ
from .sets import bits, compress, expand, full_mask, labels_of, mask_of, popcount
from .submodular import BooleanFn, enumerate_faces


class Matroid(Structure):
    __slots__ = ("bases",)
    kind = "matroid"

    def __init__(self, labels: Sequence[str], bases: Iterable, check: bool = True):
        labels = tuple(labels)
        if list(labels) != sorted(set(labels)):
            raise InputError("ground labels must be distinct and sorted; use Matroid.build")
        bs = set()
        for b in bases:
            bs.add(b if isinstance(b, int) else mask_of(labels, b))
        if not bs:
            raise InputError("a matroid needs at least one basis")
        if len({popcount(b) for b in bs}) != 1:
            raise InputError("bases must have equal size")
        self.labels = labels
        self.bases = tuple(sorted(bs))
        if check and not satisfies_exchange(self.bases):
            raise InputError("basis exchange axiom fails")
        self.key = f"{join_labels(labels)}{{{' '.join(join_labels(labels_of(labels, b)) or '-' for b in self.bases)}}}"

    @classmethod
    def build(cls, ground: Iterable[str], bases: Iterable[Iterable[str]]):
        g = tuple(sorted(set(ground)))
        return cls(g, [mask_of(g, b) for b in bases])

    @property
    def rank(self) -> int:
        return popcount(self.bases[0])

    def rank_of(self, a: int) -> int:
        return max(popcount(b & a) for b in self.bases)


def satisfies_exchange(bases: Sequence[int]) -> bool:
    bs = set(bases)
    for a in bs:
        for b in bs:
            for x in bits(a & ~b):
                if not any(((a & ~(1 << x)) | (1 << y)) in bs for y in bits(b & ~a)):
                    return False
    return True


def uniform(r: int, labels: Sequence[str] | int) -> Matroid:
    if isinstance(labels, int):
        labels = [chr(ord("a") + i) for i in range(labels)]
    labels = tuple(sorted(labels))
    return Matroid(labels, [sum(1 << i for i in c) for c in combinations(range(len(labels)), r)])


def rank_fn(m: Matroid) -> BooleanFn:
    n = len(m.labels)
    return BooleanFn(m.labels, [m.rank_of(a) for a in range(1 << n)])


def _max_family(masks: Iterable[int]) -> list[int]:
    ms = set(masks)
    top = max(popcount(x) for x in ms)
    return [x for x in ms if popcount(x) == top]


def restriction(m: Matroid, s: int) -> Matroid:
    """m|_S: the maximal sets among B & S."""
    return Matroid(labels_of(m.labels, s), [compress(b, s) for b in _max_family(b & s for b in m.bases)], check=False)


def contraction(m: Matroid, s: int) -> Matroid:
    """m/_S: B - S over bases meeting S in a basis of m|_S."""
    r = m.rank_of(s)
    t = full_mask(len(m.labels)) & ~s
    return Matroid(labels_of(m.labels, t), [compress(b & t, t) for b in m.bases if popcount(b & s) == r], check=False)


def contract_element(m: Matroid, i: int) -> Matroid:
    """Single-element contraction (deletion if i is a loop)."""
    keep = full_mask(len(m.labels)) & ~(1 << i)
    with_i = [b for b in m.bases if b >> i & 1]
    src = with_i if with_i else list(m.bases)
    return Matroid(labels_of(m.labels, keep), [compress(b & keep, keep) for b in src], check=False)


def contraction_iterated(m: Matroid, s: int) -> Matroid:
    cur = m
    for a in labels_of(m.labels, s):
        cur = contract_element(cur, cur.labels.index(a))
    return cur


class MatroidFamily(HopfFamily):
    name = "matroid"

    def restrict(self, m, mask):
        return restriction(m, mask)

    def contract(self, m, mask):
        return contraction(m, mask)

    def product(self, m1, m2):
        if set(m1.labels) & set(m2.labels):
            raise InvalidDecomposition("matroids overlap")
        labels = tuple(sorted(m1.labels + m2.labels))
        s1, s2 = mask_of(labels, m1.labels), mask_of(labels, m2.labels)
        return Matroid(labels, [expand(a, s1) | expand(b, s2) for a in m1.bases for b in m2.bases], check=False)

    def unit(self):
        return Matroid((), [0])

    def antipode(self, m):
        return antipode_matroid(m)


M = MatroidFamily()


# -- polytope and antipode ------------------------------------------------------

def _indicator_mask(v: Sequence[Fraction]) -> int:
    out = 0
    for i, x in enumerate(v):
        if x == 1:
            out |= 1 << i
        elif x != 0:
            raise ConsistencyError(f"matroid polytope face has a non 0/1 vertex {v}")
    return out


def face_matroids(m: Matroid) -> list[tuple[Matroid, int]]:
    """(face matroid, dim) for every face of the matroid polytope."""
    out = []
    for rec in enumerate_faces(rank_fn(m)):
        bs = [_indicator_mask(v) for v in rec.vertices]
        fm = Matroid(m.labels, bs, check=False)
        if not satisfies_exchange(fm.bases):
            raise ConsistencyError("face vertices do not form a matroid")
        out.append((fm, rec.dim))
    return out


def antipode_matroid(m: Matroid) -> FormalSum:
    """sum over faces of P(m) of (-1)^c(face) times the face matroid, c = |I| - dim."""
    n = len(m.labels)
    out = FormalSum(family="matroid")
    if n == 0:
        out.add(m, 1)
        return out
    for fm, dim in face_matroids(m):
        out.add(fm, (-1) ** (n - dim))
    return out


def isomorphic(m1: Matroid, m2: Matroid) -> bool:
    if len(m1.labels) != len(m2.labels) or len(m1.bases) != len(m2.bases) or m1.rank != m2.rank:
        return False
    n = len(m1.labels)
    target = set(m2.bases)
    for perm in permutations(range(n)):
        if all(sum(1 << perm[i] for i in bits(b)) in target for b in m1.bases):
            return True
    return False


def iso_classes(ms: Sequence[Matroid]) -> list[list[int]]:
    classes: list[list[int]] = []
    for i, x in enumerate(ms):
        for cl in classes:
            if isomorphic(ms[cl[0]], x):
                cl.append(i)
                break
        else:
            classes.append([i])
    return classes


def antipode_matroid_isoclasses(m: Matroid) -> list[tuple[int, Matroid, int, int]]:
    """Group the antipode by isomorphism class of face matroid.

    Returns (coefficient, representative, class size, dim) with the
    representative the smallest key in its class.
    """
    n = len(m.labels)
    faces = face_matroids(m)
    out = []
    for cl in iso_classes([f for f, _ in faces]):
        rep = min((faces[i][0] for i in cl), key=lambda x: x.key)
        dim = faces[cl[0]][1]
        out.append(((-1) ** (n - dim) * len(cl), rep, len(cl), dim))
    out.sort(key=lambda t: (-t[3], t[1].key))
    return out


def connected_components_count(m: Matroid) -> int:
    """c(m) = |I| - dim P(m)."""
    from .submodular import affine_rank

    vs = [[(b >> i) & 1 for i in range(len(m.labels))] for b in m.bases]
    return len(m.labels) - affine_rank(vs)


# -- invariants ----------------------------------------------------------------

single_basis_character = Character("bjr", lambda m: 1 if len(m.bases) == 1 else 0)
loopless_character = Character("loopless", lambda m: 1 if not loops(m) else 0)


def loops(m: Matroid) -> int:
    used = 0
    for b in m.bases:
        used |= b
    return full_mask(len(m.labels)) & ~used


def bjr_polynomial(m: Matroid) -> PolynomialQ:
    return polynomial_invariant(M, single_basis_character, m)


def _weightings(n: int, k: int):
    return product(range(1, k + 1), repeat=n)


def _y_max_bases(m: Matroid, y: Sequence[int]) -> int:
    weights = [sum(y[i] for i in bits(b)) for b in m.bases]
    top = max(weights)
    return sum(1 for w in weights if w == top)


def bjr_invariant(m: Matroid, n: int) -> int:
    """Number of y: I -> [n] with a unique y-maximum basis (brute force),
    asserted equal to the polynomial invariant."""
    count = sum(1 for y in _weightings(len(m.labels), n) if _y_max_bases(m, y) == 1)
    if bjr_polynomial(m)(n) != count:
        raise ConsistencyError("BJR polynomial disagrees with direct count")
    return count


def bjr_reciprocity(m: Matroid, n: int) -> int:
    """Sum over y: I -> [n] of the number of y-maximum bases, asserted equal to
    (-1)^|I| chi(-n)."""
    total = sum(_y_max_bases(m, y) for y in _weightings(len(m.labels), n))
    if (-1) ** len(m.labels) * bjr_polynomial(m)(-n) != total:
        raise ConsistencyError("BJR reciprocity failed")
    return total


# -- flats, Moebius and Bergman ---------------------------------------------------

class FlatLattice:
    def __init__(self, m: Matroid):
        n = len(m.labels)
        ranks = [m.rank_of(a) for a in range(1 << n)]
        self.flats = [
            a for a in range(1 << n)
            if all(ranks[a | 1 << i] > ranks[a] for i in range(n) if not a >> i & 1)
        ]
        self.flats.sort(key=lambda a: (ranks[a], a))
        self.rank = {f: ranks[f] for f in self.flats}
        self.bottom = self.flats[0]
        self.top = full_mask(n)
        self.mobius = {}
        for x in self.flats:
            if x == self.bottom:
                self.mobius[x] = 1
            else:
                self.mobius[x] = -sum(self.mobius[y] for y in self.flats if y != x and y & ~x == 0 and y in self.mobius)

    def below(self, x):
        return [y for y in self.flats if y != x and y & ~x == 0]

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for x in self.flats:
            for y in self.flats:
                if x != y and x & ~y == 0 and not any(
                    z not in (x, y) and x & ~z == 0 and z & ~y == 0 for z in self.flats
                ):
                    out.append((x, y))
        return out


def flats_lattice(m: Matroid) -> FlatLattice:
    return FlatLattice(m)


def lattice_mobius(m: Matroid) -> int:
    """mu(0, 1) in the lattice of flats, whose bottom is the closure of the empty set."""
    lat = FlatLattice(m)
    return lat.mobius[lat.top]


def mobius_number(m: Matroid) -> int:
    """Moebius number of m, taken to be 0 when m has a loop."""
    if loops(m):
        return 0
    return lattice_mobius(m)


def flag_counts(m: Matroid) -> list[int]:
    """c[d] = number of chains empty = F_0 < F_1 < ... < F_d = I of flats.

    Requires the empty set to be a flat (loopless); otherwise all counts are 0.
    """
    lat = FlatLattice(m)
    if lat.bottom != 0:
        return [0]
    r = m.rank
    out = [1 if lat.top == 0 else 0]
    cur = {0: 1}
    for d in range(1, r + 1):
        nxt: dict[int, int] = {}
        for f, cnt in cur.items():
            for g in lat.flats:
                if g != f and f & ~g == 0:
                    nxt[g] = nxt.get(g, 0) + cnt
        out.append(nxt.get(lat.top, 0))
        cur = nxt
    return out


def bergman_polynomial(m: Matroid) -> PolynomialQ:
    """B(n) = sum_d c_d C(n, d): weak flags of flats of length n."""
    return PolynomialQ.from_binomial_basis(flag_counts(m))


def bergman_reciprocity_check(m: Matroid) -> bool:
    """B(-1) = mu(m) = gamma(s(m)) with gamma = loopless.

    B(-1) = sum_d (-1)^d c_d is Hall's chain count for mu, so no (-1)^r
    factor appears; (-1)^r mu(m) is the nonnegative sphere count.
    """
    b = bergman_polynomial(m)(-1)
    mu = mobius_number(m)
    via_antipode = character_inverse(M, loopless_character)(m)
    return b == mu == via_antipode
