"""Boolean and submodular functions, and the base polytopes they cut out.

A generalized permutahedron is stored as its submodular function, a dense
table indexed by bitmask. Faces are found either as products of minors
along set compositions or through greedy vertices; the two descriptions are
used to cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterable, Sequence

from . import config
from .core import Character, HopfFamily, polynomial_invariant
from .errors import (
    ContractionUndefined,
    ConsistencyError,
    InputError,
    InvalidDecomposition,
    NotRelational,
    UnboundedDirection,
)
from .formal import FormalSum, Structure, fmt_coef, join_labels
from .sets import (
    bits,
    compositions,
    compress,
    expand,
    full_mask,
    labels_of,
    mask_of,
    popcount,
    submasks,
)

INF = math.inf


def _val(v):
    if v == "inf" or v == INF:
        return INF
    return Fraction(v)


def _fmt(v) -> str:
    return "inf" if v == INF else fmt_coef(v)


class BooleanFn(Structure):
    """z: 2^I -> Q u {inf} with z(empty) = 0, stored as a tuple indexed by bitmask."""

    __slots__ = ("values",)
    kind = "gp"

    def __init__(self, labels: Sequence[str], values: Sequence):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise InputError("duplicate labels")
        if list(labels) != sorted(labels):
            order = sorted(range(len(labels)), key=lambda i: labels[i])
            old = list(values)
            values = [0] * len(old)
            for m in range(len(old)):
                nm = 0
                for new_i, old_i in enumerate(order):
                    if m >> old_i & 1:
                        nm |= 1 << new_i
                values[nm] = old[m]
            labels = tuple(labels[i] for i in order)
        if len(values) != 1 << len(labels):
            raise InputError(f"need {1 << len(labels)} values, got {len(values)}")
        vals = tuple(_val(v) for v in values)
        if vals[0] != 0:
            raise InputError("z(empty set) must be 0")
        self.labels = labels
        self.values = vals
        self.key = ",".join(labels) + ":" + " ".join(_fmt(v) for v in vals)

    @classmethod
    def from_function(cls, labels: Sequence[str], f: Callable[[frozenset], object]) -> "BooleanFn":
        labels = tuple(sorted(labels))
        return cls(labels, [f(frozenset(labels_of(labels, m))) for m in range(1 << len(labels))])

    @classmethod
    def from_pairs(cls, labels: Sequence[str], pairs: Iterable) -> "BooleanFn":
        """Build from (subset, value) pairs; every subset must be listed, except
        that the empty set defaults to 0."""
        labels = tuple(sorted(labels))
        table: dict[int, object] = {}
        for subset, v in pairs:
            m = mask_of(labels, subset)
            if m in table:
                raise InputError(f"subset {sorted(subset)} listed twice")
            table[m] = v
        table.setdefault(0, 0)
        missing = [m for m in range(1 << len(labels)) if m not in table]
        if missing:
            raise InputError(f"value missing for subset {list(labels_of(labels, missing[0]))}")
        return cls(labels, [table[m] for m in range(1 << len(labels))])

    def __call__(self, m: int):
        return self.values[m]

    def at(self, subset: Iterable[str]):
        return self.values[mask_of(self.labels, subset)]

    @property
    def extended(self) -> bool:
        return any(v == INF for v in self.values)

    @property
    def bounded(self) -> bool:
        return not self.extended

    def scale(self, k) -> "BooleanFn":
        k = Fraction(k)
        return BooleanFn(self.labels, [v if v == INF else v * k for v in self.values])

    def __add__(self, other: "BooleanFn") -> "BooleanFn":
        """Pointwise sum; on base polytopes this is the Minkowski sum."""
        if self.labels != other.labels:
            raise InputError("Minkowski sum needs a common ground set")
        return BooleanFn(self.labels, [a + b for a, b in zip(self.values, other.values)])

    def permuted(self, mapping: dict) -> "BooleanFn":
        """Relabel by ``mapping`` (old label -> new label)."""
        new_labels = [mapping[a] for a in self.labels]
        return BooleanFn(new_labels, self.values)

    def render(self) -> str:
        parts = []
        for m in range(1, 1 << len(self.labels)):
            parts.append(f"{join_labels(labels_of(self.labels, m))}={_fmt(self.values[m])}")
        return "z[" + " ".join(parts) + "]"


# -- Hopf structure on Boolean functions ------------------------------------

def sf_restrict(z: BooleanFn, s: int) -> BooleanFn:
    sub = labels_of(z.labels, s)
    return BooleanFn(sub, [z.values[expand(e, s)] for e in range(1 << len(sub))])


def sf_contract(z: BooleanFn, s: int) -> BooleanFn:
    zs = z.values[s]
    if zs == INF:
        raise ContractionUndefined(f"z({''.join(labels_of(z.labels, s))}) is infinite")
    t = full_mask(len(z.labels)) & ~s
    sub = labels_of(z.labels, t)
    vals = []
    for e in range(1 << len(sub)):
        v = z.values[expand(e, t) | s]
        vals.append(v if v == INF else v - zs)
    return BooleanFn(sub, vals)


def sf_product(u: BooleanFn, v: BooleanFn) -> BooleanFn:
    if set(u.labels) & set(v.labels):
        raise InvalidDecomposition("product needs disjoint ground sets")
    labels = tuple(sorted(u.labels + v.labels))
    su = mask_of(labels, u.labels)
    sv = mask_of(labels, v.labels)
    vals = []
    for e in range(1 << len(labels)):
        vals.append(u.values[compress(e & su, su)] + v.values[compress(e & sv, sv)])
    return BooleanFn(labels, vals)


def empty_fn() -> BooleanFn:
    return BooleanFn((), [0])


class GPFamily(HopfFamily):
    """Generalized permutahedra, extended to {0, inf}-valued cones where needed."""

    name = "gp"

    def restrict(self, x: BooleanFn, mask: int):
        if x.values[mask] == INF:
            return None
        return sf_restrict(x, mask)

    def contract(self, x: BooleanFn, mask: int):
        if x.values[mask] == INF:
            return None
        return sf_contract(x, mask)

    def product(self, x, y):
        return sf_product(x, y)

    def unit(self):
        return empty_fn()

    def antipode(self, x):
        return antipode_gp(x)

    def render(self, x):
        return x.render()


GP = GPFamily()


# -- standard examples ------------------------------------------------------

def permutahedron(labels: Sequence[str] | int) -> BooleanFn:
    """z(A) = n + (n-1) + ... + (n-|A|+1); vertices are the permutations of (n,...,1)."""
    if isinstance(labels, int):
        labels = [str(i + 1) for i in range(labels)]
    n = len(labels)
    return BooleanFn.from_function(labels, lambda a: sum(n - k for k in range(len(a))))


def simplex(labels: Sequence[str], face: Iterable[str]) -> BooleanFn:
    """Delta_J: z(A) = 1 if A meets J."""
    face = frozenset(face)
    return BooleanFn.from_function(labels, lambda a: 1 if a & face else 0)


def modular(labels: Sequence[str], coords: dict) -> BooleanFn:
    return BooleanFn.from_function(labels, lambda a: sum(Fraction(coords[i]) for i in a))


def point(labels: Sequence[str]) -> BooleanFn:
    return BooleanFn.from_function(labels, lambda a: 0)


# -- tests on z -------------------------------------------------------------

def is_submodular(z: BooleanFn) -> bool:
    """Local exchange test z(A+i) + z(A+j) >= z(A+i+j) + z(A) on finite values.

    For extended functions the finite-valued sets must also be closed under
    union and intersection; this is checked directly.
    """
    n = len(z.labels)
    vals = z.values
    if vals[0] != 0:
        return False
    if z.extended:
        fin = [m for m in range(1 << n) if vals[m] != INF]
        for a in fin:
            for b in fin:
                if vals[a | b] == INF or vals[a & b] == INF:
                    return False
                if vals[a | b] + vals[a & b] > vals[a] + vals[b]:
                    return False
        return True
    for a in range(1 << n):
        free = [i for i in range(n) if not a >> i & 1]
        for x in range(len(free)):
            ai = a | 1 << free[x]
            for y in range(x + 1, len(free)):
                aj = a | 1 << free[y]
                if vals[ai] + vals[aj] < vals[ai | aj] + vals[a]:
                    return False
    return True


def is_submodular_bruteforce(z: BooleanFn) -> bool:
    n = len(z.labels)
    v = z.values
    for a in range(1 << n):
        for b in range(1 << n):
            if v[a] == INF or v[b] == INF:
                continue
            if v[a | b] + v[a & b] > v[a] + v[b]:
                return False
    return True


def is_modular(z: BooleanFn) -> bool:
    """z(A) = sum of z({i}) over A, i.e. P(z) is a single point."""
    if z.extended:
        return all(v == 0 for v in z.values)
    n = len(z.labels)
    single = [z.values[1 << i] for i in range(n)]
    return all(z.values[m] == sum((single[i] for i in bits(m)), Fraction(0)) for m in range(1 << n))


def separators(z: BooleanFn) -> list[int]:
    """Masks A with z(E) = z(E & A) + z(E - A) for all E."""
    n = len(z.labels)
    full = full_mask(n)
    v = z.values
    out = []
    for a in range(1 << n):
        ok = True
        for e in range(1 << n):
            if v[e] != v[e & a] + v[e & ~a & full]:
                ok = False
                break
        if ok:
            out.append(a)
    return out


def components(z: BooleanFn) -> list[int]:
    """Finest partition of I into separators (the factors of P(z) as a product)."""
    n = len(z.labels)
    seps = separators(z)
    comps = []
    seen = 0
    for i in range(n):
        if seen >> i & 1:
            continue
        c = full_mask(n)
        for s in seps:
            if s >> i & 1:
                c &= s
        comps.append(c)
        seen |= c
    return comps


# -- vertices and faces -----------------------------------------------------

def _greedy(vals, order: Sequence[int], n: int) -> tuple:
    x = [Fraction(0)] * n
    prefix = 0
    prev = Fraction(0)
    for i in order:
        prefix |= 1 << i
        cur = vals[prefix]
        if cur == INF:
            raise UnboundedDirection("greedy prefix has infinite value")
        x[i] = cur - prev
        prev = cur
    return tuple(x)


def greedy_vertex(z: BooleanFn, order: Sequence[str]) -> dict:
    """Vertex maximizing any y that is strictly decreasing along ``order``."""
    idx = [z.labels.index(a) for a in order]
    if sorted(idx) != list(range(len(z.labels))):
        raise InputError("order must list every label once")
    x = _greedy(z.values, idx, len(z.labels))
    return dict(zip(z.labels, x))


def vertices(z: BooleanFn) -> set[tuple]:
    """All vertices of P(z), as coordinate tuples in label order."""
    n = len(z.labels)
    config.check_enumerable(n, "vertex enumeration")
    out = set()
    for order in permutations(range(n)):
        try:
            out.add(_greedy(z.values, order, n))
        except UnboundedDirection:
            continue
    return out


def _refinements(comp: Sequence[int]):
    """Linear orders (as index tuples) refining a composition."""
    if not comp:
        yield ()
        return
    head = bits(comp[0])
    for p in permutations(head):
        for rest in _refinements(comp[1:]):
            yield p + rest


def face_vertices(z: BooleanFn, comp: Sequence[int]) -> list[tuple]:
    n = len(z.labels)
    out = set()
    for order in _refinements(comp):
        out.add(_greedy(z.values, order, n))
    return sorted(out)


def face_table(z: BooleanFn, comp: Sequence[int]):
    """Values of the product of minors along ``comp``; None if some prefix is infinite."""
    n = len(z.labels)
    vals = z.values
    parts = []
    prefix = 0
    for block in comp:
        base = vals[prefix]
        if base == INF:
            return None
        local = {}
        for e in submasks(block):
            w = vals[e | prefix]
            local[e] = w if w == INF else w - base
        parts.append((block, local))
        prefix |= block
    if vals[prefix] == INF:
        return None
    out = []
    for e in range(1 << n):
        s = Fraction(0)
        for block, local in parts:
            s = s + local[e & block]
        out.append(s)
    return tuple(out)


def face_fn(z: BooleanFn, comp: Sequence[int]) -> BooleanFn:
    """The face of P(z) maximized by directions in the braid cone of ``comp``."""
    t = face_table(z, comp)
    if t is None:
        raise UnboundedDirection("composition has an infinite prefix")
    return BooleanFn(z.labels, t)


def affine_rank(points: Sequence[Sequence], stop: int | None = None) -> int:
    """Dimension of the affine hull of exact rational points."""
    if not points:
        return -1
    base = points[0]
    rows = [[Fraction(p[i]) - base[i] for i in range(len(base))] for p in points[1:]]
    rank = 0
    ncols = len(base)
    pivots: list[tuple[int, list]] = []
    for r in rows:
        r = list(r)
        for col, prow in pivots:
            if r[col]:
                f = r[col] / prow[col]
                r = [a - f * b for a, b in zip(r, prow)]
        for col in range(ncols):
            if r[col]:
                pivots.append((col, r))
                rank += 1
                break
        if stop is not None and rank >= stop:
            break
    return rank


@dataclass
class FaceRecord:
    face_fn: BooleanFn
    dim: int
    witnesses: list = field(default_factory=list)
    vertices: list | None = None

    @property
    def nvertices(self) -> int:
        return len(self.vertices) if self.vertices is not None else 0


def enumerate_faces(z: BooleanFn, with_vertices: bool = True) -> list[FaceRecord]:
    """One record per distinct nonempty face, in order of first witness.

    For bounded z the dimension is the affine rank of the face's greedy
    vertices. For extended z (cones) only compositions with finite prefixes
    give faces, and the dimension is |I| minus the number of components of
    the face function.
    """
    n = len(z.labels)
    config.check_enumerable(n, "face enumeration")
    by_table: dict[tuple, FaceRecord] = {}
    order: list[FaceRecord] = []
    for comp in compositions(full_mask(n)):
        t = face_table(z, comp)
        if t is None:
            continue
        rec = by_table.get(t)
        if rec is None:
            f = BooleanFn(z.labels, t)
            if z.bounded:
                vs = face_vertices(z, comp)
                dim = affine_rank(vs, stop=n - len(comp))
                rec = FaceRecord(f, dim, [], vs if with_vertices else None)
            else:
                rec = FaceRecord(f, n - len(components(f)), [], None)
            by_table[t] = rec
            order.append(rec)
        rec.witnesses.append(comp)
    return order


def f_vector(faces: Sequence[FaceRecord]) -> list[int]:
    top = max(f.dim for f in faces)
    out = [0] * (top + 1)
    for f in faces:
        out[f.dim] += 1
    return out


def face_count_by_vertices(faces: Sequence[FaceRecord], dim: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for f in faces:
        if f.dim == dim:
            out[f.nvertices] = out.get(f.nvertices, 0) + 1
    return dict(sorted(out.items()))


def dimension(z: BooleanFn) -> int:
    """dim P(z) = |I| - number of components."""
    return len(z.labels) - len(components(z))


def antipode_gp(z: BooleanFn) -> FormalSum:
    """(-1)^|I| times the alternating sum of all faces, graded by dimension."""
    n = len(z.labels)
    out = FormalSum(family="gp")
    if n == 0:
        out.add(z, 1)
        return out
    for rec in enumerate_faces(z, with_vertices=False):
        out.add(rec.face_fn, (-1) ** (n + rec.dim))
    return out


# -- normal fans --------------------------------------------------------------

def normal_key(z: BooleanFn) -> tuple:
    """Partition of the set compositions of I by the face they select.

    Encoded as, for each composition in enumeration order, the index of its
    face in order of first appearance (-1 for an unbounded direction).
    """
    n = len(z.labels)
    config.check_enumerable(n, "normal fan")
    ids: dict[tuple, int] = {}
    out = []
    for comp in compositions(full_mask(n)):
        t = face_table(z, comp)
        if t is None:
            out.append(-1)
            continue
        out.append(ids.setdefault(t, len(ids)))
    return tuple(out)


def chamber_key(z: BooleanFn) -> tuple:
    """Cheaper normal fan encoding for bounded z.

    The fan coarsens the braid fan, so it is fixed by which vertex each
    chamber (linear order) selects. Indices are by first appearance.
    """
    if z.extended:
        return normal_key(z)
    n = len(z.labels)
    config.check_enumerable(n, "normal fan")
    ids: dict[tuple, int] = {}
    return tuple(ids.setdefault(_greedy(z.values, order, n), len(ids)) for order in permutations(range(n)))


def normal_classes(keys_by_comp: tuple) -> int:
    return len({k for k in keys_by_comp if k >= 0})


def normally_equivalent(z1: BooleanFn, z2: BooleanFn) -> bool:
    if z1.labels != z2.labels:
        raise InputError("normal equivalence needs a common ground set")
    return normal_key(z1) == normal_key(z2)


def quasinormally_equivalent(z1: BooleanFn, z2: BooleanFn) -> bool:
    if len(z1.labels) != len(z2.labels):
        return False
    target = normal_key(z2)
    for perm in permutations(z2.labels):
        w = z1.permuted(dict(zip(z1.labels, perm)))
        if w.labels != z2.labels:
            continue
        if normal_key(w) == target:
            return True
    return False


# -- basic character and invariant ------------------------------------------

basic_character = Character("basic", lambda z: 1 if is_modular(z) else 0)


def maxface_composition(z: BooleanFn, y: Sequence) -> tuple[int, ...]:
    """Level sets of y (in label order) from the largest value down."""
    levels: dict = {}
    for i, v in enumerate(y):
        levels[v] = levels.get(v, 0) | 1 << i
    return tuple(levels[v] for v in sorted(levels, reverse=True))


def _weightings(n: int, k: int):
    if n == 0:
        yield ()
        return
    for rest in _weightings(n - 1, k):
        for v in range(1, k + 1):
            yield rest + (v,)


def basic_invariant(z: BooleanFn, n: int) -> int:
    """Number of y: I -> [n] whose maximal face of P(z) is a vertex."""
    count = 0
    for y in _weightings(len(z.labels), n):
        comp = maxface_composition(z, y)
        if is_modular(face_fn(z, comp)):
            count += 1
    return count


def basic_reciprocity(z: BooleanFn, n: int) -> int:
    """Sum over y: I -> [n] of the number of vertices of the y-maximal face.

    Checked against (-1)^|I| chi(-n) for the basic invariant polynomial.
    """
    total = 0
    for y in _weightings(len(z.labels), n):
        comp = maxface_composition(z, y)
        total += len(face_vertices(z, comp))
    chi = polynomial_invariant(GP, basic_character, z)
    if (-1) ** len(z.labels) * chi(-n) != total:
        raise ConsistencyError("basic reciprocity failed")
    return total


# -- hypergraphic functions -------------------------------------------------

def from_multiplicities(labels: Sequence[str], y: dict) -> BooleanFn:
    """z(J) = sum of y(K) over K meeting J; P(z) = sum of y(K) Delta_K."""
    labels = tuple(sorted(labels))
    n = len(labels)
    ym = {}
    for k, v in y.items():
        m = k if isinstance(k, int) else mask_of(labels, k)
        if m:
            ym[m] = ym.get(m, 0) + v
    return BooleanFn(labels, [sum((v for k, v in ym.items() if k & j), 0) for j in range(1 << n)])


def relational_test(f: BooleanFn) -> dict[int, int]:
    """Recover y with f(A) = sum_{K meets A} y(K), or raise NotRelational.

    y(K) = -sum_{B subset K} (-1)^{|K-B|} f(I - B) for nonempty K. The
    certificate on failure is (mask, value) of a negative multiplicity, or
    the offending subset for non-integral input.
    """
    n = len(f.labels)
    full = full_mask(n)
    for m, v in enumerate(f.values):
        if v == INF:
            raise NotRelational("infinite value", m)
        if Fraction(v).denominator != 1:
            raise NotRelational(f"non-integral value at {labels_of(f.labels, m)}", m)
    y: dict[int, int] = {}
    for k in range(1, 1 << n):
        s = 0
        pk = popcount(k)
        for b in submasks(k):
            s += (-1) ** (pk - popcount(b)) * f.values[full & ~b]
        val = -s
        if val < 0:
            raise NotRelational(
                f"alternating sum at {''.join(labels_of(f.labels, full & ~k))} is positive", (k, int(val))
            )
        if val:
            y[k] = int(val)
    return y


def preposet_from_01inf(z: BooleanFn):
    from .posets import preposet_from_01inf as build

    return build(z)
