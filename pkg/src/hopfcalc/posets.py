"""Posets (a Hopf monoid in vector species), their cones, and preposets.

A poset is stored as the set of its strict relations (i, j) meaning i < j,
transitively closed. The coproduct along S is (p|_S, p|_T) when S is a lower
set and zero otherwise.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .core import Character, HopfFamily, polynomial_invariant
from .errors import ConsistencyError, InputError, InvalidDecomposition, NotALattice
from .formal import FormalSum, Structure, join_labels
from .sets import bits, compress, full_mask, labels_of
from .submodular import INF, BooleanFn, is_submodular


def transitive_closure(n: int, rel: Iterable[tuple[int, int]]) -> frozenset:
    up = [0] * n
    for i, j in rel:
        up[i] |= 1 << j
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = up[i]
            for j in bits(up[i]):
                acc |= up[j]
            if acc != up[i]:
                up[i] = acc
                changed = True
    return frozenset((i, j) for i in range(n) for j in bits(up[i]))


class Poset(Structure):
    __slots__ = ("rel",)
    kind = "poset"

    def __init__(self, labels: Sequence[str], rel: Iterable[tuple[int, int]], closed: bool = False):
        labels = tuple(labels)
        if list(labels) != sorted(set(labels)):
            raise InputError("ground labels must be distinct and sorted; use Poset.build")
        n = len(labels)
        r = frozenset(rel) if closed else transitive_closure(n, rel)
        for i, j in r:
            if i == j or (j, i) in r:
                raise InputError("relations are not antisymmetric")
        self.labels = labels
        self.rel = r
        pairs = " ".join(f"{labels[i]}<{labels[j]}" for i, j in sorted(r))
        self.key = f"{join_labels(labels)}[{pairs}]"

    @classmethod
    def build(cls, ground: Iterable[str], relations: Iterable[tuple[str, str]] = ()):
        g = tuple(sorted(set(ground)))
        idx = {a: i for i, a in enumerate(g)}
        try:
            return cls(g, [(idx[a], idx[b]) for a, b in relations])
        except KeyError as e:
            raise InputError(f"unknown element {e}") from None

    def less(self, i: int, j: int) -> bool:
        return (i, j) in self.rel

    def is_lower_set(self, s: int) -> bool:
        return all(s >> i & 1 for i, j in self.rel if s >> j & 1)

    def covers(self) -> list[tuple[int, int]]:
        return cover_relations(self.rel)


def cover_relations(rel: frozenset) -> list[tuple[int, int]]:
    return sorted(
        (i, j) for i, j in rel if not any((i, k) in rel and (k, j) in rel for k in {b for _, b in rel})
    )


def _induced(p: Poset, s: int) -> Poset:
    rel = [(compress(1 << i, s).bit_length() - 1, compress(1 << j, s).bit_length() - 1)
           for i, j in p.rel if s >> i & 1 and s >> j & 1]
    return Poset(labels_of(p.labels, s), rel, closed=True)


class PosetFamily(HopfFamily):
    name = "poset"
    vector_species = True

    def restrict(self, p, mask):
        if not p.is_lower_set(mask):
            return None
        return _induced(p, mask)

    def contract(self, p, mask):
        if not p.is_lower_set(mask):
            return None
        return _induced(p, full_mask(len(p.labels)) & ~mask)

    def product(self, p, q):
        if set(p.labels) & set(q.labels):
            raise InvalidDecomposition("posets overlap")
        labels = tuple(sorted(p.labels + q.labels))
        mp = [labels.index(a) for a in p.labels]
        mq = [labels.index(a) for a in q.labels]
        rel = [(mp[i], mp[j]) for i, j in p.rel] + [(mq[i], mq[j]) for i, j in q.rel]
        return Poset(labels, rel, closed=True)

    def unit(self):
        return Poset((), ())

    def antipode(self, p):
        return antipode_poset(p)


P = PosetFamily()


def chain(labels: Sequence[str]) -> Poset:
    """labels[0] < labels[1] < ..."""
    return Poset.build(labels, [(labels[i], labels[i + 1]) for i in range(len(labels) - 1)])


def antichain(labels: Sequence[str]) -> Poset:
    return Poset.build(labels)


def lower_fn(p: Poset) -> BooleanFn:
    """0 on lower sets, inf elsewhere."""
    n = len(p.labels)
    return BooleanFn(p.labels, [0 if p.is_lower_set(s) else INF for s in range(1 << n)])


def cone_rays(p: Poset) -> list[tuple[str, str]]:
    """Generators e_j - e_i of the poset cone, one per cover i < j; returned as (j, i)."""
    return [(p.labels[j], p.labels[i]) for i, j in p.covers()]


def in_cone(p: Poset, x: Sequence) -> bool:
    """Membership in P(low_p): sum over each lower set <= 0, total = 0."""
    n = len(p.labels)
    if sum(x) != 0:
        return False
    for s in range(1 << n):
        if p.is_lower_set(s) and sum(x[i] for i in bits(s)) > 0:
            return False
    return True


# -- positive subposets -------------------------------------------------------

def _comparability_cycles(n: int, rel: Sequence[tuple[int, int]]) -> list[list[tuple[int, int, int]]]:
    """Simple cycles of the undirected comparability graph. Each cycle is a list
    of (relation index, from, to) steps in one traversal direction."""
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in range(n)}
    for idx, (i, j) in enumerate(rel):
        adj[i].append((j, idx))
        adj[j].append((i, idx))
    seen = set()
    out = []
    for start in range(n):
        stack = [(start, [start], [])]
        while stack:
            v, vpath, steps = stack.pop()
            for w, idx in adj[v]:
                if any(s[0] == idx for s in steps):
                    continue
                if w == start and len(steps) >= 2:
                    cyc = steps + [(idx, v, w)]
                    key = frozenset(s[0] for s in cyc)
                    if key not in seen:
                        seen.add(key)
                        out.append(cyc)
                    continue
                if w in vpath or w < start:
                    continue
                stack.append((w, vpath + [w], steps + [(idx, v, w)]))
    return out


def positive_subposets(p: Poset) -> list[Poset]:
    """Transitive subsets q of the strict relations of p such that, on every
    simple cycle of the comparability graph, q containing all down-edges
    forces q to contain all up-edges, and vice versa."""
    n = len(p.labels)
    rel = sorted(p.rel)
    cycles = _comparability_cycles(n, rel)
    # in a traversal, a step from a to b along relation (i, j) is "up" if a = i
    split = []
    for cyc in cycles:
        ups = [idx for idx, a, b in cyc if rel[idx][0] == a]
        downs = [idx for idx, a, b in cyc if rel[idx][0] == b]
        split.append((ups, downs))
    out = []
    for choice in product((0, 1), repeat=len(rel)):
        q = {rel[k] for k in range(len(rel)) if choice[k]}
        ok = True
        for ups, downs in split:
            has_up = all(choice[k] for k in ups)
            has_down = all(choice[k] for k in downs)
            if has_down != has_up:
                ok = False
                break
        if not ok:
            continue
        if transitive_closure(n, q) != frozenset(q):
            continue
        out.append(Poset(p.labels, q, closed=True))
    return out


def hasse_components(q: Poset) -> int:
    n = len(q.labels)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for i, j in q.covers():
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    return len({find(i) for i in range(n)})


def antipode_poset(p: Poset) -> FormalSum:
    """sum over positive subposets q of (-1)^c(q) q."""
    out = FormalSum(family="poset")
    if not p.labels:
        out.add(p, 1)
        return out
    for q in positive_subposets(p):
        out.add(q, (-1) ** hasse_components(q))
    return out


def face_census(p: Poset) -> list[int]:
    """Number of positive subposets (faces of the poset cone) by dimension |I| - c(q)."""
    n = len(p.labels)
    counts = [0] * (n + 1)
    for q in positive_subposets(p):
        counts[n - hasse_components(q)] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


# -- order polynomial ------------------------------------------------------------

antichain_character = Character("antichain", lambda q: 0 if q.rel else 1)


def order_polynomial(p: Poset):
    return polynomial_invariant(P, antichain_character, p)


def count_strict_maps(p: Poset, n: int, reverse: bool = False) -> int:
    """f: I -> [n] with i < j implying f(i) < f(j) (or > with reverse)."""
    k = len(p.labels)
    count = 0
    for f in product(range(1, n + 1), repeat=k):
        if all((f[i] < f[j]) != reverse for i, j in p.rel):
            count += 1
    return count


def count_weak_maps(p: Poset, n: int) -> int:
    k = len(p.labels)
    return sum(1 for f in product(range(1, n + 1), repeat=k) if all(f[i] <= f[j] for i, j in p.rel))


def order_polynomial_value(p: Poset, n: int) -> int:
    v = order_polynomial(p)(n)
    direct = count_strict_maps(p, n)
    if v != direct:
        raise ConsistencyError(f"order polynomial {v} disagrees with direct count {direct}")
    return int(v)


def poset_reciprocity(p: Poset, n: int) -> int:
    """(-1)^|I| chi(-n), asserted equal to the number of weak order-preserving maps."""
    lhs = (-1) ** len(p.labels) * order_polynomial(p)(-n)
    rhs = count_weak_maps(p, n)
    if lhs != rhs:
        raise ConsistencyError(f"poset reciprocity failed: {lhs} != {rhs}")
    return int(lhs)


# -- preposets -------------------------------------------------------------------

class Preposet:
    """A set partition of I together with a strict partial order on its blocks."""

    __slots__ = ("labels", "blocks", "order")

    def __init__(self, labels: Sequence[str], blocks: Iterable[int], order: Iterable[tuple[int, int]]):
        self.labels = tuple(labels)
        bl = sorted(blocks)
        if any(b == 0 for b in bl):
            raise InputError("empty block")
        acc = 0
        for b in bl:
            if acc & b:
                raise InputError("blocks overlap")
            acc |= b
        if acc != full_mask(len(self.labels)):
            raise InputError("blocks do not cover the ground set")
        self.blocks = tuple(bl)
        ords = set(order)
        for a, b in ords:
            if a not in bl or b not in bl:
                raise InputError("order refers to a non-block")
        idx = {b: k for k, b in enumerate(bl)}
        closed = transitive_closure(len(bl), [(idx[a], idx[b]) for a, b in ords])
        for i, j in closed:
            if i == j or (j, i) in closed:
                raise InputError("block order is not antisymmetric")
        self.order = frozenset((bl[i], bl[j]) for i, j in closed)

    def __eq__(self, other):
        return isinstance(other, Preposet) and (self.labels, self.blocks, self.order) == (
            other.labels, other.blocks, other.order)

    def __hash__(self):
        return hash((self.labels, self.blocks, self.order))

    def lower_sets(self) -> list[int]:
        """Unions of down-closed families of blocks."""
        out = []
        nb = len(self.blocks)
        for pick in range(1 << nb):
            chosen = {self.blocks[k] for k in range(nb) if pick >> k & 1}
            if all(a in chosen for a, b in self.order if b in chosen):
                m = 0
                for b in chosen:
                    m |= b
                out.append(m)
        return sorted(out)

    def lower_fn(self) -> BooleanFn:
        low = set(self.lower_sets())
        return BooleanFn(self.labels, [0 if s in low else INF for s in range(1 << len(self.labels))])

    def __repr__(self):
        bl = "|".join(join_labels(labels_of(self.labels, b)) for b in self.blocks)
        rel = ", ".join(
            f"{join_labels(labels_of(self.labels, a))}<{join_labels(labels_of(self.labels, b))}"
            for a, b in sorted(self.order))
        return f"Preposet({bl}; {rel})"


def preposet_from_01inf(z: BooleanFn) -> Preposet:
    """Recover the preposet whose lower-set function is z.

    L = supp(z) is a distributive lattice of sets. Its join-irreducibles
    (elements covering exactly one element of L) are in bijection with
    blocks: the block of J is J minus the union of the join-irreducibles
    strictly inside J, and blocks are ordered by containment of their J.
    """
    n = len(z.labels)
    vals = z.values
    if any(v not in (0, INF) for v in vals):
        raise InputError("values must be 0 or inf")
    if vals[full_mask(n)] != 0:
        raise InputError("z(I) must be 0")
    if not is_submodular(z):
        raise NotALattice("support is not closed under union and intersection")
    lat = [s for s in range(1 << n) if vals[s] == 0]
    latset = set(lat)

    def lower_covers(a):
        below = [b for b in lat if b != a and b & ~a == 0]
        return [b for b in below if not any(c != b and b & ~c == 0 and c in below for c in below)]

    ji = [a for a in lat if len(lower_covers(a)) == 1]
    blocks = {}
    for a in ji:
        inner = 0
        for b in ji:
            if b != a and b & ~a == 0:
                inner |= b
        blocks[a] = a & ~inner
    order = [(blocks[b], blocks[a]) for a in ji for b in ji if a != b and b & ~a == 0]
    q = Preposet(z.labels, blocks.values(), order)
    if set(q.lower_sets()) != latset:
        raise NotALattice("support is not the lattice of lower sets of a preposet")
    return q


def random_preposet(labels: Sequence[str], rng) -> Preposet:
    """Random set partition with a random order on blocks (by random linear extension)."""
    n = len(labels)
    assign = [rng.randrange(n) for _ in range(n)]
    bl: dict[int, int] = {}
    for i, a in enumerate(assign):
        bl[a] = bl.get(a, 0) | 1 << i
    blocks = list(bl.values())
    rng.shuffle(blocks)
    order = []
    for x in range(len(blocks)):
        for y in range(x + 1, len(blocks)):
            if rng.random() < 0.4:
                order.append((blocks[x], blocks[y]))
    return Preposet(labels, blocks, order)


def all_preposets(labels: Sequence[str]) -> list[Preposet]:
    """Every preposet on the labels (set partition plus a poset on its blocks)."""
    from .sets import set_partitions

    n = len(labels)
    out = []
    for part in set_partitions(full_mask(n)):
        k = len(part)
        pairs = [(a, b) for a in range(k) for b in range(k) if a != b]
        seen = set()
        for choice in product((0, 1), repeat=len(pairs)):
            rel = [pairs[t] for t in range(len(pairs)) if choice[t]]
            cl = transitive_closure(k, rel)
            if cl != frozenset(rel) or any((j, i) in cl for i, j in cl) or any(i == j for i, j in cl):
                continue
            if cl in seen:
                continue
            seen.add(cl)
            out.append(Preposet(labels, part, [(part[i], part[j]) for i, j in cl]))
    return out

