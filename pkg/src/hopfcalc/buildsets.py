"""Building sets (BS), the ripping and sewing monoid W, Loday associahedra,
set partitions (Pi), paths (F) and linear orders (L).

Building sets are simple hypergraphs closed under unions of overlapping
members; their faces are labelled by nested sets, which for graphical
building sets are the tubings of the graph.
"""

from __future__ import annotations

from itertools import combinations
from math import comb, factorial
from typing import Iterable, Sequence

from . import config
from .core import HopfFamily
from .errors import ConsistencyError, InputError, InvalidDecomposition
from .formal import FormalSum, Structure, join_labels
from .graphs import SimpleGraph, connected_components
from .hypergraphs import SimpleHypergraph, hypergraphic_polytope, _restrict
from .sets import bits, compress, expand, full_mask, labels_of, mask_of, popcount, set_partitions
from .submodular import BooleanFn, normally_equivalent, sf_contract, sf_product, sf_restrict


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


# -- building sets -----------------------------------------------------------------

class BuildingSet(SimpleHypergraph):
    """Connected sets as bitmasks; the empty set is implicit."""

    __slots__ = ()
    kind = "building-set"

    def _validate(self):
        super()._validate()
        es = set(self.edges)
        for i in range(len(self.labels)):
            if 1 << i not in es:
                raise InputError(f"singleton {self.labels[i]!r} missing from building set")
        for a, b in combinations(self.edges, 2):
            if a & b and (a | b) not in es:
                raise InputError("union of two overlapping connected sets is missing")

    @classmethod
    def closure(cls, ground: Iterable[str], sets: Iterable[Iterable[str]]):
        """Smallest building set containing the given sets."""
        g = tuple(sorted(set(ground)))
        es = {1 << i for i in range(len(g))}
        es |= {mask_of(g, s) for s in sets}
        es.discard(0)
        changed = True
        while changed:
            changed = False
            for a, b in combinations(sorted(es), 2):
                if a & b and (a | b) not in es:
                    es.add(a | b)
                    changed = True
        return cls(g, sorted(es))

    def components(self) -> list[int]:
        return [e for e in self.edges if not any(f != e and e & ~f == 0 for f in self.edges)]


def bs_contract(b: BuildingSet, s: int) -> BuildingSet:
    """{B in T : A u B in the building set for some A in S}."""
    t = full_mask(len(b.labels)) & ~s
    # any member e splits as (e & S) u (e & T), so B ranges over the nonempty e & T
    out = {compress(e & t, t) for e in b.edges if e & t}
    return BuildingSet(labels_of(b.labels, t), sorted(out))


class BuildingSetFamily(HopfFamily):
    name = "building-set"

    def restrict(self, b, mask):
        return BuildingSet(labels_of(b.labels, mask), _restrict(b.edges, mask))

    def contract(self, b, mask):
        return bs_contract(b, mask)

    def product(self, b1, b2):
        if set(b1.labels) & set(b2.labels):
            raise InvalidDecomposition("building sets overlap")
        labels = tuple(sorted(b1.labels + b2.labels))
        s1, s2 = mask_of(labels, b1.labels), mask_of(labels, b2.labels)
        return BuildingSet(labels, [expand(e, s1) for e in b1.edges] + [expand(e, s2) for e in b2.edges])

    def unit(self):
        return BuildingSet((), ())

    def antipode(self, b):
        return antipode_bs(b)


BS = BuildingSetFamily()


def trivial_building_set(labels: Sequence[str]) -> BuildingSet:
    labels = tuple(sorted(labels))
    return BuildingSet(labels, [1 << i for i in range(len(labels))])


def as_simple_hypergraph(b: BuildingSet) -> SimpleHypergraph:
    return SimpleHypergraph(b.labels, b.edges)


# -- nested sets and B-forests ---------------------------------------------------

def _pairwise_ok(a: int, b: int) -> bool:
    return a & b == 0 or a & ~b == 0 or b & ~a == 0


def _disjoint_unions_avoid(members: Sequence[int], family: set[int]) -> bool:
    """(N2): no union of two or more pairwise disjoint members is connected.

    Under (N1) incomparable members are disjoint, so it suffices to look at
    pairwise disjoint subfamilies.
    """
    ms = list(members)

    def walk(start, union, count):
        for i in range(start, len(ms)):
            m = ms[i]
            if union & m:
                continue
            u = union | m
            if count + 1 >= 2 and u in family:
                return False
            if not walk(i + 1, u, count + 1):
                return False
        return True

    return walk(0, 0, 0)


def nested_sets(b: BuildingSet) -> list[frozenset[int]]:
    """All nested sets, by backtracking over non-component connected sets by size."""
    config.check_enumerable(len(b.labels), "nested sets")
    family = set(b.edges)
    comps = b.components()
    rest = sorted((e for e in b.edges if e not in comps), key=lambda e: (popcount(e), e))
    out = []

    def walk(i, chosen):
        if i == len(rest):
            if _disjoint_unions_avoid(chosen, family):
                out.append(frozenset(chosen))
            return
        walk(i + 1, chosen)
        e = rest[i]
        if all(_pairwise_ok(e, c) for c in chosen):
            chosen.append(e)
            # prune early: a partial nested set must already satisfy (N2)
            if _disjoint_unions_avoid(chosen, family):
                walk(i + 1, chosen)
            chosen.pop()

    walk(0, list(comps))
    return out


class BForest:
    """Rooted forest of a nested set: each member J becomes a node labelled
    by J minus the members strictly inside it."""

    __slots__ = ("members", "parent", "node_label")

    def __init__(self, nested: Iterable[int]):
        self.members = tuple(sorted(nested, key=lambda e: (popcount(e), e)))
        self.parent: dict[int, int | None] = {}
        self.node_label: dict[int, int] = {}
        for j in self.members:
            above = [k for k in self.members if k != j and j & ~k == 0]
            self.parent[j] = min(above, key=popcount) if above else None
            inside = 0
            for k in self.members:
                if k != j and k & ~j == 0:
                    inside |= k
            self.node_label[j] = j & ~inside

    def __len__(self):
        return len(self.members)

    def below(self, j: int) -> int:
        """N_{<S} for the node whose down-set is j."""
        return j & ~self.node_label[j]

    def roots(self) -> list[int]:
        return [j for j in self.members if self.parent[j] is None]

    def check(self, b: BuildingSet) -> None:
        """Assert (F1)-(F3) and that node labels partition the ground set."""
        family = set(b.edges)
        labels = list(self.node_label.values())
        if any(x == 0 for x in labels) or sum(labels) != full_mask(len(b.labels)):
            raise ConsistencyError("forest node labels do not partition the ground set")
        if any(j not in family for j in self.members):
            raise ConsistencyError("(F1) fails")
        for k in range(2, len(self.members) + 1):
            for group in combinations(self.members, k):
                if all(not (x & ~y == 0 or y & ~x == 0) for x, y in combinations(group, 2)):
                    u = 0
                    for x in group:
                        u |= x
                    if u in family:
                        raise ConsistencyError("(F2) fails")
        if sorted(self.roots()) != sorted(b.components()):
            raise ConsistencyError("(F3) fails")


def enumerate_bforests(b: BuildingSet) -> list[BForest]:
    return [BForest(n) for n in nested_sets(b)]


def minor_between(family: HopfFamily, x, lo: int, hi: int):
    """x[lo, hi] = (x|_hi)/lo on hi - lo, by one restriction and one contraction."""
    r = family.restrict(x, hi)
    return family.contract(r, mask_of(r.labels, labels_of(x.labels, lo)))


def bs_of_forest(b: BuildingSet, forest: BForest) -> BuildingSet:
    """Disjoint union over nodes S of the minors between N_{<S} and N_{<=S}."""
    pieces = [minor_between(BS, b, forest.below(j), j) for j in forest.members]
    return BS.product_all(pieces)


def antipode_bs(b: BuildingSet) -> FormalSum:
    """sum over B-forests N of (-1)^|N| B(N)."""
    out = FormalSum(family="building-set")
    if not b.labels:
        out.add(b, 1)
        return out
    for f in enumerate_bforests(b):
        out.add(bs_of_forest(b, f), (-1) ** len(f))
    return out


def nestohedron(b: BuildingSet) -> BooleanFn:
    return hypergraphic_polytope(b)


# -- ripping and sewing ----------------------------------------------------------

def _adjacency(w: SimpleGraph) -> list[int]:
    adj = [0] * len(w.labels)
    for e in w.edges:
        i, j = bits(e)
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def rip(w: SimpleGraph, s: int) -> SimpleGraph:
    """w|_S: the induced subgraph on S."""
    return SimpleGraph(labels_of(w.labels, s), [compress(e, s) for e in w.edges if e & ~s == 0])


def sew(w: SimpleGraph, s: int) -> SimpleGraph:
    """w/_S on T: uv is an edge iff some path from u to v has all inner vertices in S."""
    n = len(w.labels)
    t = full_mask(n) & ~s
    adj = _adjacency(w)
    edges = set()
    for u in bits(t):
        reach = 0
        seen = 1 << u
        frontier = [u]
        while frontier:
            v = frontier.pop()
            for x in bits(adj[v] & ~seen):
                seen |= 1 << x
                if s >> x & 1:
                    frontier.append(x)
                else:
                    reach |= 1 << x
        for x in bits(reach):
            if x > u:
                edges.add(compress((1 << u) | (1 << x), t))
    return SimpleGraph(labels_of(w.labels, t), sorted(edges))


def is_connected_induced(w: SimpleGraph, j: int) -> bool:
    if not j:
        return False
    adj = _adjacency(w)
    start = j & -j
    seen = start
    frontier = [start.bit_length() - 1]
    while frontier:
        v = frontier.pop()
        for x in bits(adj[v] & j & ~seen):
            seen |= 1 << x
            frontier.append(x)
    return seen == j


def tubes(w: SimpleGraph) -> BuildingSet:
    n = len(w.labels)
    return BuildingSet(w.labels, [j for j in range(1, 1 << n) if is_connected_induced(w, j)])


class RipSewFamily(HopfFamily):
    name = "ripping-sewing"

    def restrict(self, w, mask):
        return rip(w, mask)

    def contract(self, w, mask):
        return sew(w, mask)

    def product(self, w1, w2):
        if set(w1.labels) & set(w2.labels):
            raise InvalidDecomposition("graphs overlap")
        labels = tuple(sorted(w1.labels + w2.labels))
        s1, s2 = mask_of(labels, w1.labels), mask_of(labels, w2.labels)
        return SimpleGraph(labels, [expand(e, s1) for e in w1.edges] + [expand(e, s2) for e in w2.edges])

    def unit(self):
        return SimpleGraph((), ())

    def antipode(self, w):
        return antipode_w(w)


W = RipSewFamily()


def enumerate_tubings(w: SimpleGraph) -> list[BForest]:
    """Tubings are the nested sets of the graphical building set."""
    return enumerate_bforests(tubes(w))


def w_of_tubing(w: SimpleGraph, t: BForest) -> SimpleGraph:
    """Disjoint union over tubes tau of (w|_tau)/_{t_<tau}."""
    return W.product_all([minor_between(W, w, t.below(tau), tau) for tau in t.members])


def antipode_w(w: SimpleGraph) -> FormalSum:
    """sum over tubings t of (-1)^|t| w(t)."""
    out = FormalSum(family="ripping-sewing")
    if not w.labels:
        out.add(w, 1)
        return out
    for t in enumerate_tubings(w):
        out.add(w_of_tubing(w, t), (-1) ** len(t))
    return out


# -- Loday associahedra ------------------------------------------------------------

def interval_hypergraph(order: Sequence[str]) -> BuildingSet:
    """Intervals of a linear order; equal to the tubes of the path graph."""
    labels = tuple(sorted(order))
    pos = [mask_of(labels, [x]) for x in order]
    out = []
    for i in range(len(order)):
        m = 0
        for j in range(i, len(order)):
            m |= pos[j]
            out.append(m)
    return BuildingSet(labels, out)


def loday_fn(order: Sequence[str]) -> BooleanFn:
    """Submodular function of the Loday associahedron: the Minkowski sum of
    the simplices of all intervals of ``order``."""
    return hypergraphic_polytope(interval_hypergraph(order))


def maximal_runs(order: Sequence[str], subset: Iterable[str]) -> list[list[str]]:
    keep = set(subset)
    runs, cur = [], []
    for x in order:
        if x in keep:
            cur.append(x)
        elif cur:
            runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    return runs


def loday_coproduct_check(order: Sequence[str], s: Iterable[str]) -> bool:
    """a|_S is normally equivalent to the associahedron of the induced order,
    and a/_S is exactly the product over the maximal runs of T."""
    z = loday_fn(order)
    s = set(s)
    sm = mask_of(z.labels, s)
    sub = [x for x in order if x in s]
    t = [x for x in order if x not in s]
    rest = sf_restrict(z, sm)
    con = sf_contract(z, sm)
    if sub and not normally_equivalent(rest, loday_fn(sub)):
        return False
    prod = None
    for run in maximal_runs(order, t):
        f = loday_fn(run)
        prod = f if prod is None else sf_product(prod, f)
    if prod is None:
        return len(con.labels) == 0
    return con == prod


# -- set partitions ----------------------------------------------------------------

class SetPartition(Structure):
    __slots__ = ("blocks",)
    kind = "set-partition"

    def __init__(self, labels: Sequence[str], blocks: Iterable):
        labels = tuple(labels)
        if list(labels) != sorted(set(labels)):
            raise InputError("ground labels must be distinct and sorted; use build()")
        bs = [b if isinstance(b, int) else mask_of(labels, b) for b in blocks]
        if any(b == 0 for b in bs) or sum(bs) != full_mask(len(labels)) or len(set(bs)) != len(bs):
            raise InputError("blocks do not partition the ground set")
        u = 0
        for b in bs:
            if u & b:
                raise InputError("blocks overlap")
            u |= b
        self.labels = labels
        self.blocks = tuple(sorted(bs, key=lambda b: labels_of(labels, b)))
        self.key = "{" + "|".join(join_labels(labels_of(labels, b)) for b in self.blocks) + "}"

    @classmethod
    def build(cls, blocks: Iterable[Iterable[str]]):
        blocks = [list(b) for b in blocks]
        flat = [x for b in blocks for x in b]
        if len(set(flat)) != len(flat):
            raise InputError("blocks overlap")
        labels = tuple(sorted(flat))
        return cls(labels, [mask_of(labels, b) for b in blocks])


def _restrict_partition(p: SetPartition, s: int) -> SetPartition:
    return SetPartition(labels_of(p.labels, s), [compress(b & s, s) for b in p.blocks if b & s])


class SetPartitionFamily(HopfFamily):
    name = "set-partition"
    cocommutative = True

    def restrict(self, p, mask):
        return _restrict_partition(p, mask)

    def contract(self, p, mask):
        return _restrict_partition(p, full_mask(len(p.labels)) & ~mask)

    def product(self, p1, p2):
        if set(p1.labels) & set(p2.labels):
            raise InvalidDecomposition("partitions overlap")
        labels = tuple(sorted(p1.labels + p2.labels))
        s1, s2 = mask_of(labels, p1.labels), mask_of(labels, p2.labels)
        return SetPartition(labels, [expand(b, s1) for b in p1.blocks] + [expand(b, s2) for b in p2.blocks])

    def unit(self):
        return SetPartition((), ())

    def antipode(self, p):
        return antipode_partition(p)


PI = SetPartitionFamily()


def refinements(p: SetPartition):
    """Yield (rho, [n_i]) with n_i the number of blocks of rho inside block i."""
    per_block = [list(set_partitions(b)) for b in p.blocks]

    def walk(i, acc, counts):
        if i == len(per_block):
            yield SetPartition(p.labels, acc), counts
            return
        for part in per_block[i]:
            yield from walk(i + 1, acc + list(part), counts + [len(part)])

    yield from walk(0, [], [])


def antipode_partition(p: SetPartition) -> FormalSum:
    """sum over refinements rho of (-1)^b(rho) prod n_i! rho."""
    out = FormalSum(family="set-partition")
    for rho, counts in refinements(p):
        c = 1
        for k in counts:
            c *= factorial(k)
        out.add(rho, (-1) ** len(rho.blocks) * c)
    return out


def cliquey_graph(p: SetPartition) -> SimpleGraph:
    edges = []
    for b in p.blocks:
        bs = bits(b)
        edges += [(1 << i) | (1 << j) for i, j in combinations(bs, 2)]
    return SimpleGraph(p.labels, edges)


def partition_of_graph(w: SimpleGraph) -> SetPartition:
    return SetPartition(w.labels, connected_components(len(w.labels), w.edges))


# -- paths -------------------------------------------------------------------------

def _canon_word(word: Sequence[str]) -> tuple[str, ...]:
    w = tuple(word)
    return min(w, w[::-1])


class PathSet(Structure):
    """Vertex-disjoint paths covering the ground set, each stored as the
    smaller of its word and the reversed word."""

    __slots__ = ("paths",)
    kind = "paths"

    def __init__(self, paths: Iterable[Sequence[str]]):
        ps = [_canon_word(p) for p in paths if len(p)]
        flat = [x for p in ps for x in p]
        if len(set(flat)) != len(flat):
            raise InputError("paths share a vertex")
        self.labels = tuple(sorted(flat))
        self.paths = tuple(sorted(ps))
        self.key = "{" + "|".join(join_labels(p) for p in self.paths) + "}"

    @classmethod
    def parse(cls, text: str):
        """From 'ab|cd' (single-character labels)."""
        body = text.strip().strip("{}")
        return cls([list(w) for w in body.split("|") if w])

    def graph(self) -> SimpleGraph:
        edges = []
        for p in self.paths:
            edges += [mask_of(self.labels, [p[i], p[i + 1]]) for i in range(len(p) - 1)]
        return SimpleGraph(self.labels, edges)


def paths_of_graph(w: SimpleGraph) -> PathSet:
    """Inverse of PathSet.graph for graphs whose components are paths."""
    adj = _adjacency(w)
    out = []
    for comp in connected_components(len(w.labels), w.edges):
        vs = bits(comp)
        ends = [v for v in vs if popcount(adj[v]) <= 1]
        if len(vs) > 1 and len(ends) != 2 or any(popcount(adj[v]) > 2 for v in vs):
            raise InputError("graph component is not a path")
        cur, prev, word = ends[0], None, []
        while cur is not None:
            word.append(w.labels[cur])
            nxt = [x for x in bits(adj[cur]) if x != prev]
            prev, cur = cur, (nxt[0] if nxt else None)
        out.append(word)
    return PathSet(out)


class PathFamily(HopfFamily):
    name = "paths"

    def restrict(self, a, mask):
        keep = set(labels_of(a.labels, mask))
        return PathSet([[x for x in p if x in keep] for p in a.paths])

    def contract(self, a, mask):
        keep = set(a.labels) - set(labels_of(a.labels, mask))
        out = []
        for p in a.paths:
            out += maximal_runs(p, keep)
        return PathSet(out)

    def product(self, a, b):
        if set(a.labels) & set(b.labels):
            raise InvalidDecomposition("path sets overlap")
        return PathSet(a.paths + b.paths)

    def unit(self):
        return PathSet(())

    def antipode(self, a):
        return antipode_path(a)


F = PathFamily()


def noncrossing_partitions(n: int) -> list[tuple[int, ...]]:
    """Noncrossing partitions of positions 0..n-1, as tuples of bitmasks."""
    out = []
    for part in set_partitions(full_mask(n)):
        ok = True
        for x, y in combinations(part, 2):
            bx, by = bits(x), bits(y)
            # crossing: a < b < c < d with a, c in x and b, d in y (or swapped)
            for p, q in ((bx, by), (by, bx)):
                for a, c in combinations(p, 2):
                    inner = any(a < b < c for b in q)
                    outer = any(b > c or b < a for b in q)
                    if inner and outer:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(part)
    return out


def adjacent_closure(part: Sequence[int]) -> list[list[int]]:
    """Merge blocks with max S1 = b and min S2 = b + 1 until stable.

    Returns groups of original blocks (each group is one closure block).
    """
    groups = [[b] for b in part]

    def span(g):
        u = 0
        for b in g:
            u |= b
        return u

    changed = True
    while changed:
        changed = False
        for g1, g2 in combinations(groups, 2):
            for a, b in ((g1, g2), (g2, g1)):
                if any(max(bits(x)) + 1 == min(bits(y)) for x in a for y in b):
                    groups.remove(g1)
                    groups.remove(g2)
                    groups.append(g1 + g2)
                    changed = True
                    break
            if changed:
                break
    return sorted(groups, key=lambda g: min(bits(span(g))))


def closure_blocks(part: Sequence[int]) -> list[int]:
    out = []
    for g in adjacent_closure(part):
        u = 0
        for b in g:
            u |= b
        out.append(u)
    return out


def linear_graph(word: Sequence[str], part: Sequence[int]) -> PathSet:
    return PathSet([[word[i] for i in bits(b)] for b in part])


def antipode_single_path(word: Sequence[str]) -> FormalSum:
    """sum over noncrossing partitions pi of (-1)^|pi| C_(closure:pi) l(pi).

    Positions along the word play the role of 1..n.
    """
    out = FormalSum(family="paths")
    for part in noncrossing_partitions(len(word)):
        c = 1
        for g in adjacent_closure(part):
            c *= catalan(len(g))
        out.add(linear_graph(word, part), (-1) ** len(part) * c)
    return out


def antipode_path(a: PathSet) -> FormalSum:
    """Multiplicative extension of the single-path formula."""
    out = FormalSum.single(F.unit(), 1, "paths")
    for p in a.paths:
        nxt = FormalSum(family="paths")
        for x, c1 in out:
            for y, c2 in antipode_single_path(p):
                nxt.add(F.product(x, y), c1 * c2)
        out = nxt
    return out


def linear_graph_of_tubing(a: PathSet, t: BForest) -> PathSet:
    """Each tube contributes the path of its essential vertices in path order."""
    labels = a.labels
    out = []
    for p in a.paths:
        pm = mask_of(labels, p)
        for tau in t.members:
            if tau & ~pm == 0:
                ess = set(labels_of(labels, t.node_label[tau]))
                out.append([x for x in p if x in ess])
    return PathSet(out)


def antipode_path_by_tubings(a: PathSet) -> FormalSum:
    out = FormalSum(family="paths")
    for t in enumerate_tubings(a.graph()):
        out.add(linear_graph_of_tubing(a, t), (-1) ** len(t))
    return out


def associahedron_antipode_levels(n: int) -> dict:
    """Antipode of the standard associahedron at three granularities.

    'faces': one entry per face (dim, factor sizes); 'normal': coefficient per
    noncrossing partition; 'type': coefficient per integer partition. Each is
    computed independently so their coarsenings can be compared.
    """
    from .series import comp_inverse_coefficient, face_types, partitions

    labels = [str(i + 1) for i in range(n)]
    faces = face_types(loday_fn(labels))
    normal = {}
    for part in noncrossing_partitions(n):
        c = 1
        for g in adjacent_closure(part):
            c *= catalan(len(g))
        normal[part] = (-1) ** len(part) * c
    types = {p: comp_inverse_coefficient(p) for p in partitions(n)}
    return {"faces": faces, "normal": normal, "type": types}


# -- linear orders -----------------------------------------------------------------

class LinearOrder(Structure):
    __slots__ = ("word",)
    kind = "linear-order"

    def __init__(self, word: Sequence[str]):
        word = tuple(word)
        if len(set(word)) != len(word):
            raise InputError("repeated element in a linear order")
        self.word = word
        self.labels = tuple(sorted(word))
        self.key = join_labels(word) if word else "()"


class LinearOrderFamily(HopfFamily):
    """Restriction and contraction are the induced orders; the product concatenates."""

    name = "linear-order"
    commutative = False
    cocommutative = True

    def restrict(self, x, mask):
        keep = set(labels_of(x.labels, mask))
        return LinearOrder([a for a in x.word if a in keep])

    def contract(self, x, mask):
        drop = set(labels_of(x.labels, mask))
        return LinearOrder([a for a in x.word if a not in drop])

    def product(self, x, y):
        if set(x.labels) & set(y.labels):
            raise InvalidDecomposition("orders overlap")
        return LinearOrder(x.word + y.word)

    def unit(self):
        return LinearOrder(())

    def antipode(self, x):
        return FormalSum.single(LinearOrder(x.word[::-1]), (-1) ** len(x.word), "linear-order")


L = LinearOrderFamily()
