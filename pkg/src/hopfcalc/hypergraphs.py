"""Hypergraphs (HG), simple hypergraphs (SHG) and simplicial complexes (SC).

A hypergraph is a multiset of subsets of I that always contains one copy of
the empty set; it is modelled by the hypergraphic polytope, the Minkowski
sum of the simplices of its edges.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .core import HopfFamily
from .errors import ConsistencyError, InputError, InvalidDecomposition
from .formal import FormalSum, Structure, join_labels
from .graphs import Graph, _quotient_pairs, acyclic_orientations, flats
from .sets import bits, compress, expand, full_mask, labels_of, mask_of, popcount
from .submodular import BooleanFn, enumerate_faces, from_multiplicities


def _edge_sort(labels, e):
    return (popcount(e), labels_of(labels, e))


class Hypergraph(Structure):
    """Multiset of nonempty edges (bitmasks) on sorted labels; the empty edge is implicit."""

    __slots__ = ("edges",)
    kind = "hypergraph"

    def __init__(self, labels: Sequence[str], edges: Iterable = ()):
        labels = tuple(labels)
        if list(labels) != sorted(set(labels)):
            raise InputError("ground labels must be distinct and sorted; use build()")
        n = len(labels)
        es = []
        for e in edges:
            m = e if isinstance(e, int) else mask_of(labels, e)
            if m >> n:
                raise InputError(f"edge {e!r} outside the ground set")
            if m:
                es.append(m)
        self.labels = labels
        self.edges = tuple(sorted(es, key=lambda e: _edge_sort(labels, e)))
        self._validate()
        body = ",".join(["∅"] + [join_labels(labels_of(labels, e)) for e in self.edges])
        self.key = f"{join_labels(labels)}{{{body}}}"

    def _validate(self):
        pass

    @classmethod
    def build(cls, ground: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        g = tuple(sorted(set(ground)))
        return cls(g, [mask_of(g, e) for e in edges])

    @classmethod
    def parse(cls, ground: Iterable[str], text: str):
        """From '{∅,1,2,12}': single-character labels, comma separated."""
        body = text.strip().strip("{}")
        edges = []
        for tok in body.split(","):
            tok = tok.strip()
            if tok in ("∅", ""):
                continue
            edges.append(list(tok))
        return cls.build(ground, edges)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for e in self.edges:
            out[e] = out.get(e, 0) + 1
        return out

    def render(self) -> str:
        return "{" + ",".join(["∅"] + [join_labels(labels_of(self.labels, e)) for e in self.edges]) + "}"

    def __str__(self):
        return self.render()


class SimpleHypergraph(Hypergraph):
    __slots__ = ()
    kind = "simple-hypergraph"

    def _validate(self):
        if len(set(self.edges)) != len(self.edges):
            raise InputError("repeated edge in a simple hypergraph")


class SimplicialComplex(SimpleHypergraph):
    __slots__ = ()
    kind = "simplicial-complex"

    def _validate(self):
        super()._validate()
        es = set(self.edges) | {0}
        for e in self.edges:
            for i in bits(e):
                if e & ~(1 << i) not in es:
                    raise InputError("faces are not closed under taking subsets")

    @classmethod
    def from_facets(cls, ground: Iterable[str], facets: Iterable[Iterable[str]]):
        g = tuple(sorted(set(ground)))
        faces = set()
        for f in facets:
            m = mask_of(g, f)
            s = m
            while s:
                faces.add(s)
                s = (s - 1) & m
        return cls(g, sorted(faces))

    def one_skeleton(self) -> Graph:
        return Graph(self.labels, [e for e in self.edges if popcount(e) == 2])


def _restrict(edges, s):
    return [compress(e, s) for e in edges if e & ~s == 0]


def _contract(edges, t):
    return [compress(e & t, t) for e in edges if e & t]


class HypergraphFamily(HopfFamily):
    name = "hypergraph"
    cls = Hypergraph

    def restrict(self, h, mask):
        return self.cls(labels_of(h.labels, mask), _restrict(h.edges, mask))

    def contract(self, h, mask):
        t = full_mask(len(h.labels)) & ~mask
        es = _contract(h.edges, t)
        if self.cls is not Hypergraph:
            es = sorted(set(es))
        return self.cls(labels_of(h.labels, t), es)

    def product(self, h, k):
        if set(h.labels) & set(k.labels):
            raise InvalidDecomposition("hypergraphs overlap")
        labels = tuple(sorted(h.labels + k.labels))
        sh, sk = mask_of(labels, h.labels), mask_of(labels, k.labels)
        return self.cls(labels, [expand(e, sh) for e in h.edges] + [expand(e, sk) for e in k.edges])

    def unit(self):
        return self.cls((), ())

    def antipode(self, h):
        return antipode_hg(h)


class SimpleHypergraphFamily(HypergraphFamily):
    name = "simple-hypergraph"
    cls = SimpleHypergraph

    def antipode(self, h):
        return antipode_shg(h)


class SimplicialComplexFamily(HypergraphFamily):
    """Coproduct (C|_S, C|_T); SHG contraction agrees with restriction to T."""

    name = "simplicial-complex"
    cls = SimplicialComplex
    cocommutative = True

    def contract(self, c, mask):
        return self.restrict(c, full_mask(len(c.labels)) & ~mask)

    def antipode(self, c):
        return antipode_sc(c)


HG = HypergraphFamily()
SHG = SimpleHypergraphFamily()
SC = SimplicialComplexFamily()


def support(h: Hypergraph) -> SimpleHypergraph:
    return SimpleHypergraph(h.labels, sorted(set(h.edges)))


def hypergraphic_polytope(h: Hypergraph) -> BooleanFn:
    """z(J) = number of edges (with multiplicity) meeting J."""
    return from_multiplicities(h.labels, h.multiplicities())


def from_relational(f: BooleanFn) -> Hypergraph:
    """Inverse of hypergraphic_polytope via the relational test."""
    from .submodular import relational_test

    y = relational_test(f)
    edges = []
    for k, v in sorted(y.items()):
        edges += [k] * v
    return Hypergraph(f.labels, edges)


def hypergraph_components(h: Hypergraph) -> int:
    n = len(h.labels)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for e in h.edges:
        b = bits(e)
        for x in b[1:]:
            ra, rb = find(b[0]), find(x)
            if ra != rb:
                parent[ra] = rb
    return len({find(i) for i in range(n)})


def face_hypergraph(h: Hypergraph, comp: Sequence[int]) -> Hypergraph:
    """Face of Delta_h selected by the composition: each edge is cut down to
    the first block it meets."""
    out = []
    for e in h.edges:
        for block in comp:
            if e & block:
                out.append(e & block)
                break
    return Hypergraph(h.labels, out)


def antipode_hg(h: Hypergraph) -> FormalSum:
    """sum over faces of Delta_h of (-1)^c(G) G, G the face hypergraph."""
    n = len(h.labels)
    out = FormalSum(family="hypergraph")
    if n == 0:
        out.add(h, 1)
        return out
    for rec in enumerate_faces(hypergraphic_polytope(h), with_vertices=False):
        g = face_hypergraph(h, rec.witnesses[0])
        c = hypergraph_components(g)
        if c != n - rec.dim:
            raise ConsistencyError("face hypergraph components disagree with face dimension")
        if g in out:
            raise ConsistencyError("two faces gave the same hypergraph")
        out.add(g, (-1) ** c)
    return out


def antipode_shg(h: Hypergraph) -> FormalSum:
    """Push the face sum through supp."""
    out = FormalSum(family="simple-hypergraph")
    for g, c in antipode_hg(h):
        out.add(support(g), c)
    return out


def subcomplex_of_partition(c: SimplicialComplex, blocks: Sequence[int]) -> SimplicialComplex:
    return SimplicialComplex(c.labels, [e for e in c.edges if any(e & ~b == 0 for b in blocks)])


def antipode_sc(c: SimplicialComplex) -> FormalSum:
    """sum over flats f of the 1-skeleton g of (-1)^c(f) a(g/f) C(f)."""
    out = FormalSum(family="simplicial-complex")
    if not c.labels:
        out.add(c, 1)
        return out
    g = c.one_skeleton()
    for fl in flats(g):
        pairs = [(u, v) for _, u, v in _quotient_pairs(g, fl)]
        a = sum(1 for _ in acyclic_orientations(fl.c, pairs))
        out.add(subcomplex_of_partition(c, fl.blocks), (-1) ** fl.c * a)
    return out
