"""Graphs with half-edges (G), simple graphs (SG) and their graphic zonotopes."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .core import Character, HopfFamily, character_power, convolve, polynomial_invariant
from .errors import ConsistencyError, InputError, InvalidDecomposition
from .formal import FormalSum, Structure, join_labels
from .sets import bits, compress, expand, full_mask, labels_of, mask_of, popcount, set_partitions
from .submodular import BooleanFn, from_multiplicities


class Graph(Structure):
    """Multigraph on sorted vertex labels. Edges are bitmasks with one or two
    bits (one bit = half-edge); repetition is multiplicity."""

    __slots__ = ("edges",)
    kind = "graph"

    def __init__(self, labels: Sequence[str], edges: Iterable = ()):
        labels = tuple(labels)
        if list(labels) != sorted(set(labels)):
            raise InputError("vertex labels must be distinct and sorted; use Graph.build")
        n = len(labels)
        es = []
        for e in edges:
            m = e if isinstance(e, int) else mask_of(labels, e)
            if popcount(m) not in (1, 2) or m >> n:
                raise InputError(f"bad edge {e!r}")
            es.append(m)
        self.labels = labels
        self.edges = tuple(sorted(es))
        self.key = self._encode()

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable[Iterable[str]] = ()):
        vs = tuple(sorted(set(vertices)))
        return cls(vs, [mask_of(vs, e) for e in edges])

    def _encode(self) -> str:
        es = " ".join(join_labels(labels_of(self.labels, e)) for e in self.edges)
        return f"{join_labels(self.labels)}[{es}]"

    @property
    def full_edges(self) -> tuple[int, ...]:
        return tuple(e for e in self.edges if popcount(e) == 2)

    @property
    def half_edges(self) -> tuple[int, ...]:
        return tuple(e for e in self.edges if popcount(e) == 1)

    def __str__(self):
        return self.key


class SimpleGraph(Graph):
    __slots__ = ()
    kind = "simple-graph"

    def __init__(self, labels, edges=()):
        super().__init__(labels, edges)
        if self.half_edges:
            raise InputError("simple graphs have no half-edges")
        if len(set(self.edges)) != len(self.edges):
            raise InputError("simple graphs have no repeated edges")


def complete_graph(labels: Sequence[str] | int, cls=SimpleGraph):
    if isinstance(labels, int):
        labels = [str(i + 1) for i in range(labels)]
    labels = tuple(sorted(labels))
    n = len(labels)
    return cls(labels, [(1 << i) | (1 << j) for i, j in combinations(range(n), 2)])


def path_graph(labels: Sequence[str], cls=SimpleGraph):
    """Path through the labels in the given order."""
    vs = tuple(sorted(labels))
    return cls(vs, [mask_of(vs, (labels[i], labels[i + 1])) for i in range(len(labels) - 1)])


def _restrict_edges(edges, s):
    return [compress(e, s) for e in edges if e & ~s == 0]


def _contract_edges(edges, t):
    return [compress(e & t, t) for e in edges if e & t]


class GraphFamily(HopfFamily):
    name = "graph"
    cls = Graph

    def restrict(self, g, mask):
        return self.cls(labels_of(g.labels, mask), _restrict_edges(g.edges, mask))

    def contract(self, g, mask):
        t = full_mask(len(g.labels)) & ~mask
        return self.cls(labels_of(g.labels, t), _contract_edges(g.edges, t))

    def product(self, g, h):
        if set(g.labels) & set(h.labels):
            raise InvalidDecomposition("graphs overlap")
        labels = tuple(sorted(g.labels + h.labels))
        sg, sh = mask_of(labels, g.labels), mask_of(labels, h.labels)
        return self.cls(labels, [expand(e, sg) for e in g.edges] + [expand(e, sh) for e in h.edges])

    def unit(self):
        return self.cls((), ())

    def antipode(self, g):
        return antipode_graph(g)


class SimpleGraphFamily(GraphFamily):
    """Coproduct (g|_S, g|_T); cocommutative."""

    name = "simple-graph"
    cls = SimpleGraph
    cocommutative = True

    def contract(self, g, mask):
        t = full_mask(len(g.labels)) & ~mask
        return self.restrict(g, t)

    def antipode(self, g):
        return antipode_simple_graph(g)


G = GraphFamily()
SG = SimpleGraphFamily()


def simplify(g: Graph) -> SimpleGraph:
    """Drop half-edges and repeated edges (a Hopf quotient G -> SG)."""
    return SimpleGraph(g.labels, sorted(set(g.full_edges)))


def incidence_fn(g: Graph) -> BooleanFn:
    """inc(A) = number of edges and half-edges meeting A."""
    y: dict[int, int] = {}
    for e in g.edges:
        y[e] = y.get(e, 0) + 1
    return from_multiplicities(g.labels, y)


# -- flats and acyclic orientations -----------------------------------------

def _component_of(n: int, edges: Iterable[int]) -> list[int]:
    """comp[i] = mask of the connected component of vertex i."""
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for e in edges:
        b = bits(e)
        if len(b) == 2:
            ra, rb = find(b[0]), find(b[1])
            if ra != rb:
                parent[ra] = rb
    comp = [0] * n
    for i in range(n):
        comp[find(i)] |= 1 << i
    return [comp[find(i)] for i in range(n)]


def connected_components(n: int, edges: Iterable[int]) -> list[int]:
    comps = _component_of(n, edges)
    return sorted(set(comps))


def _is_connected_within(block: int, edges: Sequence[int]) -> bool:
    inside = [e for e in edges if e & ~block == 0 and popcount(e) == 2]
    reach = block & -block
    changed = True
    while changed:
        changed = False
        for e in inside:
            if e & reach and e & ~reach:
                reach |= e
                changed = True
    return reach == block


class Flat:
    """Flat of a graph: the edges inside the blocks of a partition whose blocks
    induce connected subgraphs."""

    __slots__ = ("blocks", "edges")

    def __init__(self, blocks: tuple[int, ...], edges: tuple[int, ...]):
        self.blocks = blocks
        self.edges = edges

    @property
    def c(self) -> int:
        return len(self.blocks)

    def __repr__(self):
        return f"Flat(blocks={self.blocks}, edges={self.edges})"


def flats(g: Graph) -> list[Flat]:
    n = len(g.labels)
    fe = g.full_edges
    out = []
    for part in set_partitions(full_mask(n)):
        if all(_is_connected_within(b, fe) for b in part):
            inside = tuple(e for e in fe if any(e & ~b == 0 for b in part))
            out.append(Flat(part, inside))
    return out


def simple_cycles(n: int, edges: Sequence[int]) -> list[list[int]]:
    """Simple cycles of a multigraph, as lists of edge indices (parallel pairs
    count as 2-cycles)."""
    adj: dict[int, list[tuple[int, int]]] = {i: [] for i in range(n)}
    for idx, e in enumerate(edges):
        b = bits(e)
        if len(b) == 2:
            adj[b[0]].append((b[1], idx))
            adj[b[1]].append((b[0], idx))
    cycles = set()
    for start in range(n):
        stack = [(start, [start], [])]
        while stack:
            v, vpath, epath = stack.pop()
            for w, idx in adj[v]:
                if idx in epath:
                    continue
                if w == start and len(epath) >= 1:
                    cyc = epath + [idx]
                    if len(cyc) >= 2:
                        cycles.add(frozenset(cyc))
                    continue
                if w in vpath or w < start:
                    continue
                stack.append((w, vpath + [w], epath + [idx]))
    return [sorted(c) for c in cycles]


def is_flat_by_cycles(g: Graph, subset: Sequence[int]) -> bool:
    """Literal test: for every cycle with all but one edge in the subset, the
    last edge is in it too. ``subset`` is a list of indices into full_edges."""
    fe = g.full_edges
    chosen = set(subset)
    for cyc in simple_cycles(len(g.labels), fe):
        missing = [i for i in cyc if i not in chosen]
        if len(missing) == 1:
            return False
    return True


def _quotient_pairs(g: Graph, fl: Flat) -> list[tuple[int, int, int]]:
    """Non-flat edges as (edge mask, block index u, block index v) with u < v."""
    where = {}
    for k, b in enumerate(fl.blocks):
        for i in bits(b):
            where[i] = k
    out = []
    for e in g.full_edges:
        i, j = bits(e)
        if where[i] != where[j]:
            u, v = sorted((where[i], where[j]))
            out.append((e, u, v))
    return out


def _acyclic(k: int, arcs: Iterable[tuple[int, int]]) -> bool:
    succ = [[] for _ in range(k)]
    indeg = [0] * k
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    queue = [i for i in range(k) if indeg[i] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == k


def acyclic_orientations(k: int, pairs: Sequence[tuple[int, int]]):
    """Acyclic orientations of a graph on k nodes with the given distinct pairs.

    Yields dicts pair -> (tail, head).
    """
    pairs = sorted(set(pairs))
    for choice in product((0, 1), repeat=len(pairs)):
        arcs = [(u, v) if c == 0 else (v, u) for (u, v), c in zip(pairs, choice)]
        if _acyclic(k, arcs):
            yield dict(zip(pairs, arcs))


def count_acyclic_orientations(n: int, edges: Iterable[int]) -> int:
    pairs = set()
    for e in edges:
        b = bits(e)
        if len(b) == 2:
            pairs.add((b[0], b[1]))
    return sum(1 for _ in acyclic_orientations(n, list(pairs)))


def zonotope_faces(g: Graph) -> list[tuple[Flat, dict, Graph]]:
    """(flat f, acyclic orientation o of g/f, face graph g(f, o)).

    In g(f, o) the flat edges and all half-edges are kept, and every other
    edge becomes a half-edge at the head of its arc in o.
    """
    out = []
    half = g.half_edges
    for fl in flats(g):
        qp = _quotient_pairs(g, fl)
        blocks = fl.blocks
        pairs = [(u, v) for _, u, v in qp]
        for o in acyclic_orientations(len(blocks), pairs):
            new_edges = list(fl.edges) + list(half)
            for e, u, v in qp:
                head = o[(u, v)][1]
                new_edges.append(e & blocks[head])
            out.append((fl, o, Graph(g.labels, new_edges)))
    return out


def antipode_graph(g: Graph) -> FormalSum:
    """sum over flats f and acyclic orientations o of g/f of (-1)^c(f) g(f, o)."""
    out = FormalSum(family="graph")
    if not g.labels:
        out.add(g, 1)
        return out
    for fl, _, h in zonotope_faces(g):
        out.add(h, (-1) ** fl.c)
    return out


def antipode_simple_graph(g: Graph) -> FormalSum:
    """sum over flats f of (-1)^c(f) a(g/f) times the spanning subgraph (I, f)."""
    out = FormalSum(family="simple-graph")
    if not g.labels:
        out.add(g, 1)
        return out
    for fl in flats(g):
        pairs = [(u, v) for _, u, v in _quotient_pairs(g, fl)]
        a = sum(1 for _ in acyclic_orientations(fl.c, pairs))
        out.add(SimpleGraph(g.labels, fl.edges), (-1) ** fl.c * a)
    return out


# -- chromatic invariant -------------------------------------------------------

chromatic_character = Character("chromatic", lambda g: 0 if any(popcount(e) == 2 for e in g.edges) else 1)


def chromatic_polynomial(g: Graph, family: HopfFamily | None = None):
    fam = family or (SG if isinstance(g, SimpleGraph) else G)
    return polynomial_invariant(fam, chromatic_character, g)


def chromatic(g: Graph, n: int) -> int:
    return int(chromatic_polynomial(g)(n))


def count_proper_colorings(g: Graph, n: int) -> int:
    """Brute force over all n^|I| colorings (half-edges impose nothing)."""
    k = len(g.labels)
    fe = [bits(e) for e in g.full_edges]
    count = 0
    for col in product(range(n), repeat=k):
        if all(col[a] != col[b] for a, b in fe):
            count += 1
    return count


def count_compatible_pairs(g: Graph, n: int) -> int:
    """Pairs (c, o) with c: I -> [n] any coloring, o an acyclic orientation, and
    c(tail) >= c(head) on every arc."""
    k = len(g.labels)
    pairs = sorted({tuple(bits(e)) for e in g.full_edges})
    orients = list(acyclic_orientations(k, pairs))
    count = 0
    for col in product(range(n), repeat=k):
        for o in orients:
            if all(col[a] >= col[b] for a, b in o.values()):
                count += 1
    return count


def stanley_reciprocity(g: Graph, n: int) -> int:
    chi = chromatic_polynomial(g)
    lhs = (-1) ** len(g.labels) * chi(-n)
    rhs = count_compatible_pairs(g, n)
    if lhs != rhs:
        raise ConsistencyError(f"chromatic reciprocity failed: {lhs} != {rhs}")
    return int(lhs)


# -- Humpert-Martin ------------------------------------------------------------

def xi(k) -> Character:
    k = Fraction(k)
    return Character(f"xi_{k}", lambda g: k ** len(g.labels))


def humpert_martin(k, c: int, n: int) -> Fraction:
    """(xi_k zeta^c)(K_n) on simple graphs, checked against n! [x^n] e^{kx}(1+x)^c."""
    from .series import exp_series, binomial_series, egf_coefficient

    char = convolve(SG, xi(k), character_power(SG, chromatic_character, c))
    value = char(complete_graph(n))
    target = egf_coefficient(exp_series(k, n).mul(binomial_series(c, n)), n)
    if value != target:
        raise ConsistencyError(f"Humpert-Martin failed at n={n}: {value} != {target}")
    return value
