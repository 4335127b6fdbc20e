import random

import pytest
from hypothesis import given, settings, strategies as st

from generators import labels, random_building_set, random_path_set, random_simple_graph
from hopfcalc.buildsets import (
    BS,
    F,
    L,
    PI,
    W,
    BForest,
    BuildingSet,
    LinearOrder,
    PathSet,
    SetPartition,
    adjacent_closure,
    antipode_bs,
    antipode_partition,
    antipode_path,
    antipode_path_by_tubings,
    antipode_single_path,
    antipode_w,
    associahedron_antipode_levels,
    catalan,
    cliquey_graph,
    closure_blocks,
    enumerate_bforests,
    enumerate_tubings,
    interval_hypergraph,
    is_connected_induced,
    loday_coproduct_check,
    loday_fn,
    maximal_runs,
    nested_sets,
    nestohedron,
    noncrossing_partitions,
    partition_of_graph,
    paths_of_graph,
    refinements,
    rip,
    sew,
    trivial_building_set,
    tubes,
)
from hopfcalc.core import takeuchi_antipode
from hopfcalc.errors import InputError
from hopfcalc.formal import FormalSum
from hopfcalc.graphs import complete_graph, path_graph
from hopfcalc.sets import popcount
from hopfcalc.submodular import enumerate_faces, f_vector

seeds = st.integers(0, 10 ** 6)
B123 = BuildingSet.build("123", [["1", "2"], ["2", "3"], ["1", "2", "3"], ["1"], ["2"], ["3"]])


def test_building_set_validation():
    with pytest.raises(InputError):
        BuildingSet.build("ab", [["a"]])
    with pytest.raises(InputError):
        BuildingSet.build("abc", [["a"], ["b"], ["c"], ["a", "b"], ["b", "c"]])
    b = BuildingSet.closure("abc", [["a", "b"], ["b", "c"]])
    assert b.render() == "{∅,a,b,c,ab,bc,abc}"
    assert b.components() == [0b111]


def test_pentagon_nested_sets():
    ns = nested_sets(B123)
    assert len(ns) == 11
    by_size = sorted(len(n) for n in ns)
    # maximal nested sets are vertices, the lone root is the whole polygon
    assert by_size.count(3) == 5 and by_size.count(2) == 5 and by_size.count(1) == 1
    assert f_vector(enumerate_faces(nestohedron(B123))) == [5, 5, 1]


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_forests_satisfy_axioms_and_count_faces(seed):
    rng = random.Random(seed)
    b = random_building_set(rng.randint(1, 4), rng)
    forests = enumerate_bforests(b)
    for t in forests:
        t.check(b)
    assert len(forests) == len(enumerate_faces(nestohedron(b), with_vertices=False))


def test_trivial_building_set_antipode():
    b = trivial_building_set("ab")
    assert antipode_bs(b) == FormalSum.single(b, 1)


def test_bforest_structure():
    t = BForest([0b111, 0b011, 0b001])
    assert t.roots() == [0b111]
    assert t.node_label == {0b001: 0b001, 0b011: 0b010, 0b111: 0b100}
    assert t.below(0b111) == 0b011


def test_bs_antipode_matches_takeuchi():
    assert antipode_bs(B123) == takeuchi_antipode(BS, B123)


# -- graph associahedra -------------------------------------------------------------

def test_rip_and_sew():
    w = path_graph(list("abc"))
    assert rip(w, 0b011).key == "ab[ab]"
    # sewing through b joins a and c
    assert sew(w, 0b010).key == "ac[ac]"
    assert sew(w, 0b001).key == "bc[bc]"


def test_tubes():
    w = path_graph(list("abc"))
    assert is_connected_induced(w, 0b011) and not is_connected_induced(w, 0b101)
    assert tubes(w).render() == "{∅,a,b,c,ab,bc,abc}"


@pytest.mark.parametrize("graph,count", [(complete_graph(4), 75), (path_graph(list("abc")), 11), (path_graph(list("abcd")), 45)])
def test_tubing_counts(graph, count):
    assert len(enumerate_tubings(graph)) == count


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_w_antipode_matches_takeuchi(seed):
    rng = random.Random(seed)
    w = random_simple_graph(rng.randint(0, 4), rng)
    assert antipode_w(w) == takeuchi_antipode(W, w)


# -- loday associahedra ----------------------------------------------------------

def test_interval_hypergraph_and_runs():
    assert interval_hypergraph(list("abc")).render() == "{∅,a,b,c,ab,bc,abc}"
    assert maximal_runs(list("abcde"), "abde") == [["a", "b"], ["d", "e"]]
    assert f_vector(enumerate_faces(loday_fn(list("abcd")))) == [14, 21, 9, 1]


@pytest.mark.parametrize("s", ["a", "b", "ac", "bd", "abd", "bc"])
def test_loday_coproduct(s):
    assert loday_coproduct_check(list("abcd"), s)


def test_associahedron_levels_agree():
    for n in range(1, 6):
        lv = associahedron_antipode_levels(n)
        by_type: dict = {}
        for d, sizes in lv["faces"]:
            by_type[sizes] = by_type.get(sizes, 0) + (-1) ** (n - d)
        by_normal: dict = {}
        for part, c in lv["normal"].items():
            mu = tuple(sorted((popcount(b) for b in part), reverse=True))
            by_normal[mu] = by_normal.get(mu, 0) + c
        assert by_type == by_normal == {k: v for k, v in lv["type"].items()}


# -- set partitions ------------------------------------------------------------------

def test_partition_construction():
    p = SetPartition.build([["c", "a"], ["b"]])
    assert p.key == "{ac|b}"
    with pytest.raises(InputError):
        SetPartition.build([["a", "b"], ["b"]])


def test_partition_antipode():
    p = SetPartition.build([["a", "b"]])
    assert antipode_partition(p).render() == "-1*{ab} +2*{a|b}"
    q = SetPartition.build([["a", "b"], ["c", "d", "e"]])
    s = antipode_partition(q)
    assert len(s) == 2 * 5
    assert s == takeuchi_antipode(PI, q)
    _, raw = takeuchi_antipode(PI, q, with_count=True)
    assert raw == 541


def test_refinements_count():
    p = SetPartition.build([["a", "b", "c"], ["d"]])
    assert sum(1 for _ in refinements(p)) == 5


def test_cliquey_round_trip():
    p = SetPartition.build([["a", "b", "c"], ["d"]])
    assert partition_of_graph(cliquey_graph(p)) == p
    assert len(cliquey_graph(p).edges) == 3


# -- paths -----------------------------------------------------------------------------

def test_path_canonical_form():
    assert PathSet([list("cba")]) == PathSet([list("abc")])
    assert PathSet.parse("dc|ab").key == "{ab|cd}"
    with pytest.raises(InputError):
        PathSet([list("ab"), list("bc")])
    g = PathSet.parse("acb").graph()
    assert paths_of_graph(g) == PathSet.parse("acb")


def test_path_contraction_keeps_runs():
    a = PathSet.parse("abcde")
    assert F.contract(a, 0b00100).key == "{ab|de}"
    assert F.restrict(a, 0b10101).key == "{ace}"


def test_noncrossing_counts():
    for n in range(7):
        assert len(noncrossing_partitions(n)) == catalan(n)


def test_adjacent_closure_example():
    # positions 1..8 as bits 0..7: 1|26|3|45|78 closes to 12678|345
    part = (0b1, 0b100010, 0b100, 0b11000, 0b11000000)
    assert sorted(closure_blocks(part)) == sorted([0b11100011, 0b11100])
    assert sorted(len(g) for g in adjacent_closure(part)) == [2, 3]


def test_single_path_antipode():
    s = antipode_single_path(list("abcd"))
    assert len(s) == 14
    a = PathSet.parse("abcd")
    assert antipode_path(a) == takeuchi_antipode(F, a) == antipode_path_by_tubings(a)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_path_antipode_routes(seed):
    rng = random.Random(seed)
    a = random_path_set(rng.randint(1, 5), rng)
    assert antipode_path(a) == antipode_path_by_tubings(a)


# -- linear orders ---------------------------------------------------------------------

def test_linear_order_antipode():
    x = LinearOrder(list("abc"))
    assert L.antipode(x) == FormalSum.single(LinearOrder(list("cba")), -1)
    assert L.antipode(x) == takeuchi_antipode(L, x)
    assert L.product(LinearOrder("a"), LinearOrder("b")) != L.product(LinearOrder("b"), LinearOrder("a"))


@pytest.mark.parametrize("n", range(5))
def test_linear_order_oracle(n):
    from itertools import permutations

    for w in permutations(labels(n)):
        x = LinearOrder(w)
        assert L.antipode(x) == takeuchi_antipode(L, x)
