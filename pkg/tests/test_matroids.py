import random

import pytest
from hypothesis import given, settings, strategies as st

from generators import all_matroids, random_matroid
from hopfcalc.core import takeuchi_antipode
from hopfcalc.errors import InputError
from hopfcalc.formal import FormalSum
from hopfcalc.matroids import (
    M,
    Matroid,
    antipode_matroid_isoclasses,
    bjr_invariant,
    bjr_polynomial,
    bjr_reciprocity,
    bergman_polynomial,
    connected_components_count,
    contraction,
    contraction_iterated,
    face_matroids,
    flag_counts,
    isomorphic,
    lattice_mobius,
    loops,
    mobius_number,
    rank_fn,
    restriction,
    satisfies_exchange,
    uniform,
)
from hopfcalc.submodular import is_submodular

seeds = st.integers(0, 10 ** 6)


def test_labeled_matroid_counts():
    assert [len(all_matroids(n)) for n in range(5)] == [1, 2, 5, 16, 68]


def test_construction_errors():
    with pytest.raises(InputError):
        Matroid.build("abcd", [["a", "b"], ["c", "d"]])
    with pytest.raises(InputError):
        Matroid.build("ab", [["a"], ["a", "b"]])
    with pytest.raises(InputError):
        Matroid.build("ab", [])
    assert not satisfies_exchange([0b0011, 0b1100])


def test_uniform_and_rank_function():
    m = uniform(2, 4)
    assert len(m.bases) == 6 and m.rank == 2
    z = rank_fn(m)
    assert is_submodular(z)
    assert z.values[0b0001] == 1 and z.values[0b0111] == 2


def test_minors_of_uniform():
    m = uniform(2, 3)
    assert restriction(m, 0b011) == uniform(2, ["a", "b"])
    assert contraction(m, 0b001) == uniform(1, ["b", "c"])


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_contraction_direct_matches_iterated(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    m = random_matroid(n, rng)
    s = rng.randint(0, (1 << n) - 1)
    assert contraction(m, s) == contraction_iterated(m, s)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_minors_are_matroids(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 5)
    m = random_matroid(n, rng)
    s = rng.randint(0, (1 << n) - 1)
    assert satisfies_exchange(restriction(m, s).bases)
    assert satisfies_exchange(contraction(m, s).bases)


def test_antipode_of_small_uniform():
    m = uniform(1, 2)
    want = FormalSum([(m, -1), (Matroid.build("ab", [["a"]]), 1), (Matroid.build("ab", [["b"]]), 1)])
    assert M.antipode(m) == want == takeuchi_antipode(M, m)


def test_face_matroids_and_components():
    m = uniform(2, 4)
    faces = face_matroids(m)
    # the hypersimplex Delta(2, 4) is an octahedron
    assert sorted(d for _, d in faces).count(0) == 6
    assert len(faces) == 6 + 12 + 8 + 1
    assert connected_components_count(m) == 1
    assert connected_components_count(Matroid.build("ab", [["a"]])) == 2


def test_isoclass_grouping_counts_faces():
    m = uniform(2, 4)
    groups = antipode_matroid_isoclasses(m)
    assert sum(size for _, _, size, _ in groups) == len(face_matroids(m))
    # octahedron: all vertices isomorphic, all edges isomorphic, triangles of two kinds
    assert [(size, dim) for _, _, size, dim in groups if dim == 2] == [(4, 2), (4, 2)]


def test_isomorphism():
    assert isomorphic(Matroid.build("ab", [["a"]]), Matroid.build("ab", [["b"]]))
    assert not isomorphic(uniform(1, 2), Matroid.build("ab", [["a"]]))


def test_loops():
    m = Matroid.build("abc", [["a"], ["b"]])
    assert loops(m) == 0b100
    assert mobius_number(m) == 0
    assert flag_counts(m) == [0]


def test_bjr_uniform_rank_two():
    m = uniform(2, 3)
    # exactly the weightings with a unique smallest value have a unique maximum basis
    assert bjr_invariant(m, 2) == 3
    assert bjr_polynomial(m)(2) == 3
    assert bjr_reciprocity(m, 1) == 3


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_bjr_brute_force(seed):
    rng = random.Random(seed)
    m = random_matroid(rng.randint(0, 4), rng)
    for n in (1, 2, 3):
        bjr_invariant(m, n)
        bjr_reciprocity(m, n)


def test_mobius_numbers():
    assert lattice_mobius(uniform(2, 3)) == 2
    for n in range(5):
        assert lattice_mobius(uniform(n, n)) == (-1) ** n
    assert lattice_mobius(uniform(3, 4)) == -3


def test_bergman_polynomial_counts_weak_flags():
    m = uniform(2, 3)
    # flags: empty < E, and empty < {x} < E for three atoms
    assert flag_counts(m) == [0, 1, 3]
    b = bergman_polynomial(m)
    assert b.degree == m.rank
    assert [b(n) for n in range(4)] == [0, 1, 5, 12]
