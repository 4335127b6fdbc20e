from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from hopfcalc.errors import InvalidComposition
from hopfcalc.formal import FormalSum, fmt_coef, join_labels
from hopfcalc.graphs import SimpleGraph
from hopfcalc.polynomial import PolynomialQ, binomial_poly, interpolate
from hopfcalc.sets import (
    binom,
    bits,
    check_composition,
    compositions,
    compress,
    expand,
    full_mask,
    labels_of,
    mask_of,
    ordered_bell,
    popcount,
    set_partitions,
    submasks,
)


def fubini(n):
    a = [1]
    for k in range(1, n + 1):
        a.append(sum(comb(k, j) * a[k - j] for j in range(1, k + 1)))
    return a[n]


def test_bits_and_popcount():
    assert bits(0b1011) == [0, 1, 3]
    assert popcount(0b1011) == 3
    assert full_mask(4) == 15
    assert submasks(0b101) == [0, 1, 4, 5]


@given(st.integers(0, 255), st.integers(0, 255))
def test_compress_expand_round_trip(m, within):
    m &= within
    c = compress(m, within)
    assert c < 1 << popcount(within)
    assert expand(c, within) == m


def test_mask_labels_round_trip():
    ls = ("a", "b", "c", "d")
    assert mask_of(ls, "bd") == 0b1010
    assert labels_of(ls, 0b1010) == ("b", "d")
    with pytest.raises(InvalidComposition):
        mask_of(ls, "z")


@pytest.mark.parametrize("n", range(7))
def test_compositions_are_valid_and_counted(n):
    comps = compositions(full_mask(n))
    assert len(comps) == len(set(comps)) == fubini(n) == ordered_bell(n)
    for c in comps:
        check_composition(c, full_mask(n))


def test_ordered_bell_values():
    assert [ordered_bell(n) for n in range(7)] == [1, 1, 3, 13, 75, 541, 4683]


def test_set_partitions_bell_numbers():
    assert [sum(1 for _ in set_partitions(full_mask(n))) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    for p in set_partitions(full_mask(4)):
        assert list(p) == sorted(p)
        check_composition(p, full_mask(4))


def test_check_composition_errors():
    with pytest.raises(InvalidComposition):
        check_composition([1, 1], 1)
    with pytest.raises(InvalidComposition):
        check_composition([1], 3)
    with pytest.raises(InvalidComposition):
        check_composition([0, 1], 1)
    check_composition([0, 1], 1, allow_empty=True)


def test_binom():
    assert binom(5, 2) == 10 and binom(3, 5) == 0 and binom(3, -1) == 0


# -- formal sums ------------------------------------------------------------------

def _g(*edges):
    return SimpleGraph.build("abc", [list(e) for e in edges])


def test_formal_sum_cancels_and_renders():
    s = FormalSum(family="graph")
    s.add(_g("ab"), 2)
    s.add(_g(), -1)
    s.add(_g("bc"), 1)
    s.add(_g("bc"), -1)
    assert len(s) == 2
    assert _g("bc") not in s
    assert s.render() == "-1*abc[] +2*abc[ab]"
    assert s[_g("ab")] == 2 and s[_g("bc")] == 0


def test_formal_sum_algebra():
    a = FormalSum.single(_g("ab"), 3)
    b = FormalSum.single(_g("ab"), -3)
    assert not (a + b)
    assert (a - b)[_g("ab")] == 6
    assert a.scale(0) == FormalSum()
    assert a.evaluate(lambda g: len(g.edges)) == 3
    assert a.linear(lambda g: FormalSum([(g, 1), (_g(), 1)])) == FormalSum([(_g("ab"), 3), (_g(), 3)])
    assert a.map(lambda g: _g()) == FormalSum([(_g(), 3)])
    assert FormalSum().render() == "0"


def test_formal_sum_json():
    s = FormalSum([(_g("ab"), Fraction(-1, 2))], family="simple-graph")
    assert s.to_json() == {"family": "simple-graph", "terms": [{"coef": "-1/2", "object": "abc[ab]"}]}


def test_fmt_and_join():
    assert fmt_coef(Fraction(3)) == "3" and fmt_coef(Fraction(-2, 6)) == "-1/3"
    assert join_labels(["a", "b"]) == "ab"
    assert join_labels(["10", "2"]) == "10,2"


# -- polynomials -------------------------------------------------------------------

def test_polynomial_render():
    assert PolynomialQ([0, 2, -3, 1]).render() == "n^3 - 3n^2 + 2n"
    assert PolynomialQ([Fraction(1, 2), -1]).render() == "-n + 1/2"
    assert PolynomialQ().render() == "0"
    assert PolynomialQ([0, 0, 0]).degree == -1


def test_binomial_basis():
    for k in range(6):
        p = binomial_poly(k)
        assert [p(n) for n in range(8)] == [comb(n, k) for n in range(8)]
    assert PolynomialQ.from_binomial_basis([0, 0, 6]) == PolynomialQ([0, -3, 3])


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=6))
def test_interpolation_recovers_polynomial(cs):
    p = PolynomialQ(cs)
    pts = [(x, p(x)) for x in range(len(cs))]
    assert interpolate(pts) == p


@given(st.lists(st.integers(-5, 5), max_size=5), st.lists(st.integers(-5, 5), max_size=5), st.integers(-6, 6))
def test_polynomial_ring_ops(a, b, x):
    p, q = PolynomialQ(a), PolynomialQ(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - q)(x) == p(x) - q(x)
    assert p.compose_neg()(x) == p(-x)
