"""Inverting power series three ways: recursion, partition sums, and face counts.

Run: python3 demos/series.py
"""

from fractions import Fraction

from hopfcalc.formal import fmt_coef
from hopfcalc.series import ExpSeries, OrdSeries, invert


def row(series, kind):
    for method in ("direct", "enumerative", "polytopal"):
        r = invert(series, kind, method)
        print(f"  {method:12s}", " ".join(fmt_coef(c) for c in r.coeffs))


if __name__ == "__main__":
    a = ExpSeries([1, 1, Fraction(1, 2), 2, -1, 3])
    print("multiplicative inverse of an EGF (faces of permutahedra):")
    row(a, "mult")
    c = OrdSeries([1, 1, 0, 0, 0, 0])
    print("compositional inverse of x + x^2 (faces of associahedra, signed Catalan numbers):")
    row(c, "comp")
