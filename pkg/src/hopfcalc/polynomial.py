from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .formal import fmt_coef


class PolynomialQ:
    """Univariate polynomial with rational coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_binomial_basis(cls, values: Sequence) -> "PolynomialQ":
        """sum_k values[k] * C(n, k) as a polynomial in n."""
        out = cls()
        for k, v in enumerate(values):
            if v:
                out = out + binomial_poly(k).scale(v)
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, PolynomialQ):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "PolynomialQ") -> "PolynomialQ":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return PolynomialQ([x + y for x, y in zip(a, b)])

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other: "PolynomialQ") -> "PolynomialQ":
        if not self.coeffs or not other.coeffs:
            return PolynomialQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolynomialQ(out)

    def scale(self, k) -> "PolynomialQ":
        return PolynomialQ([c * k for c in self.coeffs])

    def compose_neg(self) -> "PolynomialQ":
        """p(-x)."""
        return PolynomialQ([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def render(self, var: str = "n") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = fmt_coef(mag)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if mag == 1 else f"{fmt_coef(mag)}{mono}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"PolynomialQ({self.render()})"


_BINOM_CACHE: dict[int, PolynomialQ] = {}


def binomial_poly(k: int) -> PolynomialQ:
    """C(n, k) = n(n-1)...(n-k+1)/k! as a polynomial in n."""
    if k not in _BINOM_CACHE:
        p = PolynomialQ([1])
        for j in range(k):
            p = p * PolynomialQ([-j, 1])
        fact = 1
        for j in range(2, k + 1):
            fact *= j
        _BINOM_CACHE[k] = p.scale(Fraction(1, fact))
    return _BINOM_CACHE[k]


def interpolate(points: Sequence[tuple]) -> PolynomialQ:
    """Lagrange interpolation through exact points (x, y)."""
    out = PolynomialQ()
    for i, (xi, yi) in enumerate(points):
        term = PolynomialQ([yi])
        for j, (xj, _) in enumerate(points):
            if i != j:
                term = term * PolynomialQ([Fraction(-xj, 1) / (xi - xj), Fraction(1) / (xi - xj)])
        out = out + term
    return out

