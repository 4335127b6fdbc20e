"""Truncated power series and their inverses.

Exponential series A(x) = sum a_n x^n / n! (a_0 = 1) are inverted
multiplicatively; ordinary series C(x) = sum c_{n-1} x^n (c_0 = 1) are
inverted under composition. Each inverse is computed three ways: by solving
for coefficients, by the closed sums over integer partitions, and by
summing over faces of permutahedra or associahedra.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from . import config
from .errors import ConsistencyError, InputError, NotInvertible
from .sets import binom


class ExpSeries:
    """a_0..a_N of an exponential generating function."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def mul(self, other: "ExpSeries") -> "ExpSeries":
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return ExpSeries([sum(binom(m, k) * a[k] * b[m - k] for k in range(m + 1)) for m in range(n + 1)])

    def __eq__(self, other):
        return isinstance(other, ExpSeries) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"ExpSeries({[str(c) for c in self.coeffs]})"


class OrdSeries:
    """c_0..c_{N-1} of C(x) = sum_{n>=1} c_{n-1} x^n."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def poly(self) -> list[Fraction]:
        """Coefficients of x^0..x^N."""
        return [Fraction(0)] + list(self.coeffs)

    @classmethod
    def from_poly(cls, p: Sequence, order: int) -> "OrdSeries":
        p = list(p) + [Fraction(0)] * (order + 1)
        return cls(p[1:order + 1])

    def compose(self, other: "OrdSeries") -> "OrdSeries":
        """self(other(x)) up to x^N."""
        n = min(self.order, other.order)
        inner = other.poly()[: n + 1]
        out = [Fraction(0)] * (n + 1)
        power = [Fraction(1)] + [Fraction(0)] * n
        for k, c in enumerate(self.poly()[: n + 1]):
            if k:
                power = _poly_mul(power, inner, n)
                for i in range(n + 1):
                    out[i] += c * power[i]
        return OrdSeries.from_poly(out, n)

    def __eq__(self, other):
        return isinstance(other, OrdSeries) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"OrdSeries({[str(c) for c in self.coeffs]})"


def _poly_mul(a, b, n):
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(n + 1 - i):
                if j < len(b) and b[j]:
                    out[i + j] += x * b[j]
    return out


def exp_series(k, order: int) -> ExpSeries:
    """e^{kx}."""
    k = Fraction(k)
    return ExpSeries([k ** n for n in range(order + 1)])


def binomial_series(c, order: int) -> ExpSeries:
    """(1+x)^c as an EGF: a_n = c(c-1)...(c-n+1)."""
    c = Fraction(c)
    out = [Fraction(1)]
    for n in range(1, order + 1):
        out.append(out[-1] * (c - n + 1))
    return ExpSeries(out)


def egf_coefficient(s: ExpSeries, n: int) -> Fraction:
    return s.coeffs[n]


def identity_series(order: int) -> OrdSeries:
    return OrdSeries([1] + [0] * (order - 1))


# -- integer partitions ---------------------------------------------------------

def partitions(n: int, largest: int | None = None):
    """Partitions of n as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def multiplicities(parts: Sequence[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in parts:
        out[p] = out.get(p, 0) + 1
    return out


def multinomial(n: int, parts: Sequence[int]) -> int:
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def mult_inverse_coefficient(parts: Sequence[int]) -> int:
    """Coefficient of a_{parts} in b_n: (-1)^k multinomial(n; parts) multinomial(k; m)."""
    m = multiplicities(parts)
    return (-1) ** len(parts) * multinomial(sum(parts), parts) * multinomial(len(parts), list(m.values()))


def comp_inverse_coefficient(parts: Sequence[int]) -> Fraction:
    """Coefficient of c_{parts} in d_n: (-1)^k (n+k)! / ((n+1)! prod m_i!)."""
    n = sum(parts)
    k = len(parts)
    den = factorial(n + 1)
    for v in multiplicities(parts).values():
        den *= factorial(v)
    q = Fraction(factorial(n + k), den)
    return (-1) ** k * q


def _monomial(coeffs: Sequence[Fraction], parts: Sequence[int]) -> Fraction:
    out = Fraction(1)
    for p in parts:
        out *= coeffs[p]
    return out


# -- multiplicative inversion ---------------------------------------------------

def _check_unit(a0):
    if a0 != 1:
        raise NotInvertible(f"leading coefficient is {a0}, not 1")


def mult_inverse_direct(a: ExpSeries) -> ExpSeries:
    _check_unit(a.coeffs[0])
    b = [Fraction(1)]
    for n in range(1, a.order + 1):
        b.append(-sum(binom(n, k) * a.coeffs[k] * b[n - k] for k in range(1, n + 1)))
    return ExpSeries(b)


def mult_inverse_enumerative(a: ExpSeries) -> ExpSeries:
    _check_unit(a.coeffs[0])
    b = [Fraction(1)]
    for n in range(1, a.order + 1):
        b.append(sum((mult_inverse_coefficient(p) * _monomial(a.coeffs, p) for p in partitions(n)), Fraction(0)))
    return ExpSeries(b)


def face_types(z) -> list[tuple[int, tuple[int, ...]]]:
    """(dim, sorted factor sizes) for each face of P(z); the factors are the
    components of the face's submodular function."""
    from .submodular import components, enumerate_faces
    from .sets import popcount

    out = []
    for rec in enumerate_faces(z, with_vertices=False):
        sizes = tuple(sorted((popcount(c) for c in components(rec.face_fn)), reverse=True))
        if rec.dim != sum(s - 1 for s in sizes):
            raise ConsistencyError("face dimension disagrees with its factorization")
        out.append((rec.dim, sizes))
    return out


def _polytopal_coefficient(coeffs, n, types) -> Fraction:
    return sum(((-1) ** (n - d) * _monomial(coeffs, sizes) for d, sizes in types), Fraction(0))


def mult_inverse_polytopal(a: ExpSeries) -> ExpSeries:
    from .submodular import permutahedron

    _check_unit(a.coeffs[0])
    config.check_enumerable(a.order, "permutahedron faces")
    b = [Fraction(1)]
    for n in range(1, a.order + 1):
        b.append(_polytopal_coefficient(a.coeffs, n, face_types(permutahedron(n))))
    return ExpSeries(b)


# -- compositional inversion ---------------------------------------------------

def comp_inverse_direct(c: OrdSeries) -> OrdSeries:
    if not c.coeffs:
        return c
    _check_unit(c.coeffs[0])
    n = c.order
    d = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for k in range(1, n):
        trial = OrdSeries(d)
        r = c.compose(trial).coeffs[k]
        d[k] = -r
    return OrdSeries(d)


def comp_inverse_enumerative(c: OrdSeries) -> OrdSeries:
    if not c.coeffs:
        return c
    _check_unit(c.coeffs[0])
    d = [Fraction(1)]
    for n in range(1, c.order):
        d.append(sum((comp_inverse_coefficient(p) * _monomial(c.coeffs, p) for p in partitions(n)), Fraction(0)))
    return OrdSeries(d)


def comp_inverse_polytopal(c: OrdSeries) -> OrdSeries:
    from .buildsets import loday_fn

    if not c.coeffs:
        return c
    _check_unit(c.coeffs[0])
    config.check_enumerable(c.order - 1, "associahedron faces")
    d = [Fraction(1)]
    for n in range(1, c.order):
        d.append(_polytopal_coefficient(c.coeffs, n, face_types(loday_fn([str(i + 1) for i in range(n)]))))
    return OrdSeries(d)


def invert(series, kind: str, method: str):
    """Dispatch for the CLI: kind 'mult' or 'comp', method direct/enumerative/polytopal."""
    table = {
        ("mult", "direct"): mult_inverse_direct,
        ("mult", "enumerative"): mult_inverse_enumerative,
        ("mult", "polytopal"): mult_inverse_polytopal,
        ("comp", "direct"): comp_inverse_direct,
        ("comp", "enumerative"): comp_inverse_enumerative,
        ("comp", "polytopal"): comp_inverse_polytopal,
    }
    try:
        return table[(kind, method)](series)
    except KeyError:
        raise InputError(f"unknown inversion {kind}/{method}") from None


# -- character groups ------------------------------------------------------------

def component_character(name: str, coeffs: Sequence):
    """phi(z) = prod over components C of P(z) of coeffs[|C|]."""
    from .core import Character
    from .sets import popcount
    from .submodular import components

    cs = [Fraction(x) for x in coeffs]

    def fn(z):
        out = Fraction(1)
        for comp in components(z):
            out *= cs[popcount(comp)]
        return out

    return Character(name, fn)


def char_group_perm_iso(n_max: int, a: Sequence, b: Sequence) -> bool:
    """Convolution on permutahedra matches the product of EGFs up to n_max."""
    from .core import convolve
    from .submodular import GP, permutahedron

    phi = component_character("phi", a)
    psi = component_character("psi", b)
    conv = convolve(GP, phi, psi)
    target = ExpSeries(a[: n_max + 1]).mul(ExpSeries(b[: n_max + 1]))
    return all(conv(permutahedron(n)) == target.coeffs[n] for n in range(n_max + 1))


def char_group_assoc_iso(n_max: int, a: Sequence, b: Sequence) -> bool:
    """Convolution on associahedra matches composition A(B(x)) up to n_max.

    ``a`` and ``b`` are c_0..c_{n_max} with c_0 = 1; phi(a_n) = a[n].
    """
    from .buildsets import loday_fn
    from .core import convolve
    from .submodular import GP

    phi = component_character("phi", a)
    psi = component_character("psi", b)
    conv = convolve(GP, phi, psi)
    target = OrdSeries(a[: n_max + 1]).compose(OrdSeries(b[: n_max + 1]))
    for n in range(n_max + 1):
        z = loday_fn([str(i + 1) for i in range(n)])
        if conv(z) != target.coeffs[n]:
            return False
    return True


def inverse_character_on_permutahedra(a: ExpSeries, n_max: int) -> list[Fraction]:
    from .core import character_inverse
    from .submodular import GP, permutahedron

    inv = character_inverse(GP, component_character("zeta", a.coeffs))
    return [inv(permutahedron(n)) for n in range(n_max + 1)]


def inverse_character_on_associahedra(c: OrdSeries, n_max: int) -> list[Fraction]:
    from .buildsets import loday_fn
    from .core import character_inverse
    from .submodular import GP

    inv = character_inverse(GP, component_character("zeta", c.coeffs))
    return [inv(loday_fn([str(i + 1) for i in range(n)])) for n in range(n_max + 1)]
