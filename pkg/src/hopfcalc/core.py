"""Family-independent Hopf machinery.

A family supplies restriction, contraction, product and a unit on the empty
set. Everything here (Takeuchi's antipode, convolution of characters,
polynomial invariants and their reciprocity) is written against that contract
only, so it doubles as an oracle for the hand-derived antipode formulas in the
family modules.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import config
from .errors import ConsistencyError
from .formal import FormalSum
from .polynomial import PolynomialQ
from .sets import check_composition, full_mask, mask_of, submasks


class HopfFamily:
    """Contract for a connected Hopf monoid whose coproducts are pure tensors or zero.

    ``restrict``/``contract`` receive a bitmask relative to ``x.labels`` and
    return the minor, or ``None`` when the coproduct vanishes (vector species
    such as posets). ``product`` takes objects on disjoint label sets.
    """

    name = "abstract"
    vector_species = False
    commutative = True
    cocommutative = False

    def restrict(self, x, mask: int):
        raise NotImplementedError

    def contract(self, x, mask: int):
        raise NotImplementedError

    def coproduct(self, x, mask: int):
        """(x|_S, x/_S), or None for the zero coproduct."""
        a = self.restrict(x, mask)
        if a is None:
            return None
        b = self.contract(x, mask)
        if b is None:
            return None
        return a, b

    def product(self, x, y):
        raise NotImplementedError

    def unit(self):
        raise NotImplementedError

    def antipode(self, x) -> FormalSum:
        """Closed-form antipode. Families override; the default is Takeuchi."""
        return takeuchi_antipode(self, x)

    def render(self, x) -> str:
        return str(x)

    def split(self, x, subset: Iterable[str]):
        return self.coproduct(x, mask_of(x.labels, subset))

    def product_all(self, xs: Sequence):
        out = self.unit()
        for x in xs:
            out = self.product(out, x)
        return out


def higher_coproduct(family: HopfFamily, x, blocks: Sequence[Iterable[str]],
                     allow_empty: bool = False) -> FormalSum:
    """Iterated coproduct along a composition given as label blocks."""
    masks = [mask_of(x.labels, b) for b in blocks]
    check_composition(masks, full_mask(len(x.labels)), allow_empty=allow_empty)
    out = FormalSum(family=family.name)
    minors = []
    cur = x
    for b in blocks:
        cp = family.coproduct(cur, mask_of(cur.labels, b))
        if cp is None:
            return out
        minors.append(cp[0])
        cur = cp[1]
    out.add(tuple(minors), 1)
    return out


def takeuchi_antipode(family: HopfFamily, x, with_count: bool = False):
    """Alternating sum over all set compositions, by straight enumeration.

    No terms are merged before the end, so this stays an independent check
    on the closed formulas. With ``with_count`` also return the number of
    nonzero raw terms (the ordered Bell number for set species).
    """
    n = len(x.labels)
    config.check_enumerable(n, "Takeuchi sum")
    out = FormalSum(family=family.name)
    count = 0
    if n == 0:
        out.add(x, 1)
        return (out, 1) if with_count else out

    terms: dict = {}

    def walk(cur, acc, sign):
        nonlocal count
        m = len(cur.labels)
        if m == 0:
            count += 1
            terms[acc] = terms.get(acc, 0) + sign
            return
        for b in submasks(full_mask(m))[1:]:
            cp = family.coproduct(cur, b)
            if cp is None:
                continue
            left, right = cp
            walk(right, family.product(acc, left) if acc is not None else left, -sign)

    walk(x, None, 1)
    for obj, c in terms.items():
        out.add(obj, c)
    return (out, count) if with_count else out


class Character:
    """A named multiplicative functional on one family."""

    def __init__(self, name: str, fn: Callable[[object], object]):
        self.name = name
        self.fn = fn

    def __call__(self, x) -> Fraction:
        return Fraction(self.fn(x))

    def __repr__(self):
        return f"Character({self.name})"


def counit() -> Character:
    return Character("epsilon", lambda x: 1 if len(x.labels) == 0 else 0)


def check_multiplicative(family: HopfFamily, chi: Character, pairs) -> None:
    """Spot check chi(x*y) = chi(x) chi(y) on sample pairs."""
    for x, y in pairs:
        if chi(family.product(x, y)) != chi(x) * chi(y):
            raise ConsistencyError(f"{chi.name} is not multiplicative on {x}, {y}")
    if chi(family.unit()) != 1:
        raise ConsistencyError(f"{chi.name} is not unital")


def convolve(family: HopfFamily, phi: Character, psi: Character) -> Character:
    def fn(x):
        total = Fraction(0)
        for s in submasks(full_mask(len(x.labels))):
            cp = family.coproduct(x, s)
            if cp is None:
                continue
            a = phi(cp[0])
            if a:
                total += a * psi(cp[1])
        return total

    return Character(f"({phi.name}*{psi.name})", fn)


def character_inverse(family: HopfFamily, zeta: Character, method: str = "formula") -> Character:
    """zeta composed with the antipode."""
    anti = family.antipode if method == "formula" else (lambda x: takeuchi_antipode(family, x))

    def fn(x):
        return anti(x).evaluate(zeta)

    return Character(f"{zeta.name}^-1", fn)


def character_power(family: HopfFamily, zeta: Character, k: int) -> Character:
    """Convolution power; negative k uses the inverse."""
    if k == 0:
        return counit()
    base = zeta if k > 0 else character_inverse(family, zeta)
    out = base
    for _ in range(abs(k) - 1):
        out = convolve(family, out, base)
    return out


def composition_sums(family: HopfFamily, zeta: Character, x) -> list[Fraction]:
    """c[k] = sum over compositions of x into k blocks of prod zeta(minor).

    Memoized on the contraction left after each first block, so the cost is
    far below the number of compositions for most families.
    """
    config.check_enumerable(len(x.labels), "invariant sum")
    memo: dict = {}

    def g(cur) -> list[Fraction]:
        if cur in memo:
            return memo[cur]
        m = len(cur.labels)
        if m == 0:
            return [Fraction(1)]
        acc = [Fraction(0)] * (m + 1)
        for b in submasks(full_mask(m))[1:]:
            cp = family.coproduct(cur, b)
            if cp is None:
                continue
            z = zeta(cp[0])
            if not z:
                continue
            tail = g(cp[1])
            for k, v in enumerate(tail):
                if v:
                    acc[k + 1] += z * v
        memo[cur] = acc
        return acc

    return g(x)


def polynomial_invariant(family: HopfFamily, zeta: Character, x) -> PolynomialQ:
    """chi(n) = sum over decompositions of x into n possibly empty parts."""
    return PolynomialQ.from_binomial_basis(composition_sums(family, zeta, x))


def invariant_by_decompositions(family: HopfFamily, zeta: Character, x, n: int) -> Fraction:
    """Direct sum over all n-part decompositions (oracle; exponential in n)."""
    labels = x.labels
    total = Fraction(0)

    def walk(cur, parts_left, acc):
        nonlocal total
        if parts_left == 1:
            total += acc * zeta(cur)
            return
        for b in submasks(full_mask(len(cur.labels))):
            cp = family.coproduct(cur, b)
            if cp is None:
                continue
            z = zeta(cp[0])
            if z:
                walk(cp[1], parts_left - 1, acc * z)

    if n == 0:
        return Fraction(1 if not labels else 0)
    walk(x, n, Fraction(1))
    return total


def reciprocity_eval(family: HopfFamily, zeta: Character, x, n: int,
                     method: str = "formula") -> Fraction:
    """chi(x)(-n), computed from the polynomial and from chi(s(x))(n); they must agree."""
    chi = polynomial_invariant(family, zeta, x)
    lhs = chi(-n)
    anti = family.antipode(x) if method == "formula" else takeuchi_antipode(family, x)
    rhs = Fraction(0)
    for obj, c in anti:
        rhs += c * polynomial_invariant(family, zeta, obj)(n)
    if lhs != rhs:
        raise ConsistencyError(f"reciprocity failed: chi(-{n}) = {lhs} but chi(s(x))({n}) = {rhs}")
    return lhs


def antipode_of_product_check(family: HopfFamily, x, y) -> bool:
    """s(x*y) = s(y)*s(x)."""
    lhs = family.antipode(family.product(x, y))
    sx, sy = family.antipode(x), family.antipode(y)
    rhs = FormalSum(family=family.name)
    for b, cb in sy:
        for a, ca in sx:
            rhs.add(family.product(b, a), cb * ca)
    return lhs == rhs


def apply_twice(family: HopfFamily, x) -> FormalSum:
    return family.antipode(x).linear(family.antipode)


def require_same(a: FormalSum, b: FormalSum, what: str = "antipode") -> None:
    if a != b:
        raise ConsistencyError(f"{what} mismatch:\n  {a}\n  {b}")

