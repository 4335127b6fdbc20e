"""Structures with canonical encodings, and exact linear combinations of them."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator


class Structure:
    """Immutable combinatorial object on a sorted tuple of labels.

    Subclasses set ``labels`` and ``key`` in ``__init__``. ``key`` is the
    canonical encoding: two structures of the same kind are equal iff their
    keys are equal.
    """

    __slots__ = ("labels", "key")
    kind = "structure"

    def __eq__(self, other):
        return type(self) is type(other) and self.key == other.key

    def __hash__(self):
        return hash((self.kind, self.key))

    def __lt__(self, other):
        return self.key < other.key

    def __repr__(self):
        return f"{type(self).__name__}({self.key!r})"

    def __str__(self):
        return self.key

    @property
    def n(self) -> int:
        return len(self.labels)


def sort_key(obj) -> str:
    if isinstance(obj, tuple):
        return "\x00".join(sort_key(o) for o in obj)
    return obj.key


def fmt_coef(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def join_labels(labels: Iterable[str]) -> str:
    labels = list(labels)
    if all(len(a) == 1 for a in labels):
        return "".join(labels)
    return ",".join(labels)


class FormalSum:
    """Finite linear combination with nonzero rational coefficients.

    Terms are structures (or tuples of structures, for iterated coproducts).
    Iteration is sorted by canonical encoding, so rendering is deterministic.
    """

    __slots__ = ("family", "_terms")

    def __init__(self, terms=None, family: str = ""):
        self.family = family
        self._terms: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for obj, c in items:
                self.add(obj, c)

    @classmethod
    def single(cls, obj, coef=1, family: str = "") -> "FormalSum":
        return cls([(obj, coef)], family)

    def add(self, obj, coef) -> None:
        c = self._terms.get(obj, 0) + Fraction(coef)
        if c:
            self._terms[obj] = c
        else:
            self._terms.pop(obj, None)

    def __iter__(self) -> Iterator[tuple[object, Fraction]]:
        for obj in sorted(self._terms, key=sort_key):
            yield obj, self._terms[obj]

    def items(self):
        return list(iter(self))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, obj) -> Fraction:
        return self._terms.get(obj, Fraction(0))

    def __contains__(self, obj):
        return obj in self._terms

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = FormalSum(self._terms, self.family or other.family)
        for obj, c in other._terms.items():
            out.add(obj, c)
        return out

    def __neg__(self) -> "FormalSum":
        return self.scale(-1)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def scale(self, k) -> "FormalSum":
        k = Fraction(k)
        if not k:
            return FormalSum(family=self.family)
        return FormalSum({o: c * k for o, c in self._terms.items()}, self.family)

    def map(self, f: Callable, family: str | None = None) -> "FormalSum":
        """Push forward along ``f`` (object -> object), combining like terms."""
        out = FormalSum(family=self.family if family is None else family)
        for obj, c in self._terms.items():
            out.add(f(obj), c)
        return out

    def linear(self, f: Callable[[object], "FormalSum"], family: str | None = None) -> "FormalSum":
        """Extend ``f`` (object -> FormalSum) linearly."""
        out = FormalSum(family=self.family if family is None else family)
        for obj, c in self._terms.items():
            for o2, c2 in f(obj)._terms.items():
                out.add(o2, c * c2)
        return out

    def evaluate(self, f: Callable[[object], object]) -> Fraction:
        """Apply a scalar-valued functional linearly."""
        return sum((c * Fraction(f(obj)) for obj, c in self._terms.items()), Fraction(0))

    def coefficients(self) -> list[Fraction]:
        return [c for _, c in self]

    def render(self, show=str) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (obj, c) in enumerate(self):
            s = fmt_coef(c)
            if i and c > 0:
                s = "+" + s
            parts.append(f"{s}*{show(obj)}")
        return " ".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"FormalSum({self.render()})"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "terms": [{"coef": fmt_coef(c), "object": sort_key(o)} for o, c in self],
        }
