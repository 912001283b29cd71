"""The integral group ring of a free group."""

from __future__ import annotations

from typing import Iterable, Mapping

from ..words import Alphabet, AlphabetMismatchError, Word, exponent_vector, format_word, shortlex_key
from .laurent import LaurentPolynomial


class GroupRingElement:
    """Finite formal sum ``sum_w c_w * w`` with integer coefficients."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping[Word, int] | Iterable = ()):
        self.alphabet = alphabet
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Word, int] = {}
        for w, c in items:
            if w.alphabet != alphabet:
                raise AlphabetMismatchError("group ring term over a different alphabet")
            v = clean.get(w, 0) + int(c)
            if v:
                clean[w] = v
            else:
                clean.pop(w, None)
        self.terms = clean

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "GroupRingElement":
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet: Alphabet) -> "GroupRingElement":
        return cls(alphabet, {alphabet.identity(): 1})

    @classmethod
    def of(cls, w: Word, c: int = 1) -> "GroupRingElement":
        return cls(w.alphabet, {w: c})

    def _lift(self, other):
        if isinstance(other, GroupRingElement):
            if other.alphabet != self.alphabet:
                raise AlphabetMismatchError("group ring elements over different alphabets")
            return other
        if isinstance(other, Word):
            return GroupRingElement.of(other)
        if isinstance(other, int):
            return GroupRingElement(self.alphabet, {self.alphabet.identity(): other})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in o.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        r = GroupRingElement.__new__(GroupRingElement)
        r.alphabet, r.terms = self.alphabet, out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = GroupRingElement.__new__(GroupRingElement)
        r.alphabet, r.terms = self.alphabet, {w: -c for w, c in self.terms.items()}
        return r

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict[Word, int] = {}
        for u, a in self.terms.items():
            for v, b in o.terms.items():
                w = u * v
                s = out.get(w, 0) + a * b
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        r = GroupRingElement.__new__(GroupRingElement)
        r.alphabet, r.terms = self.alphabet, out
        return r

    def __rmul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self) -> int:
        return sum(self.terms.values())

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (w, c) in enumerate(sorted(self.terms.items(), key=lambda t: shortlex_key(t[0]))):
            word = format_word(w)
            a = abs(c)
            if w.is_identity():
                body = str(a)
            elif a == 1:
                body = word
            else:
                body = f"{a} {word}"
            if k == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"GroupRingElement({self.format()!r})"

    def __str__(self):
        return self.format()


def group_ring_multiply(xi: GroupRingElement, eta: GroupRingElement) -> GroupRingElement:
    return xi * eta


def abelianize(xi: GroupRingElement) -> LaurentPolynomial:
    """Send each word to the monomial of its exponent vector."""
    n = xi.alphabet.rank
    out: dict = {}
    for w, c in xi.terms.items():
        e = exponent_vector(w)
        out[e] = out.get(e, 0) + c
    return LaurentPolynomial(n, out)
