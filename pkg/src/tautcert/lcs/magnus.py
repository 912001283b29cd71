"""Truncated Magnus expansion ``x_i -> 1 + X_i`` and lower-central weight.

Indexing: ``lcs_weight(w) = d`` means ``w`` lies in ``gamma_d`` but not in
``gamma_{d+1}`` (standard indexing, ``gamma_1 = G``).  The group-theory
literature this package follows also writes ``G_0 = G, G_k = [G, G_{k-1}]``,
so ``G_k = gamma_{k+1}``; helpers whose name ends in ``_paper_index`` use
that shifted convention.
"""

from __future__ import annotations

import math
from typing import Mapping

from ..words import Word

Monomial = tuple[int, ...]


class TruncatedSeries:
    """Noncommutative power series in ``X_1..X_g`` truncated above ``cutoff``."""

    __slots__ = ("cutoff", "terms")

    def __init__(self, cutoff: int, terms: Mapping[Monomial, int] | None = None):
        if cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        self.cutoff = cutoff
        self.terms = {m: c for m, c in (terms or {}).items() if c and len(m) <= cutoff}

    @classmethod
    def one(cls, cutoff: int) -> "TruncatedSeries":
        return cls(cutoff, {(): 1})

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        D = min(self.cutoff, other.cutoff)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            room = D - len(m1)
            if room < 0:
                continue
            for m2, c2 in other.terms.items():
                if len(m2) <= room:
                    m = m1 + m2
                    v = out.get(m, 0) + c1 * c2
                    if v:
                        out[m] = v
                    else:
                        del out[m]
        return TruncatedSeries(D, out)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return TruncatedSeries(min(self.cutoff, other.cutoff), out)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + TruncatedSeries(other.cutoff, {m: -c for m, c in other.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.cutoff == other.cutoff and self.terms == other.terms

    def degree_part(self, d: int) -> dict[Monomial, int]:
        return {m: c for m, c in self.terms.items() if len(m) == d}

    def lowest_nonconstant_degree(self) -> int | None:
        degs = [len(m) for m in self.terms if m]
        return min(degs) if degs else None

    def format(self, names=None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, (m, c) in enumerate(sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))):
            mono = "".join(names[i] if names else f"X{i + 1}" for i in m)
            a = abs(c)
            body = mono if (a == 1 and mono) else (f"{a}{mono}" if mono else str(a))
            if k == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"TruncatedSeries({self.cutoff}, {self.format()!r})"


def _times_letter(s: dict[Monomial, int], a: int, D: int) -> dict[Monomial, int]:
    i = abs(a) - 1
    out: dict[Monomial, int] = {}
    for m, c in s.items():
        out[m] = out.get(m, 0) + c
        room = D - len(m)
        ext = m
        sign = 1
        for _ in range(room if a < 0 else min(room, 1)):
            ext = ext + (i,)
            sign = -sign if a < 0 else 1
            out[ext] = out.get(ext, 0) + sign * c
    return {m: c for m, c in out.items() if c}


def magnus_expand(w: Word, cutoff: int) -> TruncatedSeries:
    """Magnus image of ``w``, truncated above degree ``cutoff``."""
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    s: dict[Monomial, int] = {(): 1}
    for a in w.signed:
        s = _times_letter(s, a, cutoff)
    return TruncatedSeries(cutoff, s)


class WeightAtLeast(int):
    """Lower bound returned when the weight exceeds the Magnus cutoff."""

    exact = False

    def __repr__(self):
        return f">={int(self)}"

    __str__ = __repr__


def lcs_weight(w: Word, cutoff: int):
    """Smallest degree with a nonzero Magnus term.

    Returns an ``int`` when found within ``cutoff``, a :class:`WeightAtLeast`
    of ``cutoff + 1`` otherwise, and ``math.inf`` for the identity.
    """
    if w.is_identity():
        return math.inf
    d = magnus_expand(w, cutoff).lowest_nonconstant_degree()
    if d is None:
        return WeightAtLeast(cutoff + 1)
    return d


def in_lower_central_paper_index(w: Word, k: int) -> bool:
    """``w in G_k`` with ``G_0 = G``; decided by Magnus truncation at ``k + 1``."""
    if w.is_identity() or k == 0:
        return True
    return lcs_weight(w, k) >= k + 1
