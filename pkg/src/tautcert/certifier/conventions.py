"""Search over notational conventions for a published evaluated Jacobian.

A printed matrix may use ``[u, v] = u^-1 v^-1 u v``, list generators along
rows instead of columns, or write the outer bracket of a surface word with
its arguments in the other order.  The eight combinations are enumerated
and compared entrywise against a target.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from ..algebra import Matrix, det_field
from ..fox import evaluate_jacobian, fox_jacobian
from ..representation import Representation
from ..words import Alphabet, Word, commutator, parse_word


def right_commutator(u: Word, v: Word) -> Word:
    """``u^-1 v^-1 u v``."""
    return u.inverse() * v.inverse() * u * v


@dataclass(frozen=True)
class Convention:
    commutator: str  # "left" (u v u^-1 v^-1) or "right" (u^-1 v^-1 u v)
    transpose: bool
    swap_outer: bool

    def describe(self) -> str:
        return (
            f"commutator={self.commutator}, "
            f"{'rows=generators' if self.transpose else 'rows=surface words'}, "
            f"outer bracket {'swapped' if self.swap_outer else 'as printed'}"
        )


ALL_CONVENTIONS = tuple(
    Convention(c, t, s) for c, t, s in product(("left", "right"), (False, True), (False, True))
)


def swap_outer_bracket(text: str) -> str:
    """``[u, v]`` to ``[v, u]`` when the whole text is one bracket, otherwise unchanged."""
    t = text.strip()
    if not (t.startswith("[") and t.endswith("]")):
        return text
    depth, comma = 0, None
    for i, ch in enumerate(t):
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
            if depth == 0 and i != len(t) - 1:
                return text
        elif ch == "," and depth == 1 and comma is None:
            comma = i
    if comma is None:
        return text
    return f"[{t[comma + 1:-1].strip()},{t[1:comma].strip()}]"


def matrix_under(
    convention: Convention, alphabet: Alphabet, word_texts: Sequence[str], rho: Representation
) -> Matrix:
    bracket = commutator if convention.commutator == "left" else right_commutator
    texts = [swap_outer_bracket(t) if convention.swap_outer else t for t in word_texts]
    words = [parse_word(t, alphabet, bracket) for t in texts]
    m = evaluate_jacobian(fox_jacobian(words), rho)
    return m.transpose() if convention.transpose else m


@dataclass
class ConventionMatch:
    convention: Convention
    matrix: Matrix
    mismatches: int
    det: object

    @property
    def exact(self) -> bool:
        return self.mismatches == 0


def search_conventions(
    alphabet: Alphabet, word_texts: Sequence[str], rho: Representation, target: Sequence[Sequence]
) -> list[ConventionMatch]:
    """All eight conventions, best entrywise agreement first."""
    tgt = Matrix(target)
    out = []
    for conv in ALL_CONVENTIONS:
        m = matrix_under(conv, alphabet, word_texts, rho)
        if m.shape != tgt.shape:
            raise ValueError(f"target has shape {tgt.shape}, computed {m.shape}")
        bad = sum(a != b for ra, rb in zip(m.rows, tgt.rows) for a, b in zip(ra, rb))
        out.append(ConventionMatch(conv, m, bad, det_field(m, rho.field.one())))
    out.sort(key=lambda r: r.mismatches)
    return out


def diff_text(computed: Matrix, target: Sequence[Sequence]) -> str:
    """Side-by-side rows with mismatching entries marked ``computed!=target``."""
    lines = []
    for rc, rt in zip(computed.rows, target):
        cells = [str(a) if a == b else f"{a}!={b}" for a, b in zip(rc, rt)]
        lines.append("  ".join(f"{c:>10}" for c in cells))
    return "\n".join(lines)
