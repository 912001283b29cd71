"""Fox free differential calculus.

Convention: ``d(uv) = du + u dv``, so ``d_i(x_j) = delta_ij`` and
``d_i(x_j^-1) = -delta_ij x_j^-1``.  Jacobian rows are indexed by the
surface words, columns by the ambient generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import GroupRingElement, LaurentPolynomial, Matrix, abelianize
from .representation import Representation, RepresentationError
from .words import Alphabet, Word

FOX_CONVENTION = "d(uv) = du + u dv"
JACOBIAN_CONVENTION = "row j = surface word a_j, column i = generator x_i"


class UnbalancedPresentationError(ValueError):
    pass


def fox_derivative(w: Word, i: int) -> GroupRingElement:
    """``d w / d x_i`` by one left-to-right pass over the letters."""
    alphabet = w.alphabet
    if not 0 <= i < alphabet.rank:
        raise IndexError(f"generator index {i} out of range for rank {alphabet.rank}")
    g = i + 1
    terms: dict[Word, int] = {}
    prefix: list[int] = []
    for a in w.signed:
        if a == g:
            key = Word(alphabet, tuple(prefix), reduced=True)
            terms[key] = terms.get(key, 0) + 1
        prefix.append(a)
        if a == -g:
            key = Word(alphabet, tuple(prefix), reduced=True)
            terms[key] = terms.get(key, 0) - 1
    return GroupRingElement(alphabet, {k: c for k, c in terms.items() if c})


def fox_gradient(w: Word) -> list[GroupRingElement]:
    return [fox_derivative(w, i) for i in range(w.alphabet.rank)]


@dataclass(frozen=True)
class FoxJacobian:
    """Entry ``(j, i)`` is ``d_{x_i}`` of the ``j``-th image word."""

    entries: tuple[tuple[GroupRingElement, ...], ...]
    source: Alphabet
    target: Alphabet

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.entries), self.target.rank)

    def __getitem__(self, ji):
        j, i = ji
        return self.entries[j][i]


def _check_balanced(images: Sequence[Word]) -> Alphabet:
    if not images:
        raise UnbalancedPresentationError("no image words")
    target = images[0].alphabet
    if any(w.alphabet != target for w in images):
        raise UnbalancedPresentationError("image words over different alphabets")
    if len(images) != target.rank:
        raise UnbalancedPresentationError(
            f"{len(images)} surface words but {target.rank} generators"
        )
    return target


def fox_jacobian(images: Sequence[Word], source: Alphabet | None = None) -> FoxJacobian:
    target = _check_balanced(images)
    if source is None:
        source = Alphabet.standard(len(images))
    rows = tuple(tuple(fox_gradient(w)) for w in images)
    return FoxJacobian(rows, source, target)


def evaluate(xi: GroupRingElement, rho: Representation) -> Matrix:
    """Image of a group ring element under the linear extension of ``rho``."""
    if xi.alphabet != rho.alphabet:
        raise RepresentationError("group ring element and representation use different alphabets")
    total = rho.zero_matrix()
    for w, c in xi.terms.items():
        total = total + rho.image(w).scale(rho.field.coerce(c))
    return total


def evaluate_jacobian(jac: FoxJacobian, rho: Representation) -> Matrix:
    """The ``gn x gn`` block matrix of evaluated Fox derivatives."""
    return Matrix.blocks([[evaluate(e, rho) for e in row] for row in jac.entries])


def abelianized_jacobian(images: Sequence[Word]) -> Matrix:
    jac = fox_jacobian(images)
    return Matrix([[abelianize(e) for e in row] for row in jac.entries])


def evaluate_laurent_matrix(m: Matrix, values: Sequence, one) -> Matrix:
    return m.map(lambda p: p.evaluate(values, one))


__all__ = [
    "FOX_CONVENTION",
    "JACOBIAN_CONVENTION",
    "FoxJacobian",
    "LaurentPolynomial",
    "UnbalancedPresentationError",
    "abelianized_jacobian",
    "evaluate",
    "evaluate_jacobian",
    "evaluate_laurent_matrix",
    "fox_derivative",
    "fox_gradient",
    "fox_jacobian",
]
