"""Handle attachment and obstructions for abelian and solvable representations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from ..lcs import DEFAULT_BUDGET, ResourceBudget, derived_depth
from ..words import Alphabet, Word, apply_homomorphism, exponent_vector
from .presentation import SuturedPresentation


def attach_handle(pres: SuturedPresentation, name: str | None = None) -> SuturedPresentation:
    """Attach a sutured one-handle: a fresh generator that is also a new surface word.

    A representation extended by the identity on the new generator keeps
    the Jacobian determinant, since the new row and column form an
    identity block.
    """
    alphabet = pres.alphabet.extend(name)
    lift = [Word(alphabet, w.signed, reduced=True) for w in pres.surface_words]
    lift.append(alphabet.generator(alphabet.rank - 1))
    return SuturedPresentation(
        alphabet,
        tuple(lift),
        pres.suture_metadata,
        f"{pres.label}+handle" if pres.label else "handle",
        pres.provenance,
    )


def surface_words_bfs(surface: Alphabet, max_length: int) -> Iterator[Word]:
    """Positive generators first, then every reduced word by increasing length."""
    g = surface.rank
    seen = set()
    for i in range(g):
        w = surface.generator(i)
        seen.add(w.signed)
        yield w
    letters = [a for i in range(1, g + 1) for a in (i, -i)]
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_length):
        nxt = []
        for base in frontier:
            for a in letters:
                if base and base[-1] == -a:
                    continue
                w = base + (a,)
                nxt.append(w)
                if w not in seen:
                    seen.add(w)
                    yield Word(surface, w, reduced=True)
        frontier = nxt


def one_dim_obstruction(
    pres: SuturedPresentation, search_length: int, budget: ResourceBudget = DEFAULT_BUDGET
) -> Optional[Word]:
    """A surface word outside the surface commutator subgroup whose image is
    in the second derived subgroup of the ambient group, or ``None``.

    A witness rules out every one-dimensional certifying representation;
    ``None`` proves nothing.
    """
    if search_length < 1:
        raise ValueError("search_length must be at least 1")
    surface = pres.surface_alphabet
    for w in surface_words_bfs(surface, search_length):
        if not any(exponent_vector(w)):
            continue
        image = apply_homomorphism(w, pres.surface_words)
        if derived_depth(image, 2, budget) >= 2:
            return w
    return None


@dataclass
class SolvableObstruction:
    label: str
    depths: list[int]
    max_depth: int
    word_names: list[str] = field(default_factory=list)
    complete: bool = True
    one_dim_witness: Optional[str] = None

    @property
    def degree(self) -> int:
        """``D*``: the deepest derived-series term met by a surface word."""
        return max(self.depths) if self.depths else 0

    @property
    def excluded_degree(self) -> int:
        """Solvable representations of degree up to this value cannot certify."""
        return self.degree - 1

    def statement(self) -> str:
        d = self.degree
        if not self.complete:
            return f"budget exhausted after {len(self.depths)} of {len(self.word_names)} surface words"
        if d == 0:
            return "no solvable obstruction: every surface word has derived depth 0"
        j = self.depths.index(d)
        capped = " (depth search capped)" if d == self.max_depth else ""
        return (
            f"{self.word_names[j]} has derived depth {d}{capped}; "
            f"no solvable representation of degree <= {d - 1} certifies"
        )

    def to_dict(self) -> dict:
        return {
            "kind": "obstruction",
            "label": self.label,
            "depths": [{"word": n, "depth": d} for n, d in zip(self.word_names, self.depths)],
            "complete": self.complete,
            "one_dim_witness": self.one_dim_witness,
            "max_depth": self.max_depth,
            "obstruction_degree": self.degree,
            "excluded_solvable_degree": self.excluded_degree,
            "statement": self.statement(),
        }


def solvable_obstruction(
    pres: SuturedPresentation,
    max_depth: int,
    budget: ResourceBudget = DEFAULT_BUDGET,
    partial: Optional[list] = None,
) -> SolvableObstruction:
    """Derived depths of the surface words.

    If some surface word lies in ``F^(D)``, every solvable representation
    of degree ``< D`` sends all its Fox derivatives to zero, giving a zero
    row in the Jacobian.  ``partial`` collects depths as they are found, so
    callers can report progress when the budget runs out.
    """
    if max_depth < 1:
        raise ValueError("max_depth must be at least 1")
    depths = [] if partial is None else partial
    for w in pres.surface_words:
        depths.append(derived_depth(w, max_depth, budget))
    names = [f"a{j + 1}" for j in range(pres.genus)]
    return SolvableObstruction(pres.label, list(depths), max_depth, names)
