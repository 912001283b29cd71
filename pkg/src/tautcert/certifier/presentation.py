from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..words import Alphabet, Word, format_word, parse_word


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class SuturedPresentation:
    """Algebraic data of a sutured handlebody with connected ``R_+``.

    ``surface_words[j]`` is the image in the ambient free group of the
    ``j``-th free generator of the surface group.  Balanced presentations
    have as many surface words as ambient generators.
    """

    alphabet: Alphabet
    surface_words: tuple[Word, ...]
    suture_metadata: tuple[str, ...] = ()
    label: str = ""
    provenance: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "surface_words", tuple(self.surface_words))
        object.__setattr__(self, "suture_metadata", tuple(self.suture_metadata))
        if len(self.surface_words) != self.alphabet.rank:
            raise PresentationError(
                f"unbalanced presentation: {len(self.surface_words)} surface words "
                f"for {self.alphabet.rank} generators"
            )
        for w in self.surface_words:
            if w.alphabet != self.alphabet:
                raise PresentationError("surface word over a foreign alphabet")

    @classmethod
    def from_strings(
        cls,
        names: Sequence[str],
        words: Sequence[str],
        sutures: Sequence[str] = (),
        label: str = "",
        provenance: str = "",
    ) -> "SuturedPresentation":
        alphabet = Alphabet(tuple(names))
        return cls(alphabet, tuple(parse_word(t, alphabet) for t in words), tuple(sutures), label, provenance)

    @property
    def genus(self) -> int:
        return self.alphabet.rank

    @property
    def surface_alphabet(self) -> Alphabet:
        return Alphabet(tuple(f"a{j + 1}" for j in range(self.genus)))

    def word_strings(self) -> list[str]:
        return [format_word(w) for w in self.surface_words]
