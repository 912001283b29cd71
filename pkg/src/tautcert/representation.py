"""Linear representations of a free group over an exact field."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from .algebra import Field, Matrix, det_field, inverse_field
from .words import Alphabet, Word


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Representation:
    """One invertible ``dim x dim`` matrix per generator of ``alphabet``."""

    alphabet: Alphabet
    field: Field
    matrices: tuple[Matrix, ...]
    provenance: str = ""
    _inverses: tuple = dc_field(default=None, init=False, repr=False)
    _cache: dict = dc_field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        mats = tuple(m.map(self.field.coerce) for m in self.matrices)
        object.__setattr__(self, "matrices", mats)
        if len(mats) != self.alphabet.rank:
            raise RepresentationError(
                f"{len(mats)} matrices given for {self.alphabet.rank} generators"
            )
        n = self.dim
        for name, m in zip(self.alphabet.names, mats):
            if m.shape != (n, n):
                raise RepresentationError(f"matrix for {name} has shape {m.shape}, expected {(n, n)}")
            if not det_field(m, self.field.one()):
                raise RepresentationError(f"matrix for {name} is not invertible")
        one, zero = self.field.one(), self.field.zero()
        object.__setattr__(self, "_inverses", tuple(inverse_field(m, one, zero) for m in mats))

    @classmethod
    def from_mapping(cls, alphabet: Alphabet, fld: Field, mats: Mapping[str, Matrix], provenance: str = ""):
        missing = [n for n in alphabet.names if n not in mats]
        if missing:
            raise RepresentationError(f"no matrix given for {', '.join(missing)}")
        extra = [n for n in mats if n not in alphabet.names]
        if extra:
            raise RepresentationError(f"matrices for unknown generators {', '.join(extra)}")
        return cls(alphabet, fld, tuple(mats[n] for n in alphabet.names), provenance)

    @classmethod
    def one_dim(cls, alphabet: Alphabet, fld: Field, values: Sequence, provenance: str = ""):
        return cls(alphabet, fld, tuple(Matrix([[v]]) for v in values), provenance)

    @classmethod
    def trivial(cls, alphabet: Alphabet, fld: Field, dim: int = 1):
        eye = Matrix.identity(dim, fld.one(), fld.zero())
        return cls(alphabet, fld, (eye,) * alphabet.rank, "trivial")

    @property
    def dim(self) -> int:
        return self.matrices[0].nrows

    def identity_matrix(self) -> Matrix:
        return Matrix.identity(self.dim, self.field.one(), self.field.zero())

    def zero_matrix(self) -> Matrix:
        return Matrix.zeros(self.dim, self.dim, self.field.zero())

    def letter(self, a: int) -> Matrix:
        return self.matrices[a - 1] if a > 0 else self._inverses[-a - 1]

    def image(self, w: Word) -> Matrix:
        """Matrix of a word, memoised on word prefixes."""
        if w.alphabet != self.alphabet:
            raise RepresentationError("word and representation use different alphabets")
        letters = w.signed
        cache = self._cache
        if letters in cache:
            return cache[letters]
        k = len(letters)
        while k > 0 and letters[:k] not in cache:
            k -= 1
        m = cache[letters[:k]] if k else self.identity_matrix()
        for j in range(k, len(letters)):
            m = m @ self.letter(letters[j])
            if len(cache) < 200_000:
                cache[letters[: j + 1]] = m
        return m

    def dual(self) -> "Representation":
        """Inverse-transpose representation."""
        return Representation(
            self.alphabet,
            self.field,
            tuple(m.transpose() for m in self._inverses),
            f"dual of ({self.provenance})" if self.provenance else "dual",
        )

    def extend_identity(self, alphabet: Alphabet) -> "Representation":
        """Extend to a larger alphabet (a prefix-extension of ours) by the identity."""
        if alphabet.names[: self.alphabet.rank] != self.alphabet.names:
            raise RepresentationError("target alphabet does not extend the source alphabet")
        extra = alphabet.rank - self.alphabet.rank
        return Representation(
            alphabet, self.field, self.matrices + (self.identity_matrix(),) * extra, self.provenance
        )

    def same_as(self, other: "Representation") -> bool:
        return (
            self.alphabet == other.alphabet
            and self.field == other.field
            and self.matrices == other.matrices
        )

    def describe(self) -> dict:
        return {
            "dim": self.dim,
            "field": self.field.tag,
            "matrices": {
                n: m.to_text(self.field.format) for n, m in zip(self.alphabet.names, self.matrices)
            },
            "provenance": self.provenance,
        }


def dual_representation(rho: Representation) -> Representation:
    return rho.dual()
