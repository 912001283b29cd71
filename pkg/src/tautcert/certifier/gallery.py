"""Named example presentations."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from ..algebra import QQ, Matrix
from ..representation import Representation
from ..words import Alphabet, Word, commutator, default_names
from .obstruct import attach_handle
from .presentation import SuturedPresentation

GALLERY_NAMES = ("product-g", "gen2-multisuture", "genus3-derived2", "genus3-plus-handles-g", "solvable-K")

GEN2_SUTURES = ("yx", "xaby", "(xaby^2x)^-1")

GENUS3_WORDS = (
    "[[x,y][x^-1,y], z[y^-1,x][y,x]z^-1]",
    "[x,y][y^-1,x^-1]",
    "z",
)

SOLVABLE_PROVENANCE = (
    "level K built from two copies of level K-1 and a fresh generator t: "
    "a = [a_copy1, a_copy2], b = a_copy1 t a_copy2, c = t; the curves dual to "
    "a in each copy are conjugated by the copy's a, all others unchanged; "
    "level 0 is (x, y)"
)


class GalleryError(ValueError):
    pass


@dataclass(frozen=True)
class GalleryEntry:
    presentation: SuturedPresentation
    representation: Optional[Representation] = None


def product(g: int) -> SuturedPresentation:
    if g < 1:
        raise GalleryError("product-g needs g >= 1")
    alphabet = Alphabet.standard(g)
    return SuturedPresentation(alphabet, tuple(alphabet.generators()), (), f"product-{g}", "product sutured handlebody")


def gen2_multisuture() -> SuturedPresentation:
    return SuturedPresentation.from_strings(
        ("x", "y"), ("x y", "y x"), GEN2_SUTURES, "gen2-multisuture", "genus two, three sutures"
    )


def genus3_derived2() -> SuturedPresentation:
    return SuturedPresentation.from_strings(
        ("x", "y", "z"), GENUS3_WORDS, (), "genus3-derived2", "first surface word in the second derived subgroup"
    )


def beta(alphabet: Alphabet) -> Representation:
    """The two-dimensional representation stored with genus3-derived2."""
    return Representation.from_mapping(
        alphabet,
        QQ,
        {
            "x": Matrix([[1, 1], [0, 1]]),
            "y": Matrix([[0, 1], [-1, 0]]),
            "z": Matrix([[1, 0], [0, 1]]),
        },
        "beta",
    )


def genus3_plus_handles(g: int) -> SuturedPresentation:
    if g < 3:
        raise GalleryError("genus3-plus-handles-g needs g >= 3")
    pres = genus3_derived2()
    for _ in range(g - 3):
        pres = attach_handle(pres)
    return SuturedPresentation(
        pres.alphabet, pres.surface_words, pres.suture_metadata, f"genus3-plus-handles-{g}", pres.provenance
    )


def _solvable_level(K: int) -> tuple[int, list[tuple[int, ...]], int, int]:
    """``(rank, words, index of a, index of its dual curve)`` as signed tuples."""
    if K == 0:
        return 2, [(1,), (2,)], 0, 1
    rank, words, ia, ib = _solvable_level(K - 1)
    r = rank
    ab = Alphabet.standard(2 * r + 1)

    def copy(w, off):
        return Word(ab, tuple(a + off if a > 0 else a - off for a in w), reduced=True)

    t = ab.generator(2 * r)
    a1, a2 = copy(words[ia], 0), copy(words[ia], r)
    out = [commutator(a1, a2), a1 * t * a2, t]
    for off, aj in ((0, a1), (r, a2)):
        for j, w in enumerate(words):
            if j == ia:
                continue
            cw = copy(w, off)
            out.append(aj * cw * aj.inverse() if j == ib else cw)
    return 2 * r + 1, [w.signed for w in out], 0, 2


def solvable(K: int) -> SuturedPresentation:
    """Level-``K`` tower presentation; its first surface word has derived depth ``K``."""
    if K < 1:
        raise GalleryError("solvable-K needs K >= 1")
    rank, words, _, _ = _solvable_level(K)
    alphabet = Alphabet(default_names(rank))
    return SuturedPresentation(
        alphabet,
        tuple(Word(alphabet, w, reduced=True) for w in words),
        (),
        f"solvable-{K}",
        SOLVABLE_PROVENANCE,
    )


_PATTERNS = (
    (re.compile(r"product-(\d+)"), product),
    (re.compile(r"genus3-plus-handles-(\d+)"), genus3_plus_handles),
    (re.compile(r"solvable-(\d+)"), solvable),
)


def gallery(name: str) -> GalleryEntry:
    if name == "gen2-multisuture":
        return GalleryEntry(gen2_multisuture())
    if name == "genus3-derived2":
        pres = genus3_derived2()
        return GalleryEntry(pres, beta(pres.alphabet))
    for pat, build in _PATTERNS:
        m = pat.fullmatch(name)
        if m:
            return GalleryEntry(build(int(m.group(1))))
    raise GalleryError(f"unknown gallery entry {name!r}; known: {', '.join(GALLERY_NAMES)}")
