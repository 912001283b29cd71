"""Freely reduced words in a finitely generated free group.

A letter is stored as a nonzero integer: generator ``i`` (0-based) is
``i + 1`` and its inverse is ``-(i + 1)``.  Words are reduced eagerly, so
every :class:`Word` in circulation is freely reduced.

The commutator convention is fixed throughout the package::

    [u, v] = u v u^-1 v^-1
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

COMMUTATOR_CONVENTION = "[u,v] = u v u^-1 v^-1"

_XYZ = ("x", "y", "z")


class WordError(ValueError):
    pass


class WordSyntaxError(WordError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        pointer = " " * position + "^"
        super().__init__(f"{message} at position {position}\n  {text}\n  {pointer}")


class UnknownGeneratorError(WordError):
    def __init__(self, name: str, text: str = "", position: int = 0):
        self.name = name
        self.position = position
        super().__init__(f"unknown generator {name!r} at position {position}")


class AlphabetMismatchError(WordError):
    pass


@dataclass(frozen=True)
class Alphabet:
    """Ordered generator names of a free group."""

    names: tuple[str, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("an alphabet needs at least one generator")
        if len(set(names)) != len(names):
            raise ValueError(f"generator names must be distinct: {names}")
        for n in names:
            if not re.fullmatch(r"[A-Za-z]+[0-9]*", n):
                raise ValueError(f"bad generator name {n!r}")
        index = {n: i for i, n in enumerate(names)}
        # x, y, z accepted as aliases of x1, x2, x3 for the default naming
        if names == default_names(len(names)) and len(names) <= 3:
            for i, a in enumerate(_XYZ[: len(names)]):
                index.setdefault(a, i)
        object.__setattr__(self, "_index", index)

    @classmethod
    def standard(cls, rank: int) -> "Alphabet":
        return cls(default_names(rank))

    @classmethod
    def xyz(cls, rank: int) -> "Alphabet":
        if rank > 3:
            raise ValueError("xyz naming only exists for rank <= 3")
        return cls(_XYZ[:rank])

    @property
    def rank(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    def __contains__(self, name) -> bool:
        return name in self._index

    def lookup_names(self) -> Iterable[str]:
        return self._index.keys()

    def generator(self, i: int) -> "Word":
        return Word(self, (i + 1,))

    def generators(self) -> list["Word"]:
        return [self.generator(i) for i in range(self.rank)]

    def identity(self) -> "Word":
        return Word(self, ())

    def extend(self, name: str | None = None) -> "Alphabet":
        """Alphabet with one fresh generator appended."""
        return Alphabet(self.names + (name or fresh_name(self.names),))

    def __str__(self):
        return " ".join(self.names)


def default_names(rank: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(rank))


_FRESH_LETTERS = "xyzwuvstpqrabcdefghijklmno"


def fresh_name(names: Sequence[str]) -> str:
    taken = set(names)
    if all(len(n) == 1 for n in names):
        for c in _FRESH_LETTERS:
            if c not in taken:
                return c
    k = len(names) + 1
    while f"x{k}" in taken:
        k += 1
    return f"x{k}"


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


class Word:
    """An element of the free group on ``alphabet``, always freely reduced."""

    __slots__ = ("alphabet", "_l", "_hash")

    def __init__(self, alphabet: Alphabet, letters: Iterable[int] = (), reduced: bool = False):
        self.alphabet = alphabet
        letters = tuple(letters)
        n = alphabet.rank
        for a in letters:
            if a == 0 or abs(a) > n:
                raise ValueError(f"letter {a} outside alphabet of rank {n}")
        self._l = letters if reduced else _reduce(letters)
        self._hash = None

    @classmethod
    def from_pairs(cls, alphabet: Alphabet, pairs: Iterable[tuple[int, int]]) -> "Word":
        return cls(alphabet, ((i + 1) * s for i, s in pairs))

    @property
    def letters(self) -> tuple[tuple[int, int], ...]:
        """The letters as ``(generator index, sign)`` pairs."""
        return tuple((abs(a) - 1, 1 if a > 0 else -1) for a in self._l)

    @property
    def signed(self) -> tuple[int, ...]:
        return self._l

    def __len__(self):
        return len(self._l)

    def __iter__(self) -> Iterator[int]:
        return iter(self._l)

    def __bool__(self):
        return bool(self._l)

    def is_identity(self) -> bool:
        return not self._l

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self._l == other._l and self.alphabet == other.alphabet

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._l)
        return self._hash

    def __lt__(self, other: "Word") -> bool:
        return shortlex_key(self) < shortlex_key(other)

    def _check(self, other: "Word"):
        if self.alphabet != other.alphabet:
            raise AlphabetMismatchError(f"alphabets differ: {self.alphabet} vs {other.alphabet}")

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        self._check(other)
        a, b = self._l, other._l
        k = 0
        m = min(len(a), len(b))
        while k < m and a[-1 - k] == -b[k]:
            k += 1
        return Word(self.alphabet, a[: len(a) - k] + b[k:], reduced=True)

    def inverse(self) -> "Word":
        return Word(self.alphabet, tuple(-a for a in reversed(self._l)), reduced=True)

    def __invert__(self) -> "Word":
        return self.inverse()

    def __pow__(self, n: int) -> "Word":
        base = self if n >= 0 else self.inverse()
        out = self.alphabet.identity()
        for _ in range(abs(n)):
            out = out * base
        return out

    def __repr__(self):
        return f"Word({format_word(self)!r})"

    def __str__(self):
        return format_word(self)


def shortlex_key(w: Word) -> tuple:
    return (len(w), tuple((abs(a), -a) for a in w.signed))


def multiply(u: Word, v: Word) -> Word:
    return u * v


def invert(w: Word) -> Word:
    return w.inverse()


def commutator(u: Word, v: Word) -> Word:
    """``[u, v] = u v u^-1 v^-1``."""
    u._check(v)
    return u * v * u.inverse() * v.inverse()


def conjugate(u: Word, v: Word) -> Word:
    """``u v u^-1``."""
    return u * v * u.inverse()


def exponent_vector(w: Word) -> tuple[int, ...]:
    vec = [0] * w.alphabet.rank
    for a in w.signed:
        vec[abs(a) - 1] += 1 if a > 0 else -1
    return tuple(vec)


def apply_homomorphism(w: Word, images: Sequence[Word]) -> Word:
    """Substitute ``images[i]`` for generator ``i`` of ``w``."""
    if len(images) != w.alphabet.rank:
        raise ValueError(
            f"homomorphism needs {w.alphabet.rank} images, got {len(images)}"
        )
    if not images:
        raise ValueError("empty image list")
    target = images[0].alphabet
    for im in images:
        if im.alphabet != target:
            raise AlphabetMismatchError("images live in different alphabets")
    inverses = [im.inverse() for im in images]
    out: list[int] = []
    for a in w.signed:
        seg = images[a - 1].signed if a > 0 else inverses[-a - 1].signed
        for b in seg:
            if out and out[-1] == -b:
                out.pop()
            else:
                out.append(b)
    return Word(target, out, reduced=True)


def format_word(w: Word, sep: str = " ") -> str:
    """Canonical text: letters separated by ``sep``, inverses as ``^-1``; identity is ``1``."""
    if not w.signed:
        return "1"
    names = w.alphabet.names
    return sep.join(names[a - 1] if a > 0 else f"{names[-a - 1]}^-1" for a in w.signed)


# --- parser -----------------------------------------------------------------
#
# word  := term+
# term  := atom power?
# atom  := identifier | '(' word ')' | '[' word ',' word ']' | '1'
# power := '^' '-'? digits        (also '^{-2}')


class _Parser:
    def __init__(self, text: str, alphabet: Alphabet, bracket=None):
        self.text = text
        self.bracket = bracket or commutator
        self.alphabet = alphabet
        self.pos = 0
        self.names = sorted(alphabet.lookup_names(), key=len, reverse=True)

    def error(self, msg: str, pos: int | None = None):
        raise WordSyntaxError(msg, self.text, self.pos if pos is None else pos)

    def skip(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            self.error(f"expected {ch!r}, got {got!r}")
        self.pos += 1

    def parse(self) -> Word:
        w = self.word()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return w

    def word(self) -> Word:
        out = self.alphabet.identity()
        n = 0
        while self.peek() and self.peek() not in ",])":
            out = out * self.term()
            n += 1
        if n == 0:
            self.error("expected a word")
        return out

    def term(self) -> Word:
        a = self.atom()
        if self.peek() == "^":
            self.pos += 1
            return a ** self.power()
        return a

    def power(self) -> int:
        self.skip()
        m = re.compile(r"\{\s*(-?\s*\d+)\s*\}|(-?\s*\d+)").match(self.text, self.pos)
        if not m:
            self.error("expected an integer exponent")
        self.pos = m.end()
        return int((m.group(1) or m.group(2)).replace(" ", ""))

    def atom(self) -> Word:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            w = self.word()
            self.expect(")")
            return w
        if ch == "[":
            self.pos += 1
            u = self.word()
            self.expect(",")
            v = self.word()
            self.expect("]")
            return self.bracket(u, v)
        if ch == "1":
            self.pos += 1
            return self.alphabet.identity()
        if ch.isalpha():
            return self.identifier()
        self.error(f"unexpected {ch!r}" if ch else "unexpected end of input")

    def identifier(self) -> Word:
        start = self.pos
        t = self.text
        run = re.compile(r"[A-Za-z]+[0-9]*").match(t, start).group(0)
        if run in self.alphabet:
            self.pos += len(run)
            return self.alphabet.generator(self.alphabet.index(run))
        # juxtaposed names without separators, e.g. "xy" over {x, y}
        for name in self.names:
            if t.startswith(name, start):
                end = start + len(name)
                # a name must not stop in the middle of a digit run
                if name[-1].isdigit() and end < len(t) and t[end].isdigit():
                    continue
                self.pos = end
                return self.alphabet.generator(self.alphabet.index(name))
        raise UnknownGeneratorError(run, t, start)


def parse_word(text: str, alphabet: Alphabet, bracket=None) -> Word:
    """Parse ``text`` over ``alphabet``.

    ``bracket`` overrides the meaning of ``[u, v]``; it exists for
    comparing against sources that use another commutator convention.
    """
    return _Parser(text, alphabet, bracket).parse()


def infer_alphabet(text: str) -> Alphabet:
    """Guess generator names from a word text (used by the command-line tools)."""
    indexed = [int(m) for m in re.findall(r"[A-Za-z]+?(\d+)", text)]
    if indexed:
        return Alphabet.standard(max(indexed))
    letters = {c for c in text if c.isalpha()}
    order = {c: k for k, c in enumerate(_FRESH_LETTERS)}
    names = sorted(letters, key=lambda c: (order.get(c, 99), c))
    return Alphabet(tuple(names) or ("x",))
