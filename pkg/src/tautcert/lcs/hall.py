"""Hall basic commutators, Lie coordinates and the collection process.

Basic commutators are written ``[x, y]`` with ``x < y`` and, when
``y = [w, z]``, ``x >= w``.  Within one weight they are ordered by the pair
``(order of left, order of right)``; every commutator of a given weight
comes after all commutators of smaller weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from ..words import Alphabet, Word, commutator
from .magnus import Monomial, lcs_weight, magnus_expand


@dataclass(frozen=True, repr=False)
class BasicCommutator:
    weight: int
    order: int
    generator: int | None = None
    left: "BasicCommutator | None" = None
    right: "BasicCommutator | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.generator is not None

    def format(self, names: Sequence[str] | None = None) -> str:
        if self.is_leaf:
            return names[self.generator] if names else f"x{self.generator + 1}"
        return f"[{self.left.format(names)},{self.right.format(names)}]"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"BasicCommutator({self.format()!r}, weight={self.weight}, order={self.order})"

    def as_word(self, alphabet: Alphabet) -> Word:
        if self.is_leaf:
            return alphabet.generator(self.generator)
        return commutator(self.left.as_word(alphabet), self.right.as_word(alphabet))

    def lie_polynomial(self) -> dict[Monomial, int]:
        """Bracket expansion ``[A, B] = AB - BA`` in the free associative ring."""
        return dict(_lie_poly(self))


@lru_cache(maxsize=None)
def _lie_poly(b: BasicCommutator) -> tuple:
    if b.is_leaf:
        return (((b.generator,), 1),)
    A = dict(_lie_poly(b.left))
    B = dict(_lie_poly(b.right))
    out: dict = {}
    for m1, c1 in A.items():
        for m2, c2 in B.items():
            out[m1 + m2] = out.get(m1 + m2, 0) + c1 * c2
            out[m2 + m1] = out.get(m2 + m1, 0) - c1 * c2
    return tuple((m, c) for m, c in sorted(out.items()) if c)


@lru_cache(maxsize=None)
def hall_basis(rank: int, max_weight: int) -> tuple[BasicCommutator, ...]:
    """All basic commutators of weight ``<= max_weight`` in increasing order."""
    if rank < 1 or max_weight < 1:
        raise ValueError("rank and max_weight must be positive")
    by_weight: dict[int, list[BasicCommutator]] = {
        1: [BasicCommutator(1, i, generator=i) for i in range(rank)]
    }
    order = rank
    for k in range(2, max_weight + 1):
        cands = []
        for i in range(1, k // 2 + 1):
            for x in by_weight[i]:
                for y in by_weight[k - i]:
                    if not x.order < y.order:
                        continue
                    if not y.is_leaf and not x.order >= y.left.order:
                        continue
                    cands.append((x, y))
        cands.sort(key=lambda p: (p[0].order, p[1].order))
        level = []
        for x, y in cands:
            level.append(BasicCommutator(k, order, left=x, right=y))
            order += 1
        by_weight[k] = level
    return tuple(b for k in sorted(by_weight) for b in by_weight[k])


def basic_commutators_of_weight(rank: int, k: int) -> tuple[BasicCommutator, ...]:
    return tuple(b for b in hall_basis(rank, k) if b.weight == k)


def witt_number(rank: int, k: int) -> int:
    """Necklace count ``(1/k) sum_{d|k} mu(d) rank^(k/d)``."""
    total = 0
    for d in range(1, k + 1):
        if k % d == 0:
            total += _mobius(d) * rank ** (k // d)
    return total // k


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


class LieCoordinateError(ValueError):
    def __init__(self, message: str, degree: int | None = None):
        super().__init__(message)
        self.degree = degree


class _WeightSolver:
    """Coordinates of a homogeneous Lie element in the weight-k Hall basis."""

    def __init__(self, rank: int, k: int):
        self.basis = basic_commutators_of_weight(rank, k)
        polys = [b.lie_polynomial() for b in self.basis]
        monos = sorted({m for p in polys for m in p})
        self.monos = monos
        n = len(self.basis)
        cols = [[Fraction(p.get(m, 0)) for p in polys] for m in monos]
        # choose n independent rows, then invert that square block
        pivots, echelon = [], []
        for r, row in enumerate(cols):
            v = list(row)
            for pr, e in echelon:
                j = next(i for i, x in enumerate(e) if x)
                if v[j]:
                    f = v[j] / e[j]
                    v = [a - f * b for a, b in zip(v, e)]
            if any(v):
                echelon.append((r, v))
                pivots.append(r)
            if len(pivots) == n:
                break
        if len(pivots) != n:
            raise AssertionError("Hall basis Lie images are not independent")
        self.pivot_rows = pivots
        square = [cols[r] for r in pivots]
        self.inverse = _invert(square)
        self.polys = polys

    def solve(self, target: dict[Monomial, int]) -> tuple[int, ...]:
        rhs = [Fraction(target.get(self.monos[r], 0)) for r in self.pivot_rows]
        sol = [sum(a * b for a, b in zip(row, rhs)) for row in self.inverse]
        recon: dict[Monomial, Fraction] = {}
        for c, p in zip(sol, self.polys):
            if c:
                for m, v in p.items():
                    recon[m] = recon.get(m, 0) + c * v
        recon = {m: v for m, v in recon.items() if v}
        if recon != {m: Fraction(v) for m, v in target.items() if v}:
            raise LieCoordinateError("degree part is not a Lie element")
        if any(c.denominator != 1 for c in sol):
            raise AssertionError(f"non-integral Hall coordinates {sol}")
        return tuple(int(c) for c in sol)


def _invert(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(rows)
    a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for k in range(n):
        p = next(i for i in range(k, n) if a[i][k])
        a[k], a[p] = a[p], a[k]
        piv = a[k][k]
        a[k] = [x / piv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [r[n:] for r in a]


@lru_cache(maxsize=None)
def _solver(rank: int, k: int) -> _WeightSolver:
    return _WeightSolver(rank, k)


@dataclass(frozen=True)
class LcsCoordinates:
    weight: int
    basis: tuple[BasicCommutator, ...]
    coefficients: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __add__(self, other: "LcsCoordinates") -> "LcsCoordinates":
        if self.weight != other.weight or self.basis != other.basis:
            raise ValueError("coordinates of different weights")
        return LcsCoordinates(
            self.weight, self.basis, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )


def lie_coordinates(w: Word, k: int) -> LcsCoordinates:
    """Coordinates of ``w`` in ``gamma_k / gamma_{k+1}`` (weight-k Hall basis)."""
    rank = w.alphabet.rank
    series = magnus_expand(w, k)
    for d in range(1, k):
        if series.degree_part(d):
            raise LieCoordinateError(
                f"word has a nonzero degree-{d} Magnus term, so it is not in weight {k}", d
            )
    solver = _solver(rank, k)
    if not solver.basis:
        return LcsCoordinates(k, (), ())
    return LcsCoordinates(k, solver.basis, solver.solve(series.degree_part(k)))


def collect(w: Word, max_weight: int) -> list[tuple[BasicCommutator, int]]:
    """Ordered basic-commutator powers agreeing with ``w`` modulo ``gamma_{K+1}``.

    At each weight the coordinates of the running remainder are read off
    and the remainder is divided on the left by the corresponding product.
    """
    if max_weight < 1:
        raise ValueError("max_weight must be at least 1")
    alphabet = w.alphabet
    out: list[tuple[BasicCommutator, int]] = []
    rem = w
    for k in range(1, max_weight + 1):
        if rem.is_identity():
            break
        coords = lie_coordinates(rem, k)
        block = alphabet.identity()
        for b, e in zip(coords.basis, coords.coefficients):
            if e:
                out.append((b, e))
                block = block * b.as_word(alphabet) ** e
        rem = block.inverse() * rem
    return out


def collected_word(collected: Sequence[tuple[BasicCommutator, int]], alphabet: Alphabet) -> Word:
    out = alphabet.identity()
    for b, e in collected:
        out = out * b.as_word(alphabet) ** e
    return out


def collection_remainder_weight(w: Word, max_weight: int):
    """Weight of ``w * (collected product)^-1`` measured with cutoff ``K + 1``."""
    prod = collected_word(collect(w, max_weight), w.alphabet)
    return lcs_weight(w * prod.inverse(), max_weight + 1)
