"""Small dense matrices over exact rings, with determinants."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence


class Matrix:
    """Immutable rectangular matrix.  Entries are any exact ring elements
    supporting ``+ - *`` (and ``/`` for the field routines)."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int, one, zero) -> "Matrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int, zero) -> "Matrix":
        return cls([[zero] * n for _ in range(m)])

    @classmethod
    def blocks(cls, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a block matrix from a grid of equally shaped blocks."""
        rows = []
        for brow in grid:
            h = brow[0].nrows
            for r in range(h):
                rows.append([x for b in brow for x in b.rows[r]])
        return cls(rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def map(self, f: Callable) -> "Matrix":
        return Matrix([[f(x) for x in r] for r in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows)) if self.rows else Matrix([])

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def scale(self, c) -> "Matrix":
        return self.map(lambda x: c * x)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = r[0] * c[0]
                for a, b in zip(r[1:], c[1:]):
                    acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(out)

    __mul__ = __matmul__

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.rows]})"

    def to_text(self, fmt: Callable = str) -> str:
        return "[" + ",".join("[" + ",".join(fmt(x) for x in r) + "]" for r in self.rows) + "]"


def _require_square(m: Matrix):
    if not m.is_square():
        raise ValueError(f"determinant of a non-square {m.nrows}x{m.ncols} matrix")


def det_field(m: Matrix, one=1):
    """Determinant over a field by Gaussian elimination.

    The pivot is the first nonzero entry at or below the diagonal.
    ``one`` is returned for the empty matrix.
    """
    _require_square(m)
    n = m.nrows
    if n == 0:
        return one
    a = [list(r) for r in m.rows]
    det = None
    sign = 1
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k]), None)
        if p is None:
            return a[0][0] * 0
        if p != k:
            a[k], a[p] = a[p], a[k]
            sign = -sign
        piv = a[k][k]
        det = piv if det is None else det * piv
        inv = piv.reciprocal() if hasattr(piv, "reciprocal") else Fraction(1) / piv
        for i in range(k + 1, n):
            if a[i][k]:
                f = a[i][k] * inv
                ri, rk = a[i], a[k]
                for j in range(k + 1, n):
                    ri[j] = ri[j] - f * rk[j]
    return det if sign == 1 else -det


def inverse_field(m: Matrix, one, zero) -> Matrix:
    """Gauss-Jordan inverse over a field."""
    _require_square(m)
    n = m.nrows
    a = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(m.rows)]
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k]), None)
        if p is None:
            raise ZeroDivisionError("matrix is singular")
        a[k], a[p] = a[p], a[k]
        piv = a[k][k]
        a[k] = [x / piv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return Matrix([r[n:] for r in a])


def det_bareiss(m: Matrix, exact_div: Callable, one, zero):
    """Fraction-free Bareiss elimination over an integral domain.

    ``exact_div(a, b)`` must return ``a / b`` when ``b`` divides ``a``.
    """
    _require_square(m)
    n = m.nrows
    if n == 0:
        return one
    a = [list(r) for r in m.rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            p = next((i for i in range(k + 1, n) if a[i][k]), None)
            if p is None:
                return zero
            a[k], a[p] = a[p], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            ri, rk = a[i], a[k]
            for j in range(k + 1, n):
                num = ri[j] * akk - aik * rk[j]
                ri[j] = exact_div(num, prev) if prev != one else num
            ri[k] = zero
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d
