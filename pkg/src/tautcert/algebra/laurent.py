"""Multivariate Laurent polynomials with rational coefficients.

An element of ``Q[t_1^{±1}, ..., t_g^{±1}]`` is a dict from exponent
tuples to nonzero :class:`~fractions.Fraction` coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .matrix import Matrix, det_bareiss


def term_key(e: tuple[int, ...]):
    """Graded lexicographic print order: lower total degree first, then
    larger exponents on earlier variables first."""
    return (sum(e), tuple(-x for x in e))


class LaurentPolynomial:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, nvars: int) -> "LaurentPolynomial":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def constant(cls, nvars: int, c) -> "LaurentPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff=1) -> "LaurentPolynomial":
        return cls(len(exponents), {tuple(exponents): coeff})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "LaurentPolynomial":
        e = [0] * nvars
        e[i] = 1
        return cls.monomial(e)

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        p._hash = None
        return p

    def _lift(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("Laurent polynomials in different numbers of variables")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(self.nvars, other)
        return None

    # ring operations
    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPolynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return LaurentPolynomial._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_unit():
                raise ZeroDivisionError("only monomials are invertible")
            ((e, c),) = self.terms.items()
            return LaurentPolynomial.monomial([-x for x in e], 1 / c) ** (-n)
        out = LaurentPolynomial.one(self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, LaurentPolynomial) else other
        if o is None:
            return NotImplemented
        return self.nvars == o.nvars and self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        return len(self.terms) == 1

    # structure
    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """Lexicographically largest term (a group order on Z^g)."""
        e = max(self.terms)
        return e, self.terms[e]

    def min_exponents(self) -> tuple[int, ...]:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self.terms))

    def max_exponents(self) -> tuple[int, ...]:
        if not self.terms:
            return (0,) * self.nvars
        return tuple(max(col) for col in zip(*self.terms))

    def shift(self, e: Sequence[int]) -> "LaurentPolynomial":
        """Multiply by the monomial ``t^e``."""
        return LaurentPolynomial._raw(
            self.nvars, {tuple(a + b for a, b in zip(k, e)): c for k, c in self.terms.items()}
        )

    def is_polynomial(self) -> bool:
        return all(x >= 0 for e in self.terms for x in e)

    def exact_divide(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Quotient ``self / other``; raises if ``other`` does not divide ``self``.

        Leading terms are taken in lex order, which is compatible with
        multiplication on Z^g, so each step peels one quotient term.  Newton
        polytopes add under multiplication, so every quotient exponent lies
        in the box ``[min(self) - min(other), max(self) - max(other)]``;
        leaving it proves the division inexact, and the box is finite, so
        the loop terminates.
        """
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPolynomial.zero(self.nvars)
        lo = tuple(a - b for a, b in zip(self.min_exponents(), other.min_exponents()))
        hi = tuple(a - b for a, b in zip(self.max_exponents(), other.max_exponents()))
        eb, cb = other.leading()
        rem = self
        q: dict = {}
        while rem.terms:
            er, cr = rem.leading()
            e = tuple(a - b for a, b in zip(er, eb))
            if any(x < l or x > h for x, l, h in zip(e, lo, hi)):
                raise ArithmeticError("inexact Laurent division")
            c = cr / cb
            q[e] = c
            rem = rem - LaurentPolynomial._raw(self.nvars, {e: c}) * other
        return LaurentPolynomial(self.nvars, q)

    def substitute_inverse(self) -> "LaurentPolynomial":
        """Apply ``t_i -> t_i^-1`` to every variable."""
        return LaurentPolynomial._raw(
            self.nvars, {tuple(-x for x in e): c for e, c in self.terms.items()}
        )

    def evaluate(self, values: Sequence, one=None):
        """Value at ``t_i = values[i]``; values must be invertible when
        negative exponents occur."""
        if len(values) != self.nvars:
            raise ValueError("wrong number of values")
        total = None
        for e, c in self.terms.items():
            term = c if one is None else one * c
            for v, k in zip(values, e):
                if k:
                    term = term * v**k
            total = term if total is None else total + term
        if total is None:
            return 0 if one is None else one * 0
        return total

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: term_key(t[0]))

    def format(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"t{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = " ".join(
                n if x == 1 else f"{n}^{x}" for n, x in zip(names, e) if x
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = _coef(a)
            elif a == 1:
                body = mono
            else:
                body = f"{_coef(a)} {mono}"
            if k == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPolynomial({self.format()!r})"

    def __str__(self):
        return self.format()


def _coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def laurent_names(generator_names: Sequence[str]) -> list[str]:
    return [f"t_{n}" for n in generator_names]


def det_laurent(m: Matrix) -> LaurentPolynomial:
    """Exact determinant of a square matrix of Laurent polynomials.

    Each row is shifted by a monomial into the polynomial subring, the
    polynomial determinant is found by Bareiss elimination, and the
    monomials are multiplied back.
    """
    if not m.is_square():
        raise ValueError(f"determinant of a non-square {m.nrows}x{m.ncols} matrix")
    if m.nrows == 0:
        raise ValueError("need at least one row to know the number of variables")
    nvars = m[0, 0].nvars
    rows = []
    total_shift = [0] * nvars
    for r in m.rows:
        nonzero = [p for p in r if p]
        if not nonzero:
            return LaurentPolynomial.zero(nvars)
        lo = [min(col) for col in zip(*(p.min_exponents() for p in nonzero))]
        rows.append([p.shift([-x for x in lo]) for p in r])
        total_shift = [a + b for a, b in zip(total_shift, lo)]
    one = LaurentPolynomial.one(nvars)
    zero = LaurentPolynomial.zero(nvars)
    d = det_bareiss(Matrix(rows), lambda a, b: a.exact_divide(b), one, zero)
    return d.shift(total_shift)
