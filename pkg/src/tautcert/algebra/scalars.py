"""Exact scalar fields: rationals, Gaussian rationals and prime fields.

Rationals are plain :class:`fractions.Fraction`.  Each field is described
by a small :class:`Field` object that knows its zero, one, how to parse and
print elements, and how to draw random ones.
"""

from __future__ import annotations

import re
from fractions import Fraction
from random import Random


class ScalarParseError(ValueError):
    pass


class GaussianRational:
    """``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re_=0, im=0):
        self.re = Fraction(re_)
        self.im = Fraction(im)

    @staticmethod
    def _lift(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x, 0)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def reciprocal(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, n: int):
        base = self if n >= 0 else self.reciprocal()
        out = GaussianRational(1)
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({format_gaussian(self)!r})"

    def __str__(self):
        return format_gaussian(self)


class FpElement:
    """Residue modulo an odd prime ``p``."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.p = p
        self.v = v % p

    def _lift(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{x.p}")
            return x.v
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(o - self.v, self.p)

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FpElement(self.v * o, self.p)

    __rmul__ = __mul__

    def reciprocal(self) -> "FpElement":
        if self.v == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return FpElement(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.reciprocal() ** (-n)
        return FpElement(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"FpElement({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


# --- text forms ---------------------------------------------------------------


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_gaussian(z: GaussianRational) -> str:
    if z.im == 0:
        return format_rational(z.re)
    im = f"{format_rational(z.im)} i"
    if z.re == 0:
        return im
    sign = "+" if z.im > 0 else "-"
    return f"{format_rational(z.re)}{sign}{format_rational(abs(z.im))} i"


_RAT = r"[+-]?\d+(?:/\d+)?"


def parse_rational(text: str) -> Fraction:
    t = text.strip().replace(" ", "")
    if not re.fullmatch(_RAT, t):
        raise ScalarParseError(f"not a rational number: {text!r}")
    try:
        return Fraction(t)
    except ZeroDivisionError:
        raise ScalarParseError(f"zero denominator in {text!r}") from None


def parse_gaussian(text: str) -> GaussianRational:
    t = text.strip().replace(" ", "")
    if not t:
        raise ScalarParseError("empty Gaussian rational")
    if not t.endswith("i"):
        return GaussianRational(parse_rational(t), 0)
    body = t[:-1]
    # split real and imaginary parts at the last sign that is not leading
    m = re.fullmatch(rf"({_RAT})?([+-])?(\d+(?:/\d+)?)?", body)
    if not m:
        raise ScalarParseError(f"not a Gaussian rational: {text!r}")
    re_part, sign, im_part = m.groups()
    if re_part is not None and sign is None and im_part is None:
        # "3i", "-2/3i"
        return GaussianRational(0, parse_rational(re_part))
    if re_part is not None and sign is None:
        raise ScalarParseError(f"not a Gaussian rational: {text!r}")
    im = parse_rational(im_part) if im_part is not None else Fraction(1)
    if sign == "-":
        im = -im
    return GaussianRational(parse_rational(re_part) if re_part else 0, im)


# --- field descriptors --------------------------------------------------------


class Field:
    tag: str

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def coerce(self, x):
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, x) -> str:
        return str(x)

    def conjugate(self, x):
        return x

    def __eq__(self, other):
        return isinstance(other, Field) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return f"Field({self.tag})"


class RationalField(Field):
    tag = "Q"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, (FpElement, GaussianRational)):
            raise TypeError(f"cannot coerce {x!r} into Q")
        return Fraction(x)

    def parse(self, text):
        return parse_rational(text)

    def format(self, x):
        return format_rational(x)


class GaussianField(Field):
    tag = "QI"

    def zero(self):
        return GaussianRational(0)

    def one(self):
        return GaussianRational(1)

    def coerce(self, x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, FpElement):
            raise TypeError(f"cannot coerce {x!r} into Q(i)")
        return GaussianRational(x)

    def parse(self, text):
        return parse_gaussian(text)

    def format(self, x):
        return format_gaussian(self.coerce(x))

    def conjugate(self, x):
        return self.coerce(x).conjugate()


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField(Field):
    def __init__(self, p: int):
        if p == 2 or p > 2**31 or not is_prime(p):
            raise ValueError(f"need an odd prime below 2^31, got {p}")
        self.p = p
        self.tag = f"Fp:{p}"

    def zero(self):
        return FpElement(0, self.p)

    def one(self):
        return FpElement(1, self.p)

    def coerce(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise ValueError(f"element of F_{x.p} given to F_{self.p}")
            return x
        if isinstance(x, GaussianRational):
            raise TypeError("cannot coerce a Gaussian rational into F_p")
        if isinstance(x, Fraction):
            return FpElement(x.numerator, self.p) / x.denominator
        return FpElement(int(x), self.p)

    def parse(self, text):
        t = text.strip()
        if not re.fullmatch(r"[+-]?\d+", t):
            raise ScalarParseError(f"not an element of F_{self.p}: {text!r}")
        return FpElement(int(t), self.p)

    def random_element(self, rng: Random) -> FpElement:
        return FpElement(rng.randrange(self.p), self.p)


QQ = RationalField()
QQI = GaussianField()


def field_from_tag(tag: str) -> Field:
    tag = tag.strip()
    if tag == "Q":
        return QQ
    if tag == "QI":
        return QQI
    m = re.fullmatch(r"Fp:(\d+)", tag)
    if m:
        return PrimeField(int(m.group(1)))
    raise ScalarParseError(f"unknown field tag {tag!r} (expected Q, QI or Fp:<prime>)")
