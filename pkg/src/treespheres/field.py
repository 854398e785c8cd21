"""Exact scalars for sphere coordinates.

A scalar is an element of the field Q(i, sqrt3), stored as four Fractions
(coefficients of 1, i, sqrt3 and i*sqrt3).  Ordinary Gaussian rationals are
the elements whose sqrt3 components vanish; those serialize as the usual
[re, im] pair.  The sqrt3 part exists so that Moebius maps of exact order 3
(needed for order-3 sphere rotations) have representable fixed points.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rat = Fraction

_SQRT3 = math.sqrt(3.0)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class ExactComplex:
    """Element a + b*i + c*sqrt3 + d*i*sqrt3 with rational a, b, c, d."""

    __slots__ = ("re", "im", "rt", "imrt")

    def __init__(self, re=0, im=0, rt=0, imrt=0):
        self.re = _as_fraction(re)
        self.im = _as_fraction(im)
        self.rt = _as_fraction(rt)
        self.imrt = _as_fraction(imrt)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "ExactComplex":
        return _ZERO

    @classmethod
    def one(cls) -> "ExactComplex":
        return _ONE

    @classmethod
    def from_int(cls, n: int) -> "ExactComplex":
        return cls(n)

    @staticmethod
    def coerce(x: "Scalarlike") -> "ExactComplex":
        if isinstance(x, ExactComplex):
            return x
        if isinstance(x, (int, Fraction)):
            return ExactComplex(x)
        raise TypeError(f"cannot coerce {x!r} to ExactComplex")

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.re or self.im or self.rt or self.imrt)

    def is_rational(self) -> bool:
        return not (self.im or self.rt or self.imrt)

    def is_gaussian(self) -> bool:
        return not (self.rt or self.imrt)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re + o.re, self.im + o.im,
                            self.rt + o.rt, self.imrt + o.imrt)

    __radd__ = __add__

    def __neg__(self):
        return ExactComplex(-self.re, -self.im, -self.rt, -self.imrt)

    def __sub__(self, other):
        return self + (-ExactComplex.coerce(other))

    def __rsub__(self, other):
        return ExactComplex.coerce(other) + (-self)

    def __mul__(self, other):
        o = ExactComplex.coerce(other)
        a, b, c, d = self.re, self.im, self.rt, self.imrt
        e, f, g, h = o.re, o.im, o.rt, o.imrt
        if not (c or d or g or h):
            # gaussian fast path
            if not (b or f):
                return ExactComplex(a * e)
            return ExactComplex(a * e - b * f, a * f + b * e)
        # basis products: i*i=-1, s*s=3, (is)*(is)=-3, i*s=is, etc.
        return ExactComplex(
            a * e - b * f + 3 * (c * g - d * h),
            a * f + b * e + 3 * (c * h + d * g),
            a * g + c * e - (b * h + d * f),
            a * h + d * e + b * g + c * f,
        )

    __rmul__ = __mul__

    def conj_i(self) -> "ExactComplex":
        """Complex conjugation i -> -i."""
        return ExactComplex(self.re, -self.im, self.rt, -self.imrt)

    def conj_rt(self) -> "ExactComplex":
        """Galois conjugation sqrt3 -> -sqrt3."""
        return ExactComplex(self.re, self.im, -self.rt, -self.imrt)

    def norm_q(self) -> Fraction:
        """Rational norm: product of the four Galois conjugates."""
        z1 = self * self.conj_i()            # lands in Q(sqrt3)
        w = z1 * z1.conj_rt()                # rational
        assert w.is_rational()
        return w.re

    def inverse(self) -> "ExactComplex":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        if not (self.rt or self.imrt):
            if not self.im:
                return ExactComplex(1 / self.re)
            n2 = self.re * self.re + self.im * self.im
            return ExactComplex(self.re / n2, -self.im / n2)
        # 1/z = (product of the other three conjugates) / norm
        other = self.conj_i() * (self * self.conj_i()).conj_rt()
        n = self.norm_q()
        return ExactComplex(other.re / n, other.im / n, other.rt / n, other.imrt / n)

    def __truediv__(self, other):
        return self * ExactComplex.coerce(other).inverse()

    def __rtruediv__(self, other):
        return ExactComplex.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparisons / hashing -----------------------------------------

    def __eq__(self, other):
        try:
            o = ExactComplex.coerce(other)
        except TypeError:
            return NotImplemented
        return (self.re == o.re and self.im == o.im
                and self.rt == o.rt and self.imrt == o.imrt)

    def __hash__(self):
        return hash((self.re, self.im, self.rt, self.imrt))

    # -- conversions ----------------------------------------------------

    def to_complex(self) -> complex:
        return complex(float(self.re) + float(self.rt) * _SQRT3,
                       float(self.im) + float(self.imrt) * _SQRT3)

    def __repr__(self):
        if self.is_gaussian():
            if not self.im:
                return f"Q({self.re})"
            return f"Q({self.re}, {self.im})"
        return f"Q({self.re}, {self.im}, rt={self.rt}, imrt={self.imrt})"


Scalarlike = Union[ExactComplex, int, Fraction]

_ZERO = ExactComplex(0)
_ONE = ExactComplex(1)


def Q(re=0, im=0, rt=0, imrt=0) -> ExactComplex:
    """Shorthand constructor; accepts ints, Fractions or 'p/q' strings."""
    return ExactComplex(re, im, rt, imrt)


I = Q(0, 1)
OMEGA = Q(Fraction(-1, 2), 0, 0, Fraction(1, 2))   # primitive cube root of unity
SQRT3 = Q(0, 0, 1, 0)


def sqrt_fraction(x: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if x < 0:
        return None
    if x == 0:
        return Fraction(0)
    pn = math.isqrt(x.numerator)
    pd = math.isqrt(x.denominator)
    if pn * pn == x.numerator and pd * pd == x.denominator:
        return Fraction(pn, pd)
    return None


def sqrt_gaussian(z: ExactComplex):
    """Exact square root of a Gaussian rational inside Q(i), or None.

    Uses sqrt(x+iy) = u + iv with u^2 = (x + |z|)/2, v = y/(2u).  Non-Gaussian
    inputs (nonzero sqrt3 parts) are not attempted.
    """
    if not z.is_gaussian():
        return None
    x, y = z.re, z.im
    if y == 0:
        if x >= 0:
            r = sqrt_fraction(x)
            return None if r is None else ExactComplex(r)
        r = sqrt_fraction(-x)
        return None if r is None else ExactComplex(0, r)
    n = sqrt_fraction(x * x + y * y)
    if n is None:
        return None
    u2 = (x + n) / 2
    u = sqrt_fraction(u2)
    if u is None or u == 0:
        return None
    v = y / (2 * u)
    return ExactComplex(u, v)
