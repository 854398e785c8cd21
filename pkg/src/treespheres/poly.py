"""Dense univariate polynomials over an exact field.

Coefficients may be any scalar type exposing zero()/one() classmethods and
field arithmetic (ExactComplex, or rational functions in a formal parameter).
Coefficients are stored lowest degree first with no trailing zeros; the zero
polynomial has an empty coefficient list.
"""

from __future__ import annotations

from typing import Sequence

from .field import ExactComplex, sqrt_gaussian


class Polynomial:
    __slots__ = ("coeffs", "scalar")

    def __init__(self, coeffs: Sequence, scalar=ExactComplex):
        self.scalar = scalar
        cs = [c if isinstance(c, scalar) else scalar.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = cs

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, scalar=ExactComplex) -> "Polynomial":
        return cls([], scalar)

    @classmethod
    def const(cls, c, scalar=ExactComplex) -> "Polynomial":
        return cls([c], scalar)

    @classmethod
    def x(cls, scalar=ExactComplex) -> "Polynomial":
        return cls([scalar.zero(), scalar.one()], scalar)

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else self.scalar.zero()

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __repr__(self):
        return f"Poly({self.coeffs!r})"

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out, self.scalar)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs], self.scalar)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.scalar)
        z = self.scalar.zero()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out, self.scalar)

    def scale(self, c) -> "Polynomial":
        c = self.scalar.coerce(c) if not isinstance(c, self.scalar) else c
        return Polynomial([a * c for a in self.coeffs], self.scalar)

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        z = self.scalar.zero()
        return Polynomial([z] * k + self.coeffs, self.scalar)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        lead = self.leading()
        return Polynomial([c / lead for c in self.coeffs], self.scalar)

    def divmod(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = Polynomial.zero(self.scalar)
        r = self
        dlead = other.leading()
        while not r.is_zero() and r.degree >= other.degree:
            f = r.leading() / dlead
            k = r.degree - other.degree
            t = Polynomial.const(f, self.scalar).shift(k)
            q = q + t
            r = r - other.shift(k).scale(f)
        return q, r

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def evaluate(self, x):
        """Horner evaluation at a scalar."""
        acc = self.scalar.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        if self.degree < 1:
            return Polynomial.zero(self.scalar)
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            out.append(c * self.scalar.from_int(i))
        return Polynomial(out, self.scalar)

    def reversed_coeffs(self) -> "Polynomial":
        """x^deg * p(1/x): coefficients reversed (used for the 1/z chart)."""
        return Polynomial(list(reversed(self.coeffs)), self.scalar)

    def compose_poly(self, inner: "Polynomial") -> "Polynomial":
        acc = Polynomial.zero(self.scalar)
        for c in reversed(self.coeffs):
            acc = acc * inner + Polynomial.const(c, self.scalar)
        return acc


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm (coefficients form a field)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


class UnresolvedFactor:
    """A factor whose roots are not extractable exactly (degree > 2, or an
    unextractable discriminant); handed to the numeric engine."""

    def __init__(self, poly: Polynomial, multiplicity: int = 1):
        self.poly = poly
        self.multiplicity = multiplicity

    def __repr__(self):
        return f"Unresolved(deg={self.poly.degree}, mult={self.multiplicity})"


def _root_multiplicity(p: Polynomial, r) -> int:
    """Multiplicity of the known root r, by repeated synthetic division."""
    x = Polynomial.x(p.scalar)
    lin = x - Polynomial.const(r, p.scalar)
    m = 0
    while not p.is_zero():
        q, rem = p.divmod(lin)
        if not rem.is_zero():
            break
        m += 1
        p = q
    return m


def _divisors(n: int):
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return out


def _rational_root_candidates(p: Polynomial):
    """Rational-root-theorem candidates, for all-rational coefficients only."""
    from fractions import Fraction
    from math import gcd
    if not all(c.is_rational() for c in p.coeffs):
        return []
    den = 1
    for c in p.coeffs:
        den = den * c.re.denominator // gcd(den, c.re.denominator)
    ints = [int(c.re * den) for c in p.coeffs]
    lead, const = ints[-1], ints[0]
    if const == 0:
        return [ExactComplex.zero()]
    cands = set()
    for pn in _divisors(const):
        for qd in _divisors(lead):
            cands.add(Fraction(pn, qd))
            cands.add(Fraction(-pn, qd))
    return [ExactComplex(c) for c in sorted(cands)]


def exact_roots(p: Polynomial):
    """Roots of p over the scalar field, as far as exactly extractable.

    Returns (roots, unresolved): roots is a list of (scalar, multiplicity);
    unresolved is a list of UnresolvedFactor for what remains.  Linear and
    quadratic factors are solved by radicals when the discriminant has an
    exact square root; higher degrees are peeled by rational-root search.
    """
    from .field import ExactComplex as EC
    if p.scalar is not EC:
        raise TypeError("exact root extraction is supported over ExactComplex only")
    roots = []
    unresolved = []
    work = p
    # strip trailing zero coefficients as roots at 0
    if not work.is_zero():
        m = 0
        while work.coeffs and work.coeffs[0].is_zero():
            work = Polynomial(work.coeffs[1:], p.scalar)
            m += 1
        if m:
            roots.append((EC.zero(), m))
    while not work.is_constant():
        if work.degree == 1:
            r = -work.coeffs[0] / work.coeffs[1]
            roots.append((r, 1))
            work = Polynomial.const(work.leading(), p.scalar)
            continue
        if work.degree == 2:
            c, b, a = work.coeffs
            disc = b * b - EC.from_int(4) * a * c
            sq = sqrt_gaussian(disc)
            if sq is None:
                unresolved.append(UnresolvedFactor(work.monic()))
                return roots, unresolved
            two_a = EC.from_int(2) * a
            r1 = (-b + sq) / two_a
            r2 = (-b - sq) / two_a
            if r1 == r2:
                roots.append((r1, 2))
            else:
                roots.append((r1, 1))
                roots.append((r2, 1))
            return roots, unresolved
        # degree >= 3: try rational roots, else give up on this factor
        found = None
        for cand in _rational_root_candidates(work):
            if work.evaluate(cand).is_zero():
                found = cand
                break
        if found is None:
            unresolved.append(UnresolvedFactor(work.monic()))
            return roots, unresolved
        m = _root_multiplicity(work, found)
        roots.append((found, m))
        x = Polynomial.x(p.scalar)
        lin = x - Polynomial.const(found, p.scalar)
        for _ in range(m):
            work = work // lin
    return roots, unresolved
