"""Moebius transformations z -> (az+b)/(cz+d) with exact coefficients."""

from __future__ import annotations

from .errors import DegenerateTriple, InvalidFunction
from .field import ExactComplex
from .points import INF, ExtendedPoint
from .poly import Polynomial
from .ratfunc import RationalFunction


class MoebiusMap:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = ExactComplex.coerce(a)
        self.b = ExactComplex.coerce(b)
        self.c = ExactComplex.coerce(c)
        self.d = ExactComplex.coerce(d)
        if (self.a * self.d - self.b * self.c).is_zero():
            raise InvalidFunction("ad - bc = 0 is not a Moebius map")

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1, 0, 0, 1)

    def __call__(self, p: ExtendedPoint) -> ExtendedPoint:
        if p.is_infinity:
            if self.c.is_zero():
                return INF
            return ExtendedPoint.finite(self.a / self.c)
        z = p.value
        den = self.c * z + self.d
        if den.is_zero():
            return INF
        return ExtendedPoint.finite((self.a * z + self.b) / den)

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def compose(self, other: "MoebiusMap") -> "MoebiusMap":
        """self after other (matrix product)."""
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def to_rational_function(self) -> RationalFunction:
        return RationalFunction(Polynomial([self.b, self.a]),
                                Polynomial([self.d, self.c]))

    def is_identity(self) -> bool:
        if not (self.b.is_zero() and self.c.is_zero()):
            return False
        return self.a == self.d

    def normalized(self) -> "MoebiusMap":
        """Scale so the first nonzero entry (a, b, c, d order) is one."""
        for pivot in (self.a, self.b, self.c, self.d):
            if not pivot.is_zero():
                return MoebiusMap(self.a / pivot, self.b / pivot,
                                  self.c / pivot, self.d / pivot)
        raise InvalidFunction("zero matrix")

    def __eq__(self, other):
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        s, o = self.normalized(), other.normalized()
        return (s.a, s.b, s.c, s.d) == (o.a, o.b, o.c, o.d)

    def __hash__(self):
        s = self.normalized()
        return hash((s.a, s.b, s.c, s.d))

    def __repr__(self):
        return f"Moebius({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"

    def conjugate(self, f: RationalFunction) -> RationalFunction:
        """self o f o self^{-1} as a reduced rational function."""
        m = self.to_rational_function()
        minv = self.inverse().to_rational_function()
        return m.compose(f).compose(minv)


def moebius_from_triple(p: ExtendedPoint, q: ExtendedPoint,
                        r: ExtendedPoint) -> MoebiusMap:
    """The unique Moebius map sending p -> inf, q -> 0, r -> 1."""
    pts = [p, q, r]
    for i in range(3):
        for j in range(i + 1, 3):
            if pts[i] == pts[j]:
                raise DegenerateTriple("coincident points in triple")
    one = ExactComplex.one()
    zero = ExactComplex.zero()
    if p.is_infinity:
        # (z - q) / (r - q)
        return MoebiusMap(one, -q.value, zero, r.value - q.value)
    if q.is_infinity:
        # (r - p) / (z - p)
        return MoebiusMap(zero, r.value - p.value, one, -p.value)
    if r.is_infinity:
        # (z - q) / (z - p)
        return MoebiusMap(one, -q.value, one, -p.value)
    rp = r.value - p.value
    rq = r.value - q.value
    return MoebiusMap(rp, -q.value * rp, rq, -p.value * rq)


def moebius_through(src, dst) -> MoebiusMap:
    """Moebius map sending the three src points to the three dst points."""
    ts = moebius_from_triple(*src)
    td = moebius_from_triple(*dst)
    return td.inverse().compose(ts)


def moebius_order(m: MoebiusMap, bound: int = 64):
    """Exact order of m in PGL2, or None if it exceeds `bound`.

    Decided by projective comparison of iterated matrices with the identity;
    equivalent to testing whether the multiplier is a k-th root of unity, but
    needs no fixed-point extraction.
    """
    acc = m
    for k in range(1, bound + 1):
        if acc.is_identity():
            return k
        acc = acc.compose(m)
    return None


def multiplier_normal_form(m: MoebiusMap):
    """Try to express m as z -> lam*z up to conjugacy.

    Returns ('rotation', lam) when two distinct fixed points resolve in the
    field, ('translation', shift) for a single (parabolic) fixed point, or
    ('unresolved', None) when the fixed points live outside the field.
    """
    from .poly import exact_roots
    from .ratfunc import multiplier as rf_multiplier
    f = m.to_rational_function()
    if f.is_identity():
        return ("identity", ExactComplex.one())
    fpp = f.num - f.den.shift(1)
    pts = []
    if f.num.degree > f.den.degree:
        pts.append((INF, f.degree + 1 - fpp.degree))
    roots, unresolved = exact_roots(fpp)
    pts.extend((ExtendedPoint.finite(r), mult) for r, mult in roots)
    if unresolved:
        return ("unresolved", None)
    if any(mult >= 2 for _, mult in pts):
        return ("translation", None)
    return ("rotation", rf_multiplier(f, pts[0][0]))
