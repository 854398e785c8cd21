"""Exact rational functions on the sphere.

A RationalFunction is always stored reduced (num, den coprime) with a monic
denominator, so equality is structural.  Values and arguments at infinity are
handled through the chart w = 1/z.  The coefficient scalar is generic: the
same class serves maps with ExactComplex coefficients and maps whose
coefficients are rational functions in a formal parameter.
"""

from __future__ import annotations

from .errors import InvalidFunction, NotAFixedPoint
from .field import ExactComplex
from .points import INF, ExtendedPoint
from .poly import Polynomial, UnresolvedFactor, exact_roots, poly_gcd


class RationalFunction:
    __slots__ = ("num", "den", "scalar")

    def __init__(self, num: Polynomial, den: Polynomial, reduce: bool = True):
        if den.is_zero():
            raise InvalidFunction("denominator is identically zero")
        self.scalar = num.scalar
        if reduce:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = num // g
                den = den // g
            lead = den.leading()
            num = Polynomial([c / lead for c in num.coeffs], self.scalar)
            den = Polynomial([c / lead for c in den.coeffs], self.scalar)
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_coeffs(cls, num_coeffs, den_coeffs, scalar=ExactComplex):
        return cls(Polynomial(num_coeffs, scalar), Polynomial(den_coeffs, scalar))

    @classmethod
    def identity(cls, scalar=ExactComplex):
        return cls(Polynomial.x(scalar), Polynomial.const(scalar.one(), scalar))

    @classmethod
    def constant(cls, c, scalar=ExactComplex):
        return cls(Polynomial.const(c, scalar), Polynomial.const(scalar.one(), scalar))

    # -- queries ----------------------------------------------------------

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree, 0)

    def is_constant(self) -> bool:
        return self.num.degree < 1 and self.den.degree < 1

    def is_identity(self) -> bool:
        return (self.num.degree == 1 and self.den.degree == 0
                and self.num.coeffs[0].is_zero()
                and self.num.coeffs[1] == self.scalar.one())

    def __eq__(self, other):
        return (isinstance(other, RationalFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RF({self.num.coeffs}/{self.den.coeffs})"

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, p: ExtendedPoint) -> ExtendedPoint:
        """Value at a point of the sphere, via the 1/z chart at infinity."""
        if self.scalar is not ExactComplex:
            raise TypeError("pointwise evaluation requires ExactComplex coefficients")
        if p.is_infinity:
            dn, dd = self.num.degree, self.den.degree
            if dn > dd:
                return INF
            if dn < dd:
                return ExtendedPoint.finite(self.scalar.zero())
            return ExtendedPoint.finite(self.num.leading() / self.den.leading())
        dv = self.den.evaluate(p.value)
        if dv.is_zero():
            return INF
        return ExtendedPoint.finite(self.num.evaluate(p.value) / dv)

    def value_at_scalar(self, z):
        """Value at a finite scalar, as a scalar; raises on a pole."""
        dv = self.den.evaluate(z)
        if dv.is_zero():
            raise ZeroDivisionError("pole")
        return self.num.evaluate(z) / dv

    # -- algebraic operations -------------------------------------------------

    def compose(self, inner: "RationalFunction") -> "RationalFunction":
        """Reduced composite self(inner(z))."""
        if inner.is_constant():
            # reduced constants are always finite-valued (den is monic)
            v = inner.num.constant_term() / inner.den.constant_term()
            dv = self.den.evaluate(v)
            if dv.is_zero():
                raise InvalidFunction("composition is the constant infinity")
            return RationalFunction.constant(self.num.evaluate(v) / dv, self.scalar)
        P, Qd = inner.num, inner.den
        m = max(self.num.degree, self.den.degree)
        powsP = [Polynomial.const(self.scalar.one(), self.scalar)]
        powsQ = [Polynomial.const(self.scalar.one(), self.scalar)]
        for _ in range(m):
            powsP.append(powsP[-1] * P)
            powsQ.append(powsQ[-1] * Qd)
        z = Polynomial.zero(self.scalar)
        nsum, dsum = z, z
        for i in range(m + 1):
            term = powsP[i] * powsQ[m - i]
            if i <= self.num.degree and not self.num.coeffs[i].is_zero():
                nsum = nsum + term.scale(self.num.coeffs[i])
            if i <= self.den.degree and not self.den.coeffs[i].is_zero():
                dsum = dsum + term.scale(self.den.coeffs[i])
        if dsum.is_zero():
            raise InvalidFunction("composition has identically zero denominator")
        return RationalFunction(nsum, dsum)

    def iterate(self, k: int) -> "RationalFunction":
        """k-fold composite; k = 0 returns the identity by convention."""
        if k < 0:
            raise ValueError("iterate expects k >= 0")
        out = RationalFunction.identity(self.scalar)
        for _ in range(k):
            out = self.compose(out)
        return out

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def inverted_chart(self) -> "RationalFunction":
        """The map w -> 1/f(1/w) (conjugation by the chart at infinity)."""
        m = max(self.num.degree, self.den.degree)
        # f(1/w) = revN(w) w^(m-degN) / (revD(w) w^(m-degD))
        rn = self.num.reversed_coeffs().shift(m - self.num.degree) \
            if not self.num.is_zero() else Polynomial.zero(self.scalar)
        rd = self.den.reversed_coeffs().shift(m - self.den.degree)
        if rn.is_zero():
            raise InvalidFunction("cannot invert the zero map")
        return RationalFunction(rd, rn)

    def precompose_shift(self, c) -> "RationalFunction":
        """The map z -> f(z + c)."""
        shift = RationalFunction.from_coeffs([c, self.scalar.one()],
                                             [self.scalar.one()], self.scalar)
        return self.compose(shift)

    def precompose_inversion(self) -> "RationalFunction":
        """The map w -> f(1/w)."""
        m = max(self.num.degree, self.den.degree)
        rn = self.num.reversed_coeffs().shift(m - self.num.degree) \
            if not self.num.is_zero() else Polynomial.zero(self.scalar)
        rd = self.den.reversed_coeffs().shift(m - self.den.degree)
        if rn.is_zero():
            return RationalFunction(rn, rd)
        return RationalFunction(rn, rd)


# -- pointwise analysis (ExactComplex coefficients) ---------------------------


def local_degree(f: RationalFunction, p: ExtendedPoint) -> int:
    """Local degree of f at p: the order of vanishing of f - f(p) at p."""
    g = f
    if p.is_infinity:
        g = g.precompose_inversion()
    elif not p.value.is_zero():
        g = g.precompose_shift(p.value)
    v = g.evaluate(ExtendedPoint.finite(g.scalar.zero()))
    if v.is_infinity:
        h = g.den
    else:
        h = g.num - g.den.scale(v.value)
    for i, c in enumerate(h.coeffs):
        if not c.is_zero():
            return i
    raise InvalidFunction("map is constant; local degree undefined")


def multiplier(f: RationalFunction, p: ExtendedPoint):
    """Derivative of f at the fixed point p, in a chart where p is finite."""
    if f.evaluate(p) != p:
        raise NotAFixedPoint(f"{p!r} is not fixed")
    if p.is_infinity:
        g = f.inverted_chart()
        return g.derivative().value_at_scalar(g.scalar.zero())
    return f.derivative().value_at_scalar(p.value)


def step_derivative(f: RationalFunction, p: ExtendedPoint):
    """Chart derivative of f at p (charts: identity at finite points, 1/z at
    infinity, on both source and target).  Chain-multiplying these along an
    orbit gives the cycle multiplier."""
    q = f.evaluate(p)
    g = f
    if p.is_infinity:
        g = g.precompose_inversion()
        at = g.scalar.zero()
    else:
        at = p.value
    if q.is_infinity:
        num, den = g.den, g.num
        g = RationalFunction(num, den)
    return g.derivative().value_at_scalar(at)


def cycle_multiplier(maps, p: ExtendedPoint):
    """Multiplier of the cycle of `maps` applied in order starting at p."""
    out = None
    cur = p
    for f in maps:
        d = step_derivative(f, cur)
        out = d if out is None else out * d
        cur = f.evaluate(cur)
    if cur != p:
        raise NotAFixedPoint("orbit does not close up")
    return out


def fixed_points(f: RationalFunction):
    """Exact fixed points with multiplicities (sum = deg f + 1).

    Returns (points, unresolved): points is a list of (ExtendedPoint, mult);
    unresolved lists polynomial factors that need the numeric engine.
    """
    if f.scalar is not ExactComplex:
        raise TypeError("exact fixed points require ExactComplex coefficients")
    if f.is_constant():
        raise InvalidFunction("fixed points of a constant map are degenerate")
    if f.is_identity():
        raise InvalidFunction("every point is fixed by the identity")
    fpp = f.num - f.den.shift(1)
    pts = []
    if f.num.degree > f.den.degree:
        mult_inf = f.degree + 1 - fpp.degree
        pts.append((INF, mult_inf))
    roots, unresolved = exact_roots(fpp)
    pts.extend((ExtendedPoint.finite(r), m) for r, m in roots)
    return pts, unresolved


def critical_points(f: RationalFunction):
    """Critical points with multiplicities (local degree - 1, summing to
    2 deg f - 2), infinity detected through the degree drop of the Wronskian."""
    if f.scalar is not ExactComplex:
        raise TypeError("exact critical points require ExactComplex coefficients")
    d = f.degree
    if d < 2:
        return [], []
    w = f.num.derivative() * f.den - f.num * f.den.derivative()
    pts = []
    mult_inf = (2 * d - 2) - w.degree
    if mult_inf > 0:
        pts.append((INF, mult_inf))
    roots, unresolved = exact_roots(w)
    pts.extend((ExtendedPoint.finite(r), m) for r, m in roots)
    return pts, unresolved


def preimages(f: RationalFunction, q: ExtendedPoint):
    """Exact solutions of f(z) = q with multiplicities (sum = deg f)."""
    if f.scalar is not ExactComplex:
        raise TypeError("exact preimages require ExactComplex coefficients")
    d = f.degree
    if q.is_infinity:
        h = f.den
    else:
        h = f.num - f.den.scale(q.value)
    pts = []
    drop = d - h.degree
    if drop > 0:
        pts.append((INF, drop))
    roots, unresolved = exact_roots(h)
    pts.extend((ExtendedPoint.finite(r), m) for r, m in roots)
    return pts, unresolved
