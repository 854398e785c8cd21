"""One-parameter families: scalars in Q(i,sqrt3)(a) and maps over them.

A ParamScalar is a reduced rational function in the formal parameter `a`
(monic denominator).  Feeding ParamScalar coefficients into Polynomial /
RationalFunction yields families f_a(z) stored reduced over the fraction
field, so shared (a - a0)-content cancels before any specialization.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CoefficientPole, DegenerateLimit
from .field import ExactComplex
from .poly import Polynomial, poly_gcd
from .ratfunc import RationalFunction


class ParamScalar:
    """Element of Q(i,sqrt3)(a), always reduced with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial, reduce: bool = True):
        if den.is_zero():
            raise ZeroDivisionError("parameter scalar with zero denominator")
        if reduce:
            g = poly_gcd(num, den)
            if not g.is_constant():
                num = num // g
                den = den // g
            lead = den.leading()
            num = Polynomial([c / lead for c in num.coeffs])
            den = Polynomial([c / lead for c in den.coeffs])
        self.num = num
        self.den = den

    # -- constructors ---------------------------------------------------

    @classmethod
    def const(cls, c) -> "ParamScalar":
        return cls(Polynomial([ExactComplex.coerce(c)]),
                   Polynomial([ExactComplex.one()]), reduce=False)

    @classmethod
    def a(cls) -> "ParamScalar":
        return cls(Polynomial.x(), Polynomial([ExactComplex.one()]), reduce=False)

    @classmethod
    def from_poly(cls, coeffs) -> "ParamScalar":
        return cls(Polynomial(coeffs), Polynomial([ExactComplex.one()]))

    @classmethod
    def zero(cls) -> "ParamScalar":
        return cls.const(0)

    @classmethod
    def one(cls) -> "ParamScalar":
        return cls.const(1)

    @classmethod
    def from_int(cls, n: int) -> "ParamScalar":
        return cls.const(n)

    @staticmethod
    def coerce(x) -> "ParamScalar":
        if isinstance(x, ParamScalar):
            return x
        if isinstance(x, (int, Fraction, ExactComplex)):
            return ParamScalar.const(x)
        raise TypeError(f"cannot coerce {x!r} to ParamScalar")

    # -- field operations --------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        o = ParamScalar.coerce(other)
        return ParamScalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return ParamScalar(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-ParamScalar.coerce(other))

    def __rsub__(self, other):
        return ParamScalar.coerce(other) + (-self)

    def __mul__(self, other):
        o = ParamScalar.coerce(other)
        return ParamScalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = ParamScalar.coerce(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero parameter scalar")
        return ParamScalar(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return ParamScalar.coerce(other) / self

    def __eq__(self, other):
        try:
            o = ParamScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"PS({self.num.coeffs}/{self.den.coeffs})"

    # -- specialization ------------------------------------------------------

    def order_at(self, a0: ExactComplex) -> int:
        """Valuation at a = a0 (negative for a pole); None for the zero scalar."""
        if self.is_zero():
            return None
        return _vanishing_order(self.num, a0) - _vanishing_order(self.den, a0)

    def value_at(self, a0) -> ExactComplex:
        a0 = ExactComplex.coerce(a0)
        dv = self.den.evaluate(a0)
        if dv.is_zero():
            raise CoefficientPole(f"coefficient has a pole at a = {a0!r}")
        return self.num.evaluate(a0) / dv


def _vanishing_order(p: Polynomial, a0: ExactComplex) -> int:
    if p.is_zero():
        raise ValueError("zero polynomial")
    if a0.is_zero():
        for i, c in enumerate(p.coeffs):
            if not c.is_zero():
                return i
    order = 0
    x = Polynomial.x()
    lin = x - Polynomial.const(a0)
    while True:
        q, r = p.divmod(lin)
        if not r.is_zero():
            return order
        order += 1
        p = q


# -- family-level operations ---------------------------------------------------


def param_ratfunc(num_coeffs, den_coeffs) -> RationalFunction:
    """Family f_a(z) from z-coefficients that are ParamScalar-like."""
    num = Polynomial([ParamScalar.coerce(c) for c in num_coeffs], ParamScalar)
    den = Polynomial([ParamScalar.coerce(c) for c in den_coeffs], ParamScalar)
    return RationalFunction(num, den)


def specialize(f: RationalFunction, a0) -> RationalFunction:
    """Direct substitution a = a0 (no content cancellation).

    Raises CoefficientPole when a coefficient has a pole at a0 and
    DegenerateLimit when the substitution collapses to 0/0 identically.
    """
    a0 = ExactComplex.coerce(a0)
    num = Polynomial([c.value_at(a0) for c in f.num.coeffs])
    den = Polynomial([c.value_at(a0) for c in f.den.coeffs])
    if den.is_zero() and num.is_zero():
        raise DegenerateLimit("specialization is identically 0/0")
    if den.is_zero():
        raise DegenerateLimit("specialization is the constant infinity")
    return RationalFunction(num, den)


def limit_at_param(f: RationalFunction, a0) -> RationalFunction:
    """Limit of the family at a -> a0, over the exact coefficient field.

    Cancels all (a - a0)-content shared by numerator and denominator, then
    specializes and reduces over the point field; the degree may drop (this
    is the degeneration).  A denominator vanishing identically after content
    cancellation means the family diverges to the constant infinity and
    raises DegenerateLimit with the vanishing orders attached.
    """
    a0 = ExactComplex.coerce(a0)
    orders = {}
    t = None
    for label, poly in (("num", f.num), ("den", f.den)):
        for i, c in enumerate(poly.coeffs):
            if c.is_zero():
                continue
            o = c.order_at(a0)
            orders[f"{label}[{i}]"] = o
            t = o if t is None else min(t, o)
    if t is None:
        raise DegenerateLimit("empty family", orders=orders)
    # multiply both numerator and denominator by (a - a0)^(-t)
    x = Polynomial.x()
    lin = x - Polynomial.const(a0)
    if t >= 0:
        factor = ParamScalar(Polynomial([ExactComplex.one()]), _power(lin, t))
    else:
        factor = ParamScalar(_power(lin, -t), Polynomial([ExactComplex.one()]))
    num = Polynomial([c * factor for c in f.num.coeffs], ParamScalar)
    den = Polynomial([c * factor for c in f.den.coeffs], ParamScalar)
    num0 = Polynomial([c.value_at(a0) for c in num.coeffs])
    den0 = Polynomial([c.value_at(a0) for c in den.coeffs])
    if den0.is_zero():
        raise DegenerateLimit(
            "family diverges to the constant infinity at this parameter",
            orders=orders)
    return RationalFunction(num0, den0)


def _power(p: Polynomial, k: int) -> Polynomial:
    out = Polynomial([ExactComplex.one()])
    for _ in range(k):
        out = out * p
    return out


def param_value_at_scalar(f: RationalFunction, z0) -> ParamScalar:
    """f_a(z0) for fixed exact z0, as an element of Q(i,sqrt3)(a)."""
    z = ParamScalar.coerce(z0)
    dv = f.den.evaluate(z)
    if dv.is_zero():
        raise ZeroDivisionError("pole of the family at this point")
    return f.num.evaluate(z) / dv


def param_multiplier_at(f: RationalFunction, z0) -> ParamScalar:
    """Derivative of the family at the fixed finite point z0, in Q(i,sqrt3)(a)."""
    der = f.derivative()
    return param_value_at_scalar(der, z0)
