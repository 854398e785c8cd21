"""Points of the sphere: a finite exact value or the point at infinity."""

from __future__ import annotations

from .field import ExactComplex, Q


class ExtendedPoint:
    """Either Finite(value) or Infinity; immutable and hashable."""

    __slots__ = ("value",)

    def __init__(self, value=None):
        self.value = None if value is None else ExactComplex.coerce(value)

    @classmethod
    def finite(cls, value) -> "ExtendedPoint":
        return cls(ExactComplex.coerce(value))

    @classmethod
    def infinity(cls) -> "ExtendedPoint":
        return INF

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __eq__(self, other):
        if isinstance(other, ExtendedPoint):
            return self.value == other.value
        if other is None:
            return NotImplemented
        try:
            return not self.is_infinity and self.value == ExactComplex.coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(("inf",)) if self.is_infinity else hash(self.value)

    def to_complex(self) -> complex:
        if self.is_infinity:
            raise ValueError("infinity has no complex value")
        return self.value.to_complex()

    def __repr__(self):
        return "inf" if self.is_infinity else f"pt({self.value!r})"


INF = ExtendedPoint()


def pt(x) -> ExtendedPoint:
    """Point at a finite exact value (int, Fraction, 'p/q' or ExactComplex)."""
    if isinstance(x, ExtendedPoint):
        return x
    if isinstance(x, str) and x == "inf":
        return INF
    return ExtendedPoint.finite(Q(x) if isinstance(x, str) else x)
