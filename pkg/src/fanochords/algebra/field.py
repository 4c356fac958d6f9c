"""Exact coefficient fields: the rationals and prime fields F_p.

Polynomials store raw coefficients (``int`` residues for F_p, ``Fraction``
for Q) and call back into the field object for arithmetic.  ``FieldElement``
is the user-facing boxed scalar.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import gmpy2

DEFAULT_PRIME = 32003


class FieldError(ValueError):
    pass


class Field:
    """Common interface; concrete fields override the arithmetic."""

    characteristic = 0
    is_prime_field = False

    def __call__(self, value) -> "FieldElement":
        return FieldElement(self, self.convert(value))

    def convert(self, value):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def zero(self):
        return self.convert(0)

    def one(self):
        return self.convert(1)


class RationalField(Field):
    is_prime_field = False

    def convert(self, value):
        if isinstance(value, FieldElement):
            value = value.value
        # Fraction keeps lowest terms with a positive denominator.
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return 1 / Fraction(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"

    def spec(self) -> str:
        return "QQ"


QQ = RationalField()


class PrimeField(Field):
    is_prime_field = True

    def __init__(self, p: int):
        p = int(p)
        if p < 2 or not gmpy2.is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def convert(self, value):
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value.value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of zero in F_{self.p}")
        return pow(a, -1, self.p)

    def signed(self, a) -> int:
        """Symmetric representative in (-p/2, p/2], used for printing."""
        return a - self.p if a > self.p // 2 else a

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"

    def spec(self) -> str:
        return f"Fp:{self.p}"


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(text: str) -> Field:
    """Parse ``QQ`` or ``Fp:<p>`` as used in ring header lines."""
    text = text.strip()
    if text in ("QQ", "Q"):
        return QQ
    if text.startswith("Fp:"):
        return GF(int(text[3:]))
    raise FieldError(f"unknown field {text!r}")


class FieldElement:
    """An immutable scalar tied to its field."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = field.convert(value)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("field mismatch")
            return other.value
        return self.field.convert(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._coerce(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __truediv__(self, other):
        return self * field_inverse(FieldElement(self.field, self._coerce(other)))

    def __eq__(self, other):
        try:
            return self.value == self._coerce(other)
        except (FieldError, TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.field!r}({self.value})"


def field_inverse(a: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises ZeroDivisionError on zero."""
    return FieldElement(a.field, a.field.inv(a.value))
