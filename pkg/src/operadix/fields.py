"""Exact scalar fields: the rationals and prime fields GF(p).

Rationals use :class:`fractions.Fraction`.  Prime-field elements are
:class:`ModInt` values, which support the usual arithmetic operators so the
rest of the package can be written once for both backends.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class ModInt:
    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return ModInt(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o, self.p) / self

    def __neg__(self):
        return ModInt(-self.v, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v} mod {self.p}"


class Field:
    """A scalar backend.  Call it to coerce ints, fractions or strings."""

    tag: str
    characteristic: int

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def fmt(self, x) -> str:
        raise NotImplementedError

    def parse(self, s):
        raise NotImplementedError

    def __call__(self, x):
        raise NotImplementedError

    def __repr__(self):
        return f"<field {self.tag}>"


class Rationals(Field):
    tag = "q"
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, ModInt):
            raise TypeError("cannot lift a prime-field element to Q")
        return Fraction(x)

    def fmt(self, x) -> str:
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def parse(self, s):
        if isinstance(s, int):
            return Fraction(s)
        return Fraction(s.strip())

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("q")


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.tag = f"fp:{p}"

    def __call__(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, ModInt):
            if x.p != self.p:
                raise ValueError(f"element of GF({x.p}) given to GF({self.p})")
            return x
        if isinstance(x, Fraction):
            return ModInt(x.numerator, self.p) / x.denominator
        return ModInt(int(x), self.p)

    def fmt(self, x) -> str:
        return f"{self(x).v} mod {self.p}"

    def parse(self, s):
        if isinstance(s, int):
            return ModInt(s, self.p)
        s = s.strip()
        if "mod" in s:
            k, p = s.split("mod")
            if int(p) != self.p:
                raise ValueError(f"scalar {s!r} is not in GF({self.p})")
            return ModInt(int(k), self.p)
        return self(Fraction(s))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_tag(tag: str) -> Field:
    """Parse ``q`` or ``fp:<prime>``."""
    tag = tag.strip().lower()
    if tag in ("q", "qq", "rationals"):
        return QQ
    if tag.startswith("fp:"):
        return GF(int(tag[3:]))
    raise ValueError(f"unknown field tag {tag!r}; expected 'q' or 'fp:<prime>'")


def field_of(x) -> Field:
    if isinstance(x, ModInt):
        return GF(x.p)
    return QQ
