"""Exact coefficient fields: the rationals and prime fields.

Every coefficient in this package is either a `fractions.Fraction` (over QQ)
or a plain int in ``range(p)`` (over FF(p)).  There is deliberately no
floating point anywhere; all arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction


class Field:
    """Common interface for the two coefficient fields."""

    characteristic: int

    def of_int(self, n: int):
        raise NotImplementedError

    def of_fraction(self, num: int, den: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    @property
    def zero(self):
        return self.of_int(0)

    @property
    def one(self):
        return self.of_int(1)

    def render(self, a) -> str:
        return str(a)


class RationalField(Field):
    """QQ, with coefficients stored as reduced `Fraction` objects."""

    characteristic = 0

    def of_int(self, n: int) -> Fraction:
        return Fraction(n)

    def of_fraction(self, num: int, den: int) -> Fraction:
        return Fraction(num, den)

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
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def is_zero(self, a) -> bool:
        return a == 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(Field):
    """FF(p): least nonnegative residues mod a prime p."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"characteristic must be prime, got {p}")
        self.p = p
        self.characteristic = p

    def of_int(self, n: int) -> int:
        return n % self.p

    def of_fraction(self, num: int, den: int) -> int:
        return self.mul(self.of_int(num), self.inv(self.of_int(den)))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def __repr__(self):
        return f"FF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("FF", self.p))


QQ = RationalField()

_prime_fields: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    """The prime field FF(p) (instances are cached)."""
    if p not in _prime_fields:
        _prime_fields[p] = PrimeField(p)
    return _prime_fields[p]
