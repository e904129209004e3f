"""Exact coefficient arithmetic over Q and over prime fields F_p.

A FieldSpec names the field (characteristic 0 means Q, a prime p means
F_p) and builds Scalar values in canonical form: reduced fractions with
positive denominator over Q, residues in [0, p) over F_p.  All arithmetic
is exact; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CompositeCharacteristic, DivisionByZero, FieldMismatch

# deterministic Miller-Rabin witnesses, sufficient for every n < 2^64
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_MAX_CHARACTERISTIC = 2**63 - 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field: Q when characteristic is 0, else F_p."""

    characteristic: int

    def __post_init__(self):
        c = self.characteristic
        if not isinstance(c, int) or isinstance(c, bool):
            raise CompositeCharacteristic(f"characteristic must be an integer, got {c!r}")
        if c == 0:
            return
        if c > _MAX_CHARACTERISTIC:
            raise CompositeCharacteristic(f"characteristic {c} does not fit a machine word")
        if not _is_prime(c):
            raise CompositeCharacteristic(f"characteristic {c} is not 0 or a prime")

    @property
    def is_prime_field(self) -> bool:
        return self.characteristic != 0

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, or Scalar into canonical form here."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar over {value.field} used over {self}")
            return value
        if self.characteristic == 0:
            return Scalar(self, Fraction(value))
        if isinstance(value, Fraction):
            if value.denominator % self.characteristic == 0:
                raise DivisionByZero(f"denominator {value.denominator} vanishes mod {self.characteristic}")
            num = value.numerator % self.characteristic
            den = pow(value.denominator % self.characteristic, -1, self.characteristic)
            return Scalar(self, num * den % self.characteristic)
        return Scalar(self, int(value) % self.characteristic)

    def zero(self) -> "Scalar":
        return self.scalar(0)

    def one(self) -> "Scalar":
        return self.scalar(1)

    def from_string(self, text: str) -> "Scalar":
        """Parse 'a' or 'a/b' (integers, optional leading minus)."""
        text = text.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            frac = Fraction(int(num), int(den))
        else:
            frac = Fraction(int(text))
        return self.scalar(frac)

    def __str__(self) -> str:

        return "Q" if self.characteristic == 0 else f"F_{self.characteristic}"


def make_field(characteristic: int) -> FieldSpec:
    """Public constructor; rejects composite or oversized characteristics."""
    return FieldSpec(characteristic)


class Scalar:
    """One exact field element.

    `value` is an int residue in [0, p) over F_p and a Fraction over Q.
    Equality is representational: equal values over the same field.
    Construct through FieldSpec.scalar so the representation stays canonical.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, val):
        raise AttributeError("Scalar is immutable")

    def _check(self, other: "Scalar") -> None:
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatch(f"cannot combine {self.field} with {other.field}")

    def __add__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        v = self.value + other.value
        if self.field.is_prime_field:
            v %= self.field.characteristic
        return Scalar(self.field, v)

    def __sub__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        v = self.value - other.value
        if self.field.is_prime_field:
            v %= self.field.characteristic
        return Scalar(self.field, v)

    def __mul__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        v = self.value * other.value
        if self.field.is_prime_field:
            v %= self.field.characteristic
        return Scalar(self.field, v)

    def __neg__(self) -> "Scalar":
        v = -self.value
        if self.field.is_prime_field:
            v %= self.field.characteristic
        return Scalar(self.field, v)

    def inv(self) -> "Scalar":
        if not self:
            raise DivisionByZero(f"0 has no inverse in {self.field}")
        if self.field.is_prime_field:
            # extended Euclid, via the builtin modular inverse
            return Scalar(self.field, pow(self.value, -1, self.field.characteristic))
        return Scalar(self.field, 1 / self.value)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        self._check(other)
        return self * other.inv()

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inv() ** (-exponent)
        base = self.value
        if self.field.is_prime_field:
            return Scalar(self.field, pow(base, exponent, self.field.characteristic))
        return Scalar(self.field, base**exponent)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Scalar)
            and self.field == other.field
            and self.value == other.value
        )

    def __hash__(self) -> int:
        return hash((self.field.characteristic, self.value))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field}, {self.value})"
