"""Exact coefficient fields: the rationals and small finite fields.

Rational scalars are plain :class:`fractions.Fraction` values.  Finite
field elements are immutable wrappers around a digit tuple (coefficients
of the residue polynomial in the generator t, low to high); the prime
field is the k = 1 case.  Elements of F_{p^k} print and parse as the
base-p integer encoding sum(digit_i * p^i), which keeps file formats
byte-stable.

Fields are capped at p^k <= 121: large enough for every construction in
this package, small enough that exhaustive scans stay instant.
"""

from __future__ import annotations


from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .errors import FieldMismatch

MAX_FIELD_ORDER = 121


class Rationals:
    """Field descriptor for Q (singleton ``QQ``)."""

    char = 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def format(self, x: Fraction) -> str:
        return str(x)

    def __repr__(self):
        return "QQ"

    def __str__(self):
        return "Q"


QQ = Rationals()


def _poly_mod(coeffs: list[int], modulus: tuple[int, ...], p: int) -> list[int]:
    """Reduce an integer-coefficient polynomial mod (modulus, p).  The
    modulus is monic of degree k, given low-to-high including the 1."""
    k = len(modulus) - 1
    coeffs = [c % p for c in coeffs]
    for i in range(len(coeffs) - 1, k - 1, -1):
        c = coeffs[i]
        if c:
            for j in range(k + 1):
                coeffs[i - k + j] = (coeffs[i - k + j] - c * modulus[j]) % p
    del coeffs[k:]
    while len(coeffs) < k:
        coeffs.append(0)
    return coeffs


@dataclass(frozen=True)
class FiniteField:
    """F_{p^k} with a fixed irreducible modulus (low-to-high, monic)."""

    p: int
    k: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if self.p ** self.k > MAX_FIELD_ORDER:
            raise ValueError(f"field order {self.p ** self.k} exceeds cap "
                             f"{MAX_FIELD_ORDER}")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")

    @property
    def char(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p ** self.k

    @property
    def zero(self) -> "FFElement":
        return FFElement(self, (0,) * self.k)

    @property
    def one(self) -> "FFElement":
        return FFElement(self, (1,) + (0,) * (self.k - 1))

    def from_int(self, n: int) -> "FFElement":
        """The element whose base-p integer *encoding* is n.  This is the
        file-format convention; it is not the ring map Z -> F_{p^k}, which
        is what :meth:`coerce` applies to ints."""
        n %= self.order
        digits = []
        for _ in range(self.k):
            digits.append(n % self.p)
            n //= self.p
        return FFElement(self, tuple(digits))

    def coerce(self, x) -> "FFElement":
        if isinstance(x, FFElement):
            if x.field != self:
                raise FieldMismatch(f"{x!r} does not live in {self}")
            return x
        if isinstance(x, int):
            # n * 1 in the prime subfield
            return FFElement(self, (x % self.p,) + (0,) * (self.k - 1))
        if isinstance(x, str):
            return self.from_int(int(x))
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def element(self, digits) -> "FFElement":
        digits = tuple(int(d) % self.p for d in digits)
        if len(digits) != self.k:
            raise ValueError(f"expected {self.k} digits")
        return FFElement(self, digits)

    def elements(self) -> Iterator["FFElement"]:
        """All field elements in integer-encoding order."""
        for n in range(self.order):
            yield self.from_int(n)

    def format(self, x: "FFElement") -> str:
        return str(x.to_int())

    def __repr__(self):
        return str(self)

    def __str__(self):
        if self.k == 1:
            return f"F{self.p}"
        return f"F{self.p}^{self.k}"


@dataclass(frozen=True, slots=True)
class FFElement:
    field: FiniteField
    digits: tuple[int, ...]

    def to_int(self) -> int:
        return sum(d * self.field.p ** i for i, d in enumerate(self.digits))

    def _check(self, other) -> "FFElement":
        if isinstance(other, int):
            return self.field.coerce(other)
        if not isinstance(other, FFElement) or other.field != self.field:
            raise FieldMismatch(f"cannot combine {self!r} with {other!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b
                                           in zip(self.digits, other.digits)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple((-a) % p for a in self.digits))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        f = self.field
        raw = [0] * (2 * f.k - 1)
        for i, a in enumerate(self.digits):
            if a:
                for j, b in enumerate(other.digits):
                    raw[i + j] += a * b
        return FFElement(f, tuple(_poly_mod(raw, f.modulus, f.p)))

    __rmul__ = __mul__

    def inverse(self) -> "FFElement":
        if not self:
            raise ZeroDivisionError("finite field inverse of zero")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def __rtruediv__(self, other):
        return self._check(other) / self

    def __pow__(self, n: int) -> "FFElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return any(self.digits)

    def multiplicative_order(self) -> int:
        if not self:
            raise ValueError("zero has no multiplicative order")
        k, x = 1, self
        while x != self.field.one:
            x = x * self
            k += 1
        return k

    def __str__(self):
        return str(self.to_int())

    def __repr__(self):
        return f"{self.field}({self.to_int()})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


_BUILTIN_MODULI = {
    (2, 2): (1, 1, 1),   # t^2 + t + 1
    (3, 2): (1, 0, 1),   # t^2 + 1
}


def GF(p: int, k: int = 1, modulus: tuple[int, ...] | None = None) -> FiniteField:
    """F_{p^k}.  For k = 1 no modulus is needed; F4 and F9 have fixed
    built-in moduli so their arithmetic is reproducible."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k == 1:
        return FiniteField(p, 1, (0, 1))
    if modulus is None:
        modulus = _BUILTIN_MODULI.get((p, k))
        if modulus is None:
            raise ValueError(f"no built-in modulus for F_{p}^{k}; pass one")
    return FiniteField(p, k, tuple(m % p for m in modulus))


GF2 = GF(2)
GF3 = GF(3)
GF4 = GF(2, 2)
GF9 = GF(3, 2)

Field = Union[Rationals, FiniteField]
Scalar = Union[Fraction, FFElement]


def same_field(f1: Field, f2: Field) -> bool:
    return f1 is f2 or f1 == f2
