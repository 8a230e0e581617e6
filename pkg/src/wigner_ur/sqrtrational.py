"""Exact numbers of the form sign * sqrt(p/q).

Values are stored canonically as ``coeff * sqrt(core)`` with ``coeff`` a signed
Fraction and ``core`` a squarefree positive integer, so equality is structural
and two values add exactly iff their cores agree. A sum with distinct cores is
not a single radical; it degrades to an :class:`InexactValue` carrying a
113-bit (binary128) mpmath float and ``inexact = True``.

Radicands arising from factorial ratios are smooth, so the square-part
extraction below uses trial division by small primes. A cofactor left after
the prime table that is not a perfect square is treated as squarefree; that is
exact for every radicand whose prime factors are below ``_PRIME_LIMIT``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import mpmath

_PRIME_LIMIT = 2000
_INEXACT_PREC = 113


def _primes(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_PRIMES = _primes(_PRIME_LIMIT)


@lru_cache(maxsize=65536)
def split_square(n: int) -> tuple[int, int]:
    """Return (s, w) with n = s**2 * w and w squarefree (n > 0)."""
    if n <= 0:
        raise ValueError("split_square needs a positive integer")
    s, w = 1, 1
    for p in _PRIMES:
        if n == 1:
            break
        if p * p > n:
            # n is now 1 or a prime
            w *= n
            n = 1
            break
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            s *= p ** (e // 2)
            if e % 2:
                w *= p
    if n > 1:
        r = math.isqrt(n)
        if r * r == n:
            s *= r
        else:
            w *= n
    return s, w


Rational = Union[int, Fraction]


@dataclass(frozen=True)
class SqrtRational:
    """coeff * sqrt(core); build with :meth:`sqrt` or :meth:`rational`."""

    coeff: Fraction
    core: int = 1

    @classmethod
    def sqrt(cls, radicand: Rational, sign: int = 1) -> "SqrtRational":
        radicand = Fraction(radicand)
        if radicand < 0:
            raise ValueError("radicand must be nonnegative")
        if radicand == 0 or sign == 0:
            return ZERO
        p, q = radicand.numerator, radicand.denominator
        s, w = split_square(p * q)
        return cls(Fraction(s, q) * (1 if sign > 0 else -1), w)

    @classmethod
    def rational(cls, x: Rational) -> "SqrtRational":
        return cls(Fraction(x), 1)

    @classmethod
    def parse(cls, text: str) -> "SqrtRational":
        """Inverse of ``str``: accepts ``0``, ``+sqrt(p/q)`` and ``-sqrt(p)``."""
        text = text.strip()
        if text == "0":
            return ZERO
        m = re.fullmatch(r"([+-])sqrt\((\d+(?:/\d+)?)\)", text)
        if not m:
            raise ValueError(f"not a sqrt-rational literal: {text!r}")
        return cls.sqrt(Fraction(m.group(2)), 1 if m.group(1) == "+" else -1)

    @property
    def sign(self) -> int:
        return (self.coeff > 0) - (self.coeff < 0)

    @property
    def radicand(self) -> Fraction:
        return self.coeff * self.coeff * self.core

    def __bool__(self) -> bool:
        return self.coeff != 0

    def __float__(self) -> float:
        if not self.coeff:
            return 0.0
        # float(Fraction) rounds correctly; keeps ~1 ulp for large p/q
        return self.sign * math.sqrt(float(self.radicand))

    def __complex__(self) -> complex:
        return complex(float(self))

    def to_mpf(self) -> mpmath.mpf:
        with mpmath.workprec(_INEXACT_PREC):
            r = self.radicand
            return self.sign * mpmath.sqrt(mpmath.mpf(r.numerator) / r.denominator)

    def __neg__(self) -> "SqrtRational":
        return SqrtRational(-self.coeff, self.core)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return SqrtRational(self.coeff * other, self.core)
        if isinstance(other, SqrtRational):
            if not self.coeff or not other.coeff:
                return ZERO
            g = math.gcd(self.core, other.core)
            # sqrt(a)*sqrt(b) = g*sqrt(a*b/g^2) with both cores squarefree
            return SqrtRational(self.coeff * other.coeff * g, (self.core // g) * (other.core // g))
        if isinstance(other, InexactValue):
            return other * self
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "SqrtRational":
        if not self.coeff:
            raise ZeroDivisionError("inverse of zero")
        return SqrtRational(1 / (self.coeff * self.core), self.core)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return SqrtRational(self.coeff / other, self.core)
        if isinstance(other, SqrtRational):
            return self * other.inverse()
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SqrtRational.rational(other)
        if isinstance(other, SqrtRational):
            if not other.coeff:
                return self
            if not self.coeff:
                return other
            if self.core == other.core:
                c = self.coeff + other.coeff
                return SqrtRational(c, self.core) if c else ZERO
            return InexactValue(self.to_mpf()) + other
        if isinstance(other, InexactValue):
            return other + self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __eq__(self, other) -> bool:
        if isinstance(other, SqrtRational):
            if not self.coeff and not other.coeff:
                return True
            return self.coeff == other.coeff and self.core == other.core
        if isinstance(other, (int, Fraction)):
            return self.core == 1 and self.coeff == other or (not self.coeff and other == 0)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeff, self.core if self.coeff else 1))

    def __str__(self) -> str:
        if not self.coeff:
            return "0"
        r = self.radicand
        body = str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"
        return f"{'+' if self.sign > 0 else '-'}sqrt({body})"

    def __repr__(self) -> str:
        return f"SqrtRational({self})"


ZERO = SqrtRational(Fraction(0), 1)
ONE = SqrtRational(Fraction(1), 1)


class InexactValue:
    """Result of a sum that left the single-radical form."""

    inexact = True

    def __init__(self, value):
        with mpmath.workprec(_INEXACT_PREC):
            self.value = mpmath.mpf(value)

    @staticmethod
    def _lift(x):
        if isinstance(x, InexactValue):
            return x.value
        if isinstance(x, SqrtRational):
            return x.to_mpf()
        if isinstance(x, (int, Fraction)):
            x = Fraction(x)
            with mpmath.workprec(_INEXACT_PREC):
                return mpmath.mpf(x.numerator) / x.denominator
        return None

    def __add__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        with mpmath.workprec(_INEXACT_PREC):
            return InexactValue(self.value + v)

    __radd__ = __add__

    def __neg__(self):
        return InexactValue(-self.value)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        v = self._lift(other)
        if v is None:
            return NotImplemented
        with mpmath.workprec(_INEXACT_PREC):
            return InexactValue(self.value * v)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return float(self.value)

    def __complex__(self) -> complex:
        return complex(float(self))

    def __repr__(self) -> str:
        return f"InexactValue({mpmath.nstr(self.value, 34)})"

    def __str__(self) -> str:
        return mpmath.nstr(self.value, 17)


def exact_sum(terms) -> Union[SqrtRational, InexactValue]:
    """Sum an iterable of SqrtRationals, grouping by squarefree core."""
    groups: dict[int, Fraction] = {}
    for t in terms:
        if t.coeff:
            groups[t.core] = groups.get(t.core, Fraction(0)) + t.coeff
    groups = {w: c for w, c in groups.items() if c}
    if not groups:
        return ZERO
    if len(groups) == 1:
        (w, c), = groups.items()
        return SqrtRational(c, w)
    total = InexactValue(0)
    for w, c in groups.items():
        total = total + SqrtRational(c, w)
    return total
