"""Half-integer angular-momentum labels.

Labels are carried as twice their value so that parity checks are integer
arithmetic. ``HalfInt.of`` accepts the forms used throughout the public API:
``"3/2"``, ``"-1/2"``, ``1``, ``Fraction(3, 2)``, ``1.5`` or another HalfInt.
Plain integers are read as the *value* (``HalfInt.of(1)`` is j = 1); use
``HalfInt(twice=...)`` to build from a twice-value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class InputError(ValueError):
    """Malformed or inconsistent quantum-number input."""


@dataclass(frozen=True, order=True)
class HalfInt:
    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int) or isinstance(self.twice, bool):
            raise InputError(f"twice-value must be an int, got {self.twice!r}")

    @classmethod
    def of(cls, x: "HalfLike") -> "HalfInt":
        if isinstance(x, HalfInt):
            return x
        if isinstance(x, bool):
            raise InputError(f"not a half-integer: {x!r}")
        if isinstance(x, int):
            return cls(2 * x)
        if isinstance(x, str):
            s = x.strip()
            try:
                x = Fraction(s)
            except (ValueError, ZeroDivisionError):
                raise InputError(f"not a half-integer: {s!r}") from None
        if isinstance(x, float):
            if not (2 * x).is_integer():
                raise InputError(f"not a half-integer: {x!r}")
            return cls(int(2 * x))
        if isinstance(x, Fraction):
            if (2 * x).denominator != 1:
                raise InputError(f"not a half-integer: {x}")
            return cls(int(2 * x))
        raise InputError(f"cannot interpret {x!r} as a half-integer")

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __float__(self) -> float:
        return self.twice / 2

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    def __sub__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"


HalfLike = Union[HalfInt, str, int, Fraction, float]


def twice(x: HalfLike) -> int:
    return HalfInt.of(x).twice


def check_j(tj: int) -> None:
    if tj < 0:
        raise InputError(f"angular momentum must be >= 0, got {HalfInt(tj)}")


def check_jm(tj: int, tm: int) -> None:
    """Validate a (j, m) pair given as twice-values."""
    check_j(tj)
    if (tj - tm) % 2:
        raise InputError(f"j - m must be an integer: j={HalfInt(tj)}, m={HalfInt(tm)}")
    if abs(tm) > tj:
        raise InputError(f"|m| > j: j={HalfInt(tj)}, m={HalfInt(tm)}")


def m_values(tj: int) -> list[int]:
    """Twice-values of m in the fixed spin-space ordering (descending, m = j first)."""
    return list(range(tj, -tj - 1, -2))


def triangle(tj1: int, tj2: int, tj3: int) -> bool:
    """Triangle rule with integer perimeter, on twice-values."""
    return (
        tj1 >= 0 and tj2 >= 0 and tj3 >= 0
        and abs(tj1 - tj2) <= tj3 <= tj1 + tj2
        and (tj1 + tj2 + tj3) % 2 == 0
    )


@dataclass(frozen=True)
class Triad:
    j1: HalfInt
    j2: HalfInt
    j3: HalfInt

    @classmethod
    def of(cls, j1: HalfLike, j2: HalfLike, j3: HalfLike) -> "Triad":
        return cls(HalfInt.of(j1), HalfInt.of(j2), HalfInt.of(j3))

    @property
    def satisfies_triangle(self) -> bool:
        return triangle(self.j1.twice, self.j2.twice, self.j3.twice)

    def delta(self) -> int:
        """Delta(0 | j1 x j2 x j3): 1 if the triple product contains the scalar irrep."""
        return int(self.satisfies_triangle)
