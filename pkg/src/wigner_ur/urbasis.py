"""The nonstandard basis B_r of eigenvectors of {J^2, U_r}.

|j alpha; r> = (2j+1)^{-1/2} sum_m q^{alpha m} |j m>,  q = exp(2 pi i / (2j+1)),
with alpha = -j r + t, t = 0 .. 2j. Labels are keyed by the integer offset t
so modular arithmetic on them is exact for any r. The parameter r is
normalised to a Fraction (floats convert exactly), and every phase exponent
is reduced modulo its period in rational arithmetic before it becomes a float.

Coefficient vectors run over descending m, matching the spin-space ordering
of :mod:`wigner_ur.quon`; alpha axes run over ascending t.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

from .halfint import HalfInt, HalfLike, InputError, check_jm, m_values, twice
from .linalg import CplxMat, max_abs
from .rotation import wigner_D

RLike = Union[int, float, Fraction, str]


def as_r(r: RLike) -> Fraction:
    if isinstance(r, bool):
        raise InputError(f"invalid r: {r!r}")
    if isinstance(r, Fraction):
        return r
    if isinstance(r, (int, float)):
        if isinstance(r, float) and not math.isfinite(r):
            raise InputError(f"r must be finite, got {r!r}")
        return Fraction(r)
    if isinstance(r, str):
        try:
            return Fraction(r.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"invalid r: {r!r}") from None
    raise InputError(f"invalid r: {r!r}")


def turn_phase(x: Fraction) -> complex:
    """exp(2 pi i x) with x reduced mod 1 exactly."""
    x = Fraction(x) % 1
    if x == 0:
        return 1 + 0j
    if x == Fraction(1, 2):
        return -1 + 0j
    if x == Fraction(1, 4):
        return 1j
    if x == Fraction(3, 4):
        return -1j
    return cmath.exp(2j * math.pi * float(x))


def alpha_value(tj: int, t: int, r: Fraction) -> Fraction:
    return -Fraction(tj, 2) * r + t


@dataclass(frozen=True)
class AlphaLabel:
    """Eigenvalue label alpha = -j r + t of U_r on eps(j)."""

    j: HalfInt
    r: Fraction
    t: int

    def __post_init__(self):
        object.__setattr__(self, "j", HalfInt.of(self.j))
        object.__setattr__(self, "r", as_r(self.r))
        if not isinstance(self.t, (int, np.integer)) or not 0 <= self.t <= self.j.twice:
            raise InputError(f"offset t must lie in 0..2j, got {self.t!r} for j={self.j}")
        object.__setattr__(self, "t", int(self.t))

    @classmethod
    def from_alpha(cls, j: HalfLike, r: RLike, alpha) -> "AlphaLabel":
        """Label whose alpha equals ``alpha`` modulo 2j+1."""
        j, r = HalfInt.of(j), as_r(r)
        off = Fraction(alpha) - alpha_value(j.twice, 0, r)
        if off.denominator != 1:
            raise InputError(f"alpha={alpha} is not of the form -jr + integer for j={j}, r={r}")
        return cls(j, r, int(off) % (j.twice + 1))

    @property
    def alpha(self) -> Fraction:
        return alpha_value(self.j.twice, self.t, self.r)

    def __float__(self) -> float:
        return float(self.alpha)

    def __str__(self) -> str:
        return str(self.alpha)


def alpha_labels(j: HalfLike, r: RLike) -> list[AlphaLabel]:
    j, r = HalfInt.of(j), as_r(r)
    return [AlphaLabel(j, r, t) for t in range(j.twice + 1)]


def q_power(tj: int, x: Fraction) -> complex:
    """q_j ** x = exp(2 pi i x / (2j+1)) for a rational exponent x."""
    return turn_phase(Fraction(x) / (tj + 1))


@lru_cache(maxsize=1024)
def basis_matrix(tj: int, r: Fraction) -> np.ndarray:
    """V[i, t] = <j m_i | j alpha_t; r>, rows descending m, columns ascending t."""
    d = tj + 1
    V = np.empty((d, d), complex)
    for i, tm in enumerate(m_values(tj)):
        for t in range(d):
            V[i, t] = q_power(tj, alpha_value(tj, t, r) * Fraction(tm, 2))
    V /= math.sqrt(d)
    V.setflags(write=False)
    return V


def _basis_matrix(j: HalfLike, r: RLike) -> tuple[int, np.ndarray]:
    tj = twice(j)
    if tj < 0:
        raise InputError("j must be >= 0")
    return tj, basis_matrix(tj, as_r(r))


def overlap_coeff(j: HalfLike, m: HalfLike, a: AlphaLabel) -> complex:
    """<j m | j alpha; r> = q^{alpha m} / sqrt(2j+1)."""
    tj, tm = twice(j), twice(m)
    check_jm(tj, tm)
    if a.j.twice != tj:
        raise InputError(f"label belongs to j={a.j}, not j={HalfInt(tj)}")
    return q_power(tj, a.alpha * Fraction(tm, 2)) / math.sqrt(tj + 1)


@dataclass(frozen=True)
class BasisVector:
    j: HalfInt
    label: AlphaLabel
    coeffs: np.ndarray  # over descending m

    @property
    def m_labels(self) -> tuple[int, ...]:
        return tuple(m_values(self.j.twice))


def build_basis(j: HalfLike, r: RLike) -> list[BasisVector]:
    """The 2j+1 vectors of B_r spanning eps(j)."""
    tj, V = _basis_matrix(j, r)
    return [BasisVector(HalfInt(tj), lab, V[:, lab.t].copy()) for lab in alpha_labels(HalfInt(tj), r)]


def inverse_expansion(j: HalfLike, m: HalfLike, r: RLike) -> np.ndarray:
    """Coefficients c_t with |j m> = sum_t c_t |j alpha_t; r>, c_t = q^{-m alpha}/sqrt(2j+1)."""
    tj, tm = twice(j), twice(m)
    check_jm(tj, tm)
    V = basis_matrix(tj, as_r(r))
    return V[m_values(tj).index(tm)].conj().copy()


def _sin_pi(y: Fraction) -> float:
    """sin(pi y) with y reduced exactly into (-1, 1]."""
    y = y % 2
    if y > 1:
        y -= 2
    return math.sin(math.pi * float(y))


def basis_overlap(j: HalfLike, a: AlphaLabel, b: AlphaLabel) -> float:
    """<j alpha; r | j beta; s> in the Dirichlet-kernel closed form.

    When alpha - beta = n (2j+1) both sines vanish; the limit is (-1)^{2j n}.
    """
    tj = twice(j)
    if a.j.twice != tj or b.j.twice != tj:
        raise InputError("labels must belong to the same j")
    d = tj + 1
    x = a.alpha - b.alpha
    ratio = x / d
    if ratio.denominator == 1:
        return -1.0 if (tj * int(ratio)) % 2 else 1.0
    return _sin_pi(x) / (d * _sin_pi(ratio))


def basis_overlap_direct(j: HalfLike, a: AlphaLabel, b: AlphaLabel) -> complex:
    """Same overlap computed as an inner product of coefficient vectors."""
    tj = twice(j)
    va = basis_matrix(tj, a.r)[:, a.t]
    vb = basis_matrix(tj, b.r)[:, b.t]
    return complex(np.vdot(va, vb))


def rot_matrix_r(j: HalfLike, euler, r: RLike) -> CplxMat:
    """Rotation matrix in B_r: D_r(R) = V^dagger D(R) V."""
    tj, V = _basis_matrix(j, r)
    D = wigner_D(HalfInt(tj), euler)
    labels = alpha_labels(HalfInt(tj), r)
    return CplxMat.square(V.conj().T @ D @ V, labels)


def z_rotation_angle(j: HalfLike, p: int) -> float:
    return 2 * math.pi * p / (twice(j) + 1)


def cyclic_action(j: HalfLike, p: int) -> np.ndarray:
    """Expected D_r for a z-rotation by 2 pi p / (2j+1): alpha -> alpha - p mod 2j+1.

    An offset that wraps around picks up q^{-(2j+1) m} = (-1)^{2j}, so for
    half-integer j the matrix is a signed permutation.
    """
    tj = twice(j)
    d = tj + 1
    wrap = -1.0 if tj % 2 else 1.0
    M = np.zeros((d, d))
    for t in range(d):
        target = t - p
        sign = 1.0
        while target < 0:
            target += d
            sign *= wrap
        while target >= d:
            target -= d
            sign *= wrap
        M[target, t] = sign
    return M


def time_reversal(j: HalfLike, r: RLike, coeffs) -> np.ndarray:
    """Apply K (antiunitary, K|j m> = (-1)^{j+m} |j -m>) to alpha-coefficients."""
    tj, V = _basis_matrix(j, r)
    c_m = V @ np.asarray(coeffs, complex)
    signs = np.array([-1.0 if ((tj + tm) // 2) % 2 else 1.0 for tm in m_values(tj)])
    k_m = (signs * c_m.conj())[::-1]
    return V.conj().T @ k_m


def mub_check(j: HalfLike, r: RLike) -> float:
    """max over (m, alpha) of | |<jm|j alpha; r>| - 1/sqrt(2j+1) |."""
    tj, V = _basis_matrix(j, r)
    return max_abs(np.abs(V) - 1 / math.sqrt(tj + 1))
