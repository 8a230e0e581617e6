"""Standard SU(2) coupling and recoupling coefficients in exact arithmetic.

Condon-Shortley phases throughout. Clebsch-Gordan coefficients use Racah's
closed single-sum formula, 6-j symbols Racah's single sum, and 9-j symbols
the usual sum over products of three 6-j symbols. Results are
:class:`~wigner_ur.sqrtrational.SqrtRational`.

Public functions take :data:`~wigner_ur.halfint.HalfLike` labels; the cached
kernels underneath (``*2`` suffix) take twice-values.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from .halfint import HalfLike, InputError, check_j, check_jm, m_values, triangle, twice
from .sqrtrational import ZERO, SqrtRational, exact_sum

_CACHE = 1 << 18


@lru_cache(maxsize=4096)
def _fact(n: int) -> int:
    return factorial(n)


# --- kernels on twice-values -------------------------------------------------


@lru_cache(maxsize=_CACHE)
def cg2(tj1: int, tj2: int, tm1: int, tm2: int, tj3: int, tm3: int) -> SqrtRational:
    if tm1 + tm2 != tm3 or not triangle(tj1, tj2, tj3):
        return ZERO
    if abs(tm1) > tj1 or abs(tm2) > tj2 or abs(tm3) > tj3:
        return ZERO
    j1p, j1m = (tj1 + tm1) // 2, (tj1 - tm1) // 2
    j2p, j2m = (tj2 + tm2) // 2, (tj2 - tm2) // 2
    j3p, j3m = (tj3 + tm3) // 2, (tj3 - tm3) // 2
    a = (tj1 + tj2 - tj3) // 2
    b = (tj3 - tj2 + tm1) // 2  # J - j2 + m1
    c = (tj3 - tj1 - tm2) // 2  # J - j1 - m2
    pre = Fraction(
        (tj3 + 1)
        * _fact((tj3 + tj1 - tj2) // 2)
        * _fact((tj3 - tj1 + tj2) // 2)
        * _fact(a)
        * _fact(j3p) * _fact(j3m) * _fact(j1p) * _fact(j1m) * _fact(j2p) * _fact(j2m),
        _fact((tj1 + tj2 + tj3) // 2 + 1),
    )
    s = Fraction(0)
    for k in range(max(0, -b, -c), min(a, j1m, j2p) + 1):
        den = _fact(k) * _fact(a - k) * _fact(j1m - k) * _fact(j2p - k) * _fact(b + k) * _fact(c + k)
        s += Fraction(-1 if k % 2 else 1, den)
    if not s:
        return ZERO
    return SqrtRational.sqrt(pre) * s


def _phase(n2: int) -> int:
    """(-1)**(n2/2) for an even twice-exponent n2."""
    return -1 if (n2 // 2) % 2 else 1


@lru_cache(maxsize=_CACHE)
def threejm2(tj1: int, tj2: int, tj3: int, tm1: int, tm2: int, tm3: int) -> SqrtRational:
    if tm1 + tm2 + tm3 != 0:
        return ZERO
    c = cg2(tj1, tj2, tm1, tm2, tj3, -tm3)
    if not c:
        return ZERO
    return c * _phase(tj1 - tj2 - tm3) / SqrtRational.sqrt(tj3 + 1)


def _delta_sq(ta: int, tb: int, tc: int) -> Fraction:
    return Fraction(
        _fact((ta + tb - tc) // 2) * _fact((ta - tb + tc) // 2) * _fact((-ta + tb + tc) // 2),
        _fact((ta + tb + tc) // 2 + 1),
    )


@lru_cache(maxsize=_CACHE)
def sixj2(a: int, b: int, c: int, d: int, e: int, f: int) -> SqrtRational:
    if not (triangle(a, b, c) and triangle(a, e, f) and triangle(d, b, f) and triangle(d, e, c)):
        return ZERO
    lows = ((a + b + c) // 2, (a + e + f) // 2, (d + b + f) // 2, (d + e + c) // 2)
    highs = ((a + b + d + e) // 2, (a + c + d + f) // 2, (b + c + e + f) // 2)
    s = Fraction(0)
    for t in range(max(lows), min(highs) + 1):
        den = 1
        for lo in lows:
            den *= _fact(t - lo)
        for hi in highs:
            den *= _fact(hi - t)
        s += Fraction((-1 if t % 2 else 1) * _fact(t + 1), den)
    if not s:
        return ZERO
    tri = _delta_sq(a, b, c) * _delta_sq(a, e, f) * _delta_sq(d, b, f) * _delta_sq(d, e, c)
    return SqrtRational.sqrt(tri) * s


@lru_cache(maxsize=_CACHE)
def ninej2(
    a11: int, a12: int, a13: int,
    a21: int, a22: int, a23: int,
    a31: int, a32: int, a33: int,
) -> SqrtRational:
    rows = ((a11, a12, a13), (a21, a22, a23), (a31, a32, a33))
    cols = tuple(zip(*rows))
    if not all(triangle(*t) for t in rows + cols):
        return ZERO
    lo = max(abs(a11 - a33), abs(a32 - a21), abs(a23 - a12))
    hi = min(a11 + a33, a32 + a21, a23 + a12)
    terms = []
    for x in range(lo, hi + 1, 2):
        p = (
            sixj2(a11, a21, a31, a32, a33, x)
            * sixj2(a12, a22, a32, a21, x, a23)
            * sixj2(a13, a23, a33, x, a11, a12)
        )
        if p:
            terms.append(p * ((x + 1) * (-1 if x % 2 else 1)))
    return exact_sum(terms)


# --- public API ----------------------------------------------------------------


def cg(j1: HalfLike, j2: HalfLike, m1: HalfLike, m2: HalfLike, j3: HalfLike, m3: HalfLike) -> SqrtRational:
    """Clebsch-Gordan coefficient (j1 j2 m1 m2 | j3 m3), exact."""
    t = [twice(x) for x in (j1, j2, m1, m2, j3, m3)]
    check_jm(t[0], t[2])
    check_jm(t[1], t[3])
    check_jm(t[4], t[5])
    return cg2(*t)


def threejm(j1: HalfLike, j2: HalfLike, j3: HalfLike, m1: HalfLike, m2: HalfLike, m3: HalfLike) -> SqrtRational:
    """Wigner 3-jm symbol (j1 j2 j3; m1 m2 m3), exact."""
    t = [twice(x) for x in (j1, j2, j3, m1, m2, m3)]
    for tj, tm in zip(t[:3], t[3:]):
        check_jm(tj, tm)
    return threejm2(*t)


def sixj(j1: HalfLike, j2: HalfLike, j3: HalfLike, j4: HalfLike, j5: HalfLike, j6: HalfLike) -> SqrtRational:
    """Wigner 6-j symbol {j1 j2 j3; j4 j5 j6}; zero when any triad fails."""
    t = [twice(x) for x in (j1, j2, j3, j4, j5, j6)]
    for tj in t:
        check_j(tj)
    return sixj2(*t)


def ninej(rows) -> SqrtRational:
    """Wigner 9-j symbol of a 3x3 array of labels (row-major)."""
    flat = [twice(x) for row in rows for x in row]
    if len(flat) != 9 or any(len(row) != 3 for row in rows):
        raise InputError("ninej needs a 3x3 array of labels")
    for tj in flat:
        check_j(tj)
    return ninej2(*flat)


def metric_m(j: HalfLike, m: HalfLike, mp: HalfLike) -> int:
    """Wigner's 2-jm metric tensor (-1)**(j+m) delta(mp, -m)."""
    tj, tm, tmp = twice(j), twice(m), twice(mp)
    check_jm(tj, tm)
    check_jm(tj, tmp)
    if tmp != -tm:
        return 0
    return _phase(tj + tm)


# --- float tensors for the numerical layer -------------------------------------


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@lru_cache(maxsize=4096)
def cg_array(tj1: int, tj2: int, tj3: int) -> np.ndarray:
    """C[i1, i2, i3] = (j1 j2 m1 m2 | j3 m3), m-axes in descending order."""
    out = np.zeros((tj1 + 1, tj2 + 1, tj3 + 1))
    if triangle(tj1, tj2, tj3):
        ms1, ms2, ms3 = m_values(tj1), m_values(tj2), m_values(tj3)
        idx3 = {tm: i for i, tm in enumerate(ms3)}
        for i1, tm1 in enumerate(ms1):
            for i2, tm2 in enumerate(ms2):
                i3 = idx3.get(tm1 + tm2)
                if i3 is not None:
                    out[i1, i2, i3] = float(cg2(tj1, tj2, tm1, tm2, tj3, tm1 + tm2))
    return _frozen(out)


@lru_cache(maxsize=4096)
def threejm_array(tj1: int, tj2: int, tj3: int) -> np.ndarray:
    """T[i1, i2, i3] = (j1 j2 j3; m1 m2 m3), m-axes in descending order."""
    out = np.zeros((tj1 + 1, tj2 + 1, tj3 + 1))
    if triangle(tj1, tj2, tj3):
        ms1, ms2, ms3 = m_values(tj1), m_values(tj2), m_values(tj3)
        idx3 = {tm: i for i, tm in enumerate(ms3)}
        for i1, tm1 in enumerate(ms1):
            for i2, tm2 in enumerate(ms2):
                i3 = idx3.get(-tm1 - tm2)
                if i3 is not None:
                    out[i1, i2, i3] = float(threejm2(tj1, tj2, tj3, tm1, tm2, -tm1 - tm2))
    return _frozen(out)


@lru_cache(maxsize=256)
def metric_m_array(tj: int) -> np.ndarray:
    """g[i, i'] = (-1)**(j+m) delta(m', -m), descending-m axes."""
    d = tj + 1
    g = np.zeros((d, d))
    for i, tm in enumerate(m_values(tj)):
        g[i, d - 1 - i] = _phase(tj + tm)
    return _frozen(g)
