"""Standard Wigner D matrices in the |j m> basis.

Convention: active z-y-z rotations, D(a, b, c) = exp(-i a Jz) exp(-i b Jy)
exp(-i c Jz), so D_{m m'} = e^{-i m a} d_{m m'}(b) e^{-i m' c}. Axes run over
descending m. Small-d uses the explicit Wigner sum; it is accurate to a few
ulps for the j <= 10 used here.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np

from .halfint import HalfLike, m_values, twice


@lru_cache(maxsize=None)
def _sqrt_fact_ratio(tj: int, tm1: int, tm2: int) -> float:
    f = math.factorial
    return math.sqrt(
        f((tj + tm1) // 2) * f((tj - tm1) // 2) * f((tj + tm2) // 2) * f((tj - tm2) // 2)
    )


def small_d_element(tj: int, tm1: int, tm2: int, beta: float) -> float:
    """d^j_{m1 m2}(beta) from the Wigner sum formula (twice-value labels)."""
    c, s = math.cos(beta / 2), math.sin(beta / 2)
    jpm2 = (tj + tm2) // 2
    jmm1 = (tj - tm1) // 2
    dm = (tm1 - tm2) // 2
    f = math.factorial
    total = 0.0
    for k in range(max(0, -dm), min(jpm2, jmm1) + 1):
        den = f(jpm2 - k) * f(k) * f(dm + k) * f(jmm1 - k)
        sign = -1.0 if (dm + k) % 2 else 1.0
        total += sign / den * c ** (tj - dm - 2 * k) * s ** (dm + 2 * k)
    return _sqrt_fact_ratio(tj, tm1, tm2) * total


def small_d(j: HalfLike, beta: float) -> np.ndarray:
    tj = twice(j)
    ms = m_values(tj)
    return np.array([[small_d_element(tj, a, b, beta) for b in ms] for a in ms])


def wigner_D(j: HalfLike, euler) -> np.ndarray:
    """D^j(a, b, c) as a dense matrix, rows/cols descending m."""
    a, b, c = (float(x) for x in euler)
    tj = twice(j)
    ms = np.array(m_values(tj)) / 2
    return np.exp(-1j * ms * a)[:, None] * small_d(tj / 2, b) * np.exp(-1j * ms * c)[None, :]


def euler_from_su2(U: np.ndarray) -> tuple[float, float, float]:
    """z-y-z Euler angles of an SU(2) matrix, lifted exactly (no sign ambiguity).

    ``U`` must be written in the (m = +1/2, m = -1/2) ordering.
    """
    u00, u10 = complex(U[0, 0]), complex(U[1, 0])
    beta = 2 * math.atan2(abs(u10), abs(u00))
    s = -2 * cmath.phase(u00)  # a + c
    dlt = 2 * cmath.phase(u10)  # a - c
    return (s + dlt) / 2, beta, (s - dlt) / 2


def compose(euler1, euler2) -> tuple[float, float, float]:
    """Euler angles of R1 R2, computed through the spin-1/2 representation."""
    return euler_from_su2(wigner_D("1/2", euler1) @ wigner_D("1/2", euler2))
