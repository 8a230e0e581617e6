"""Coupling symbols of the {J^2, U_r} scheme.

All tensors are indexed by alpha offsets (t1, t2, t3) and cached per
(twice-j triple, r). With V = basis_matrix(j, r), i.e. V[m, t] = q^{alpha m}/sqrt(2j+1):

    (j1 j2 a1 a2 | j3 a3)_r = sum  V1* V2* V3  (j1 j2 m1 m2 | j3 m3)
    fbar_r(j1 j2 j3; a1 a2 a3) = sum  V1* V2* V3*  (j1 j2 j3; m1 m2 m3)
    f_r(j1 j2 j3; a1 a2 a3) = (-1)^{2 j3} (2 j1 + 1)^{-1/2} (j2 j3 a2 a3 | j1 a1)_r^*
    (j j; a a')_r = sum  V* V*  (-1)^{j+m} delta(m', -m)
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from ..halfint import HalfLike, InputError, triangle, twice
from ..su2core import cg_array, metric_m_array, threejm_array
from ..urbasis import AlphaLabel, RLike, as_r, basis_matrix


def _ro(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@lru_cache(maxsize=8192)
def cg_ur_tensor(tj1: int, tj2: int, tj3: int, r) -> np.ndarray:
    r = as_r(r)
    if not triangle(tj1, tj2, tj3):
        return _ro(np.zeros((tj1 + 1, tj2 + 1, tj3 + 1), complex))
    V1, V2, V3 = basis_matrix(tj1, r), basis_matrix(tj2, r), basis_matrix(tj3, r)
    return _ro(np.einsum("ia,jb,kc,ijk->abc", V1.conj(), V2.conj(), V3, cg_array(tj1, tj2, tj3)))


@lru_cache(maxsize=8192)
def fbar_tensor(tj1: int, tj2: int, tj3: int, r) -> np.ndarray:
    r = as_r(r)
    if not triangle(tj1, tj2, tj3):
        return _ro(np.zeros((tj1 + 1, tj2 + 1, tj3 + 1), complex))
    V1, V2, V3 = basis_matrix(tj1, r), basis_matrix(tj2, r), basis_matrix(tj3, r)
    return _ro(np.einsum("ia,jb,kc,ijk->abc", V1.conj(), V2.conj(), V3.conj(), threejm_array(tj1, tj2, tj3)))


@lru_cache(maxsize=8192)
def fr_tensor(tj1: int, tj2: int, tj3: int, r) -> np.ndarray:
    C = cg_ur_tensor(tj2, tj3, tj1, as_r(r))  # [t2, t3, t1]
    sign = -1.0 if tj3 % 2 else 1.0
    return _ro(sign / math.sqrt(tj1 + 1) * np.transpose(C, (2, 0, 1)).conj())


@lru_cache(maxsize=1024)
def metric_alpha_matrix(tj: int, r) -> np.ndarray:
    """G[t, t'] = (j j; alpha_t alpha_t')_r."""
    V = basis_matrix(tj, as_r(r))
    return _ro(np.einsum("ia,jb,ij->ab", V.conj(), V.conj(), metric_m_array(tj)))


# --- label-level accessors ---------------------------------------------------------


def _labels(js, labels, r):
    tjs = [twice(j) for j in js]
    for tj, lab in zip(tjs, labels):
        if not isinstance(lab, AlphaLabel):
            raise InputError(f"expected an AlphaLabel, got {lab!r}")
        if lab.j.twice != tj:
            raise InputError(f"label {lab} belongs to j={lab.j}, expected twice-j {tj}")
    rs = {lab.r for lab in labels}
    if r is not None:
        rs.add(as_r(r))
    if len(rs) != 1:
        raise InputError(f"labels do not share a common r: {sorted(rs)}")
    return tjs, [lab.t for lab in labels], rs.pop()


def cg_ur(j1: HalfLike, j2: HalfLike, j3: HalfLike, a1: AlphaLabel, a2: AlphaLabel, a3: AlphaLabel, r: RLike | None = None) -> complex:
    """Coupling coefficient (j1 j2 a1 a2 | j3 a3)_r."""
    tjs, ts, r = _labels((j1, j2, j3), (a1, a2, a3), r)
    return complex(cg_ur_tensor(*tjs, r)[tuple(ts)])


def f_r(j1: HalfLike, j2: HalfLike, j3: HalfLike, a1: AlphaLabel, a2: AlphaLabel, a3: AlphaLabel, r: RLike | None = None) -> complex:
    tjs, ts, r = _labels((j1, j2, j3), (a1, a2, a3), r)
    return complex(fr_tensor(*tjs, r)[tuple(ts)])


def fbar_r(j1: HalfLike, j2: HalfLike, j3: HalfLike, a1: AlphaLabel, a2: AlphaLabel, a3: AlphaLabel, r: RLike | None = None) -> complex:
    tjs, ts, r = _labels((j1, j2, j3), (a1, a2, a3), r)
    return complex(fbar_tensor(*tjs, r)[tuple(ts)])


def metric_alpha(j: HalfLike, a: AlphaLabel, ap: AlphaLabel, r: RLike | None = None) -> complex:
    """2-j alpha metric tensor (j j; alpha alpha')_r."""
    tjs, ts, r = _labels((j, j), (a, ap), r)
    return complex(metric_alpha_matrix(tjs[0], r)[ts[0], ts[1]])


# --- conversions between f_r and fbar_r ----------------------------------------------


def fbar_via_f(tj1: int, tj2: int, tj3: int, r) -> np.ndarray:
    """fbar(j1 j2 j3; a1 a2 a3) = sum_{a3'} (j3 j3; a3 a3')_r f_r(j3 j2 j1; a3' a2 a1)^*."""
    f = fr_tensor(tj3, tj2, tj1, r)  # [t3', t2, t1]
    return np.einsum("cw,wba->abc", metric_alpha_matrix(tj3, r), f.conj())


def f_via_fbar(tj1: int, tj2: int, tj3: int, r) -> np.ndarray:
    """f_r(j1 j2 j3; a1 a2 a3) = sum_{a1'} (j1 j1; a1' a1)_r fbar(j1 j3 j2; a1' a3 a2)^*."""
    fb = fbar_tensor(tj1, tj3, tj2, r)  # [t1', t3, t2]
    return np.einsum("wa,wcb->abc", metric_alpha_matrix(tj1, r), fb.conj())


def convert_f_fbar(direction: str, j1: HalfLike, j2: HalfLike, j3: HalfLike, a1: AlphaLabel, a2: AlphaLabel, a3: AlphaLabel, r: RLike | None = None) -> complex:
    """Evaluate fbar from f_r (``"f->fbar"``) or f_r from fbar (``"fbar->f"``) through the metric."""
    tjs, ts, r = _labels((j1, j2, j3), (a1, a2, a3), r)
    if direction == "f->fbar":
        return complex(fbar_via_f(*tjs, r)[tuple(ts)])
    if direction == "fbar->f":
        return complex(f_via_fbar(*tjs, r)[tuple(ts)])
    raise InputError(f"direction must be 'f->fbar' or 'fbar->f', got {direction!r}")


# --- orthogonality ---------------------------------------------------------------


def _j3_range(tj1: int, tj2: int):
    return range(abs(tj1 - tj2), tj1 + tj2 + 1, 2)


def fbar_orthogonality(j1: HalfLike, j2: HalfLike, r: RLike) -> dict[str, float]:
    """Worst deviations of the two fbar orthogonality sums from their right-hand sides.

    ``completeness``: sum_{j3 a3} (2j3+1) fbar* fbar' = delta(a1', a1) delta(a2', a2).
    ``orthogonality``: sum_{a1 a2} fbar fbar'* = Delta delta(j3', j3) delta(a3', a3) / (2j3+1),
    taken over every j3, j3' up to j1 + j2 + 1 including non-triangular ones.
    """
    tj1, tj2, r = twice(j1), twice(j2), as_r(r)
    d1, d2 = tj1 + 1, tj2 + 1
    acc = np.zeros((d1, d2, d1, d2), complex)
    for tj3 in _j3_range(tj1, tj2):
        F = fbar_tensor(tj1, tj2, tj3, r)
        acc += (tj3 + 1) * np.einsum("abc,xyc->abxy", F.conj(), F)
    completeness = float(np.max(np.abs(acc - np.einsum("ax,by->abxy", np.eye(d1), np.eye(d2)))))

    # j3 candidates with the right parity plus one out-of-range value each side
    cands = [t for t in range(0, tj1 + tj2 + 3) if (tj1 + tj2 + t) % 2 == 0]
    worst = 0.0
    for tj3, tj3p in itertools.product(cands, repeat=2):
        F = fbar_tensor(tj1, tj2, tj3, r)
        Fp = fbar_tensor(tj1, tj2, tj3p, r)
        lhs = np.einsum("abc,abz->cz", F, Fp.conj())
        rhs = np.zeros_like(lhs)
        if tj3 == tj3p and triangle(tj1, tj2, tj3):
            rhs = np.eye(tj3 + 1) / (tj3 + 1)
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return {"completeness": completeness, "orthogonality": worst}
