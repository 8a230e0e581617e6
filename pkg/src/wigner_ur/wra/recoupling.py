"""6-j and 9-j recoupling identities written with fbar_r symbols.

Each suite evaluates both sides of every identity by exhaustive summation over
alpha labels (plain einsum contractions) and reports max |LHS - RHS| per tag.
Reference values come from the Racah-formula symbols in :mod:`wigner_ur.su2core`.
Spins are twice-values throughout.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from ..halfint import HalfLike, triangle, twice
from ..su2core import ninej2, sixj2
from ..urbasis import RLike, as_r
from .symbols import fbar_tensor, metric_alpha_matrix

TOL_SINGLE = 1e-12
TOL_SIXJ = 1e-10
TOL_NINEJ = 1e-9


def _dev(a, b) -> float:
    d = np.abs(np.asarray(a) - np.asarray(b))
    return float(np.max(d)) if d.size else 0.0


def _w(tjs) -> float:
    return float(sixj2(*tjs))


@lru_cache(maxsize=4096)
def _path(subscripts: str, shapes: tuple) -> list:
    dummies = [np.empty(sh) for sh in shapes]
    return np.einsum_path(subscripts, *dummies, optimize="greedy")[0]


def _es(subscripts, *ops):
    return np.einsum(subscripts, *ops, optimize=_path(subscripts, tuple(o.shape for o in ops)))


def sixj_via_fbar(tjs: Sequence[int], r) -> complex:
    """W-bar from four fbar symbols and six conjugated metric tensors."""
    t1, t2, t3, t4, t5, t6 = tjs
    G = [metric_alpha_matrix(t, r).conj() for t in tjs]
    return complex(_es(
        "ag,bh,ci,dj,ek,fl,abc,gel,jhf,dki->",
        *G,
        fbar_tensor(t1, t2, t3, r), fbar_tensor(t1, t5, t6, r),
        fbar_tensor(t4, t2, t6, r), fbar_tensor(t4, t5, t3, r),
    ))


def sixj_identity_suite(j1: HalfLike, j2: HalfLike, j3: HalfLike, j4: HalfLike, j5: HalfLike, j6: HalfLike, r: RLike) -> dict[str, float]:
    """Deviations of the five fbar forms of the 6-j symbol (0+4, 0+4', 1+3, 2+2, 3+1)."""
    tjs = [twice(j) for j in (j1, j2, j3, j4, j5, j6)]
    t1, t2, t3, t4, t5, t6 = tjs
    r = as_r(r)
    W = _w(tjs)
    fb = lambda a, b, c: fbar_tensor(a, b, c, r)  # noqa: E731
    G = [metric_alpha_matrix(t, r) for t in tjs]
    Gc = [g.conj() for g in G]
    out: dict[str, float] = {}

    out["0+4"] = abs(sixj_via_fbar(tjs, r) - W)

    v93 = _es("dj,ek,fl,abc,ael,jbf,dkc->", Gc[3], Gc[4], Gc[5],
              fb(t1, t2, t3).conj(), fb(t1, t5, t6), fb(t4, t2, t6), fb(t4, t5, t3))
    out["0+4 reduced"] = abs(complex(v93) - W)

    delta = 1.0 if triangle(t1, t2, t3) else 0.0
    rhs94 = delta * _es("dj,ek,fl,ael,jbf,dkc->abc", Gc[3], Gc[4], Gc[5],
                        fb(t1, t5, t6), fb(t4, t2, t6), fb(t4, t5, t3))
    out["1+3"] = _dev(fb(t1, t2, t3) * W, rhs94)

    lhs95 = np.zeros((t1 + 1, t2 + 1, t4 + 1, t5 + 1), complex)
    lhs96 = np.zeros((t2 + 1, t4 + 1, t6 + 1), complex)
    for s3 in range(abs(t1 - t2), t1 + t2 + 1, 2):
        w = _w((t1, t2, s3, t4, t5, t6))
        if w == 0.0:
            continue
        A, B = fb(t1, t2, s3), fb(t4, t5, s3)
        lhs95 += (s3 + 1) * w * np.einsum("abc,dec->abde", A, B.conj())
        lhs96 += (s3 + 1) * w * _es("jd,ek,fl,abc,ael,jkc->bdf", G[3], G[4], G[5],
                                    A, fb(t1, t5, t6).conj(), B.conj())
    rhs95 = _es("dj,ke,fl,akl,jbf->abde", Gc[3], Gc[4], Gc[5], fb(t1, t5, t6), fb(t4, t2, t6))
    out["2+2"] = _dev(lhs95, rhs95)

    delta156 = 1.0 if triangle(t1, t5, t6) else 0.0
    rhs96 = delta156 / (t6 + 1) * np.transpose(fb(t4, t2, t6), (1, 0, 2))
    out["3+1"] = _dev(lhs96, rhs96)
    return out


def _rows(J) -> list[list[int]]:
    rows = [[twice(x) for x in row] for row in J]
    if len(rows) != 3 or any(len(row) != 3 for row in rows):
        raise ValueError("a 9-j array needs three rows of three spins")
    return rows


def ninej_via_fbar(J, r) -> complex:
    """X from six fbar symbols: columns plain, rows conjugated."""
    return _ninej_via_fbar(_rows(J), as_r(r))


def _ninej_via_fbar(T, r) -> complex:
    cols = [fbar_tensor(T[0][c], T[1][c], T[2][c], r) for c in range(3)]
    rows = [fbar_tensor(*T[i], r).conj() for i in range(3)]
    return complex(_es("adg,beh,cfi,abc,def,ghi->", *cols, *rows))


def ninej_identity_suite(J, r: RLike) -> dict[str, float]:
    """Deviations of the 0+6, 1+5 and 2+4 fbar forms of the 9-j symbol."""
    T, r = _rows(J), as_r(r)
    X = float(ninej2(*T[0], *T[1], *T[2]))
    cols = [fbar_tensor(T[0][c], T[1][c], T[2][c], r) for c in range(3)]
    R1, R2, R3 = (fbar_tensor(*T[i], r) for i in range(3))
    out: dict[str, float] = {}

    out["0+6"] = abs(_ninej_via_fbar(T, r) - X)

    delta = 1.0 if triangle(*T[2]) else 0.0
    rhs98 = delta * _es("adg,beh,cfi,abc,def->ghi", *cols, R1.conj(), R2.conj())
    out["1+5"] = _dev(R3 * X, rhs98)

    (a11, a12, a13), (a21, a22, a23), (_, a32, a33) = T
    C2, C3 = cols[1], cols[2]
    lhs99 = np.zeros((a11 + 1, a21 + 1, a32 + 1, a33 + 1), complex)
    for s31 in range(abs(a11 - a21), a11 + a21 + 1, 2):
        x = float(ninej2(a11, a12, a13, a21, a22, a23, s31, a32, a33))
        if x == 0.0:
            continue
        lhs99 += (s31 + 1) * x * np.einsum(
            "adg,ghi->adhi", fbar_tensor(a11, a21, s31, r).conj(), fbar_tensor(s31, a32, a33, r)
        )
    rhs99 = _es("beh,cfi,abc,def->adhi", C2, C3, R1.conj(), R2.conj())
    out["2+4"] = _dev(lhs99, rhs99)
    return out
