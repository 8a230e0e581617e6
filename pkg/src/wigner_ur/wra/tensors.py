"""Irreducible tensor operators in the {J^2, U_r} scheme and the Wigner-Eckart theorem.

Spherical components T_m are stacked along axis 0 in descending m; transformed
components T_{alpha; r} along axis 0 in ascending offset t. Carrier spaces are
single-j spaces eps(j) with descending-m ordering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from ..halfint import HalfInt, HalfLike, InputError, m_values, triangle, twice
from ..quon import su2_generators
from ..su2core import cg_array
from ..urbasis import AlphaLabel, RLike, as_r, basis_matrix
from .symbols import cg_ur_tensor, f_r, fr_tensor, metric_alpha_matrix


@dataclass(frozen=True, eq=False)
class SphericalTensor:
    """Rank-k tensor operator given by its 2k+1 spherical components.

    ``tau`` is an opaque extra label (e.g. a multiplicity index); it is carried
    through untouched.
    """

    rank: HalfInt
    components: np.ndarray
    tau: Any = field(default=None)

    def __post_init__(self):
        rank = HalfInt.of(self.rank)
        comps = np.array(self.components, dtype=complex)
        if comps.ndim != 3 or comps.shape[0] != rank.twice + 1:
            raise InputError(f"rank {rank} needs {rank.twice + 1} component matrices, got shape {comps.shape}")
        comps.setflags(write=False)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "components", comps)

    def alpha_components(self, r: RLike) -> np.ndarray:
        return tensor_transform(self.components, self.rank, r)


def _stack(components, tk: int) -> np.ndarray:
    comps = np.asarray(components, dtype=complex)
    if comps.ndim == 1:
        comps = comps[:, None, None]
    if comps.ndim != 3 or comps.shape[0] != tk + 1:
        raise InputError(f"expected {tk + 1} components, got array of shape {comps.shape}")
    return comps


def tensor_transform(components, k: HalfLike, r: RLike) -> np.ndarray:
    """T_{alpha; r} = (2k+1)^{-1/2} sum_m q^{alpha m} T_m."""
    tk = twice(k)
    comps = _stack(components, tk)
    return np.einsum("it,ixy->txy", basis_matrix(tk, as_r(r)), comps)


def tensor_untransform(alpha_components, k: HalfLike, r: RLike) -> np.ndarray:
    tk = twice(k)
    comps = _stack(alpha_components, tk)
    return np.einsum("it,txy->ixy", basis_matrix(tk, as_r(r)).conj(), comps)


def rotate_components(alpha_components, D_carrier: np.ndarray) -> np.ndarray:
    """P_R T P_R^{-1} for each component, with P_R given on the carrier space."""
    D = np.asarray(D_carrier)
    return np.einsum("xy,tyz,wz->txw", D, np.asarray(alpha_components), D.conj())


def tensor_product_ur(T, U, k1: HalfLike, k2: HalfLike, k: HalfLike, r: RLike) -> np.ndarray:
    """All components {T U}^{(k)}_{alpha; r} = sum (k1 k2 a1 a2 | k a)_r T_{a1} U_{a2}."""
    tk1, tk2, tk = twice(k1), twice(k2), twice(k)
    T, U = _stack(T, tk1), _stack(U, tk2)
    if T.shape[2] != U.shape[1]:
        raise InputError("operators do not act on a common carrier")
    if not triangle(tk1, tk2, tk):
        raise InputError(f"rank {HalfInt(tk)} is not contained in {HalfInt(tk1)} x {HalfInt(tk2)}")
    C = cg_ur_tensor(tk1, tk2, tk, as_r(r))
    return np.einsum("abc,axy,byz->cxz", C, T, U)


def tensor_product_component(T, U, k1: HalfLike, k2: HalfLike, k: HalfLike, a: AlphaLabel, r: RLike | None = None) -> np.ndarray:
    if a.j.twice != twice(k) or (r is not None and as_r(r) != a.r):
        raise InputError("label does not match rank or r")
    return tensor_product_ur(T, U, k1, k2, k, a.r)[a.t]


def _check_integer_rank(tk: int) -> None:
    if tk % 2:
        raise InputError("the scalar product needs an integer rank")


def scalar_product_coupled(T, U, k: HalfLike, r: RLike) -> np.ndarray:
    """(T . U) = (-1)^k sqrt(2k+1) {T U}^{(0)}_{0; r}."""
    tk = twice(k)
    _check_integer_rank(tk)
    sign = -1.0 if (tk // 2) % 2 else 1.0
    return sign * math.sqrt(tk + 1) * tensor_product_ur(T, U, tk / 2, tk / 2, 0, r)[0]


def scalar_product_metric(T, U, k: HalfLike, r: RLike) -> np.ndarray:
    """(T . U) = (-1)^{-k} sum (k k; a a')_r T_a U_a'."""
    tk = twice(k)
    _check_integer_rank(tk)
    T, U = _stack(T, tk), _stack(U, tk)
    sign = -1.0 if (tk // 2) % 2 else 1.0
    return sign * np.einsum("ab,axy,byz->xz", metric_alpha_matrix(tk, as_r(r)), T, U)


def scalar_product_standard(T_m, U_m, k: HalfLike) -> np.ndarray:
    """sum_m (-1)^m T_m U_{-m} on spherical components."""
    tk = twice(k)
    _check_integer_rank(tk)
    T, U = _stack(T_m, tk), _stack(U_m, tk)
    out = np.zeros((T.shape[1], U.shape[2]), complex)
    for i, tm in enumerate(m_values(tk)):
        sign = -1.0 if (tm // 2) % 2 else 1.0
        out += sign * T[i] @ U[tk - i]
    return out


# --- Wigner-Eckart -------------------------------------------------------------


def wigner_eckart_ur(j1: HalfLike, a1: AlphaLabel, j2: HalfLike, a2: AlphaLabel, k: HalfLike, a: AlphaLabel, r: RLike | None, reduced_me: complex) -> complex:
    """<j1 a1; r| T_{a; r} |j2 a2; r> = (j1||T||j2) f_r(j1 j2 k; a1 a2 a)."""
    return complex(reduced_me) * f_r(j1, j2, k, a1, a2, a, r)


def unit_tensor_m(j1: HalfLike, j2: HalfLike, k: HalfLike) -> np.ndarray:
    """Wigner unit operator: <j1 m1| T_q |j2 m2> = (-1)^{2k} (2j1+1)^{-1/2} (j2 k m2 q | j1 m1).

    Shape (2k+1, 2j1+1, 2j2+1), all axes descending in m.
    """
    tj1, tj2, tk = twice(j1), twice(j2), twice(k)
    if not triangle(tj1, tj2, tk):
        raise InputError("unit tensor needs a valid triad")
    C = cg_array(tj2, tk, tj1)  # [m2, q, m1]
    sign = -1.0 if tk % 2 else 1.0
    return sign / math.sqrt(tj1 + 1) * np.transpose(C, (1, 2, 0))


def _generators(tj: int):
    if tj == 0:
        z = np.zeros((1, 1), complex)
        return z, z, z
    g = su2_generators(HalfInt(tj))
    return g.Jp.data, g.Jm.data, g.Jz.data


def solve_tensor_operator(j1: HalfLike, j2: HalfLike, k: HalfLike) -> np.ndarray:
    """A rank-k tensor operator block eps(j2) -> eps(j1), found without any coupling coefficient.

    Solves [Jz, T_q] = q T_q and [J+-, T_q] = sqrt(k(k+1) - q(q+-1)) T_{q+-1}
    as a linear null space using the quon-built generators. The result is
    normalised (unit Frobenius norm) with its largest entry real and positive.
    """
    tj1, tj2, tk = twice(j1), twice(j2), twice(k)
    P1, M1, Z1 = _generators(tj1)
    P2, M2, Z2 = _generators(tj2)
    d1, d2, dk = tj1 + 1, tj2 + 1, tk + 1
    n = d1 * d2
    qs = m_values(tk)

    def left_right(A, B):  # vec(A X - X B), row-major vec
        return np.kron(A, np.eye(d2)) - np.kron(np.eye(d1), B.T)

    blocks = []
    for i, tq in enumerate(qs):
        row = np.zeros((n, dk * n), complex)
        row[:, i * n:(i + 1) * n] = left_right(Z1, Z2) - tq / 2 * np.eye(n)
        blocks.append(row)
        for A, B, step, c in (
            (P1, P2, -1, math.sqrt((tk - tq) * (tk + tq + 2)) / 2),
            (M1, M2, +1, math.sqrt((tk + tq) * (tk - tq + 2)) / 2),
        ):
            row = np.zeros((n, dk * n), complex)
            row[:, i * n:(i + 1) * n] = left_right(A, B)
            target = i + step  # descending order: q+1 sits at i-1
            if 0 <= target < dk:
                row[:, target * n:(target + 1) * n] -= c * np.eye(n)
            blocks.append(row)
    M = np.vstack(blocks)
    _, s, vh = np.linalg.svd(M)
    null = vh[np.sum(s > 1e-9 * max(1.0, s[0])):]
    if null.shape[0] != 1:
        raise ArithmeticError(f"expected a one-dimensional solution space, got {null.shape[0]}")
    x = null[0].conj()
    x = x / np.linalg.norm(x)
    big = x[np.argmax(np.abs(x))]
    x = x * (abs(big) / big)
    return x.reshape(dk, d1, d2)


def spin_vector_operator(j: HalfLike) -> np.ndarray:
    """Spherical components (J_{+1}, J_0, J_{-1}) = (-J+/sqrt2, Jz, J-/sqrt2) on eps(j)."""
    g = su2_generators(j)
    return np.stack([-g.Jp.data / math.sqrt(2), g.Jz.data, g.Jm.data / math.sqrt(2)])


def alpha_matrix_elements(block_m: np.ndarray, j1: HalfLike, j2: HalfLike, k: HalfLike, r: RLike) -> np.ndarray:
    """E[t1, t2, t] = <j1 a1; r| T_{a; r} |j2 a2; r> for a block given over descending m."""
    r = as_r(r)
    V1, V2, Vk = (basis_matrix(twice(x), r) for x in (j1, j2, k))
    return np.einsum("ia,jb,qc,qij->abc", V1.conj(), V2, Vk, np.asarray(block_m, complex))


def reduced_matrix_element(block_m: np.ndarray, j1: HalfLike, j2: HalfLike, k: HalfLike, r: RLike, cutoff: float = 1e-8) -> tuple[complex, float]:
    """Extract (j1||T||j2) as the ratio of alpha-basis matrix elements to f_r.

    Returns the mean ratio over all label triples with |f_r| > cutoff and the
    largest deviation of any single ratio from it. Entries with vanishing f_r
    must vanish too; their magnitude is folded into the spread.
    """
    r = as_r(r)
    E = alpha_matrix_elements(block_m, j1, j2, k, r)
    F = fr_tensor(twice(j1), twice(j2), twice(k), r)
    mask = np.abs(F) > cutoff
    if not mask.any():
        raise ArithmeticError("f_r vanishes identically for these labels")
    ratios = E[mask] / F[mask]
    mean = complex(np.mean(ratios))
    spread = float(np.max(np.abs(ratios - mean)))
    leak = float(np.max(np.abs(E[~mask]))) if (~mask).any() else 0.0
    return mean, max(spread, leak)
