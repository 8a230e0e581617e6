"""Two commuting quon algebras at a k-th root of unity and the su(2) they generate.

Everything is realised on the truncated Fock space F_k with basis |n1, n2),
0 <= n1, n2 < k, ordered lexicographically in (n1, n2). The spin subspace
eps(j), j = (k - 1)/2, is spanned by |j m> = |j + m, j - m) and ordered by
descending m. Matrices are returned as :class:`~wigner_ur.linalg.CplxMat`
labelled by (n1, n2) pairs on F_k and by twice-m on eps(j).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .halfint import HalfLike, InputError, m_values, twice
from .linalg import CplxMat, commutator


def _check_k(k: int) -> None:
    if not isinstance(k, (int, np.integer)) or k < 2:
        raise InputError(f"k must be an integer >= 2, got {k!r}")


def q_root(k: int) -> complex:
    return cmath.exp(2j * math.pi / k)


def q_number(x: float, k: int) -> complex:
    """[x]_q = (1 - q**x) / (1 - q) with q = exp(2 pi i / k)."""
    _check_k(k)
    q = q_root(k)
    if float(x).is_integer() and x >= 0:
        # geometric sum form avoids the cancellation in 1 - q**n
        return complex(sum(q**s for s in range(int(x))))
    return (1 - cmath.exp(2j * math.pi * float(x) / k)) / (1 - q)


def q_factorial(n: int, k: int) -> complex:
    out = 1 + 0j
    for s in range(1, n + 1):
        out *= q_number(s, k)
    return out


def phi(k: int, r) -> float:
    """Phase parameter phi_r = pi (k - 1) r."""
    return math.pi * (k - 1) * float(r)


@dataclass(frozen=True)
class FockSpace:
    k: int

    def __post_init__(self):
        _check_k(self.k)

    @property
    def dim(self) -> int:
        return self.k * self.k

    @property
    def basis(self) -> tuple[tuple[int, int], ...]:
        return tuple((n1, n2) for n1 in range(self.k) for n2 in range(self.k))

    def index(self, n1: int, n2: int) -> int:
        return n1 * self.k + n2

    @property
    def q(self) -> complex:
        return q_root(self.k)


@dataclass(frozen=True)
class SpinSpace:
    """eps(j) inside F_{2j+1}; for j = 0 it is a bare one-dimensional space."""

    tj: int

    @classmethod
    def of(cls, j: HalfLike) -> "SpinSpace":
        tj = twice(j)
        if tj < 0:
            raise InputError("j must be >= 0")
        return cls(tj)

    @property
    def k(self) -> int:
        return self.tj + 1

    @property
    def dim(self) -> int:
        return self.tj + 1

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(m_values(self.tj))

    def fock_label(self, tm: int) -> tuple[int, int]:
        return ((self.tj + tm) // 2, (self.tj - tm) // 2)

    def isometry(self) -> np.ndarray:
        """P with columns |j m> as vectors of F_k (k^2 x (2j+1))."""
        if self.tj == 0:
            raise InputError("eps(0) is not embedded in any F_k with k >= 2")
        fs = FockSpace(self.k)
        P = np.zeros((fs.dim, self.dim))
        for i, tm in enumerate(self.labels):
            P[fs.index(*self.fock_label(tm)), i] = 1.0
        return P

    def restrict(self, op: CplxMat) -> CplxMat:
        P = self.isometry()
        return CplxMat.square(P.T @ op.data @ P, self.labels, op.tol)


class QuonOps(NamedTuple):
    a1m: CplxMat
    a1p: CplxMat
    a2m: CplxMat
    a2p: CplxMat
    N1: CplxMat
    N2: CplxMat


@lru_cache(maxsize=64)
def quon_ops(k: int) -> QuonOps:
    """Generators of A1 and A2 acting on F_k."""
    fs = FockSpace(k)
    n = fs.dim
    a1m, a1p, a2m, a2p = (np.zeros((n, n), complex) for _ in range(4))
    N1, N2 = np.zeros((n, n)), np.zeros((n, n))
    for n1, n2 in fs.basis:
        src = fs.index(n1, n2)
        if n1 < k - 1:
            a1p[fs.index(n1 + 1, n2), src] = 1.0
        if n1 > 0:
            a1m[fs.index(n1 - 1, n2), src] = q_number(n1, k)
        if n2 < k - 1:
            a2p[fs.index(n1, n2 + 1), src] = q_number(n2 + 1, k)
        if n2 > 0:
            a2m[fs.index(n1, n2 - 1), src] = 1.0
        N1[src, src] = n1
        N2[src, src] = n2
    labels = fs.basis
    return QuonOps(*(CplxMat.square(m, labels) for m in (a1m, a1p, a2m, a2p, N1, N2)))


@lru_cache(maxsize=64)
def h_op(k: int) -> CplxMat:
    """H = sqrt(N1 (N2 + 1)), diagonal on F_k."""
    fs = FockSpace(k)
    diag = [math.sqrt(n1 * (n2 + 1)) for n1, n2 in fs.basis]
    return CplxMat.square(np.diag(diag), fs.basis)


@lru_cache(maxsize=256)
def u_op(k: int, r) -> CplxMat:
    """U_r from its action on |n1, n2): shift (n1+1, n2-1) with wrap phases."""
    fs = FockSpace(k)
    half = cmath.exp(0.5j * phi(k, r))
    U = np.zeros((fs.dim, fs.dim), complex)
    for n1, n2 in fs.basis:
        c = 1.0 + 0j
        t1 = n1 + 1
        if n1 == k - 1:
            t1, c = 0, c * half
        t2 = n2 - 1
        if n2 == 0:
            t2, c = k - 1, c * half
        U[fs.index(t1, t2), fs.index(n1, n2)] = c
    return CplxMat.square(U, fs.basis)


def u_op_product(k: int, r) -> CplxMat:
    """U_r assembled from quon operators as the product of two brackets.

    [a1+ + e^{i phi/2} (a1-)^{k-1} / [k-1]_q!] [a2- + e^{i phi/2} (a2+)^{k-1} / [k-1]_q!]
    """
    ops = quon_ops(k)
    qf = q_factorial(k - 1, k)
    if abs(qf) < 1e-300:
        raise ArithmeticError(f"[k-1]_q! vanishes for k={k}")
    half = cmath.exp(0.5j * phi(k, r))
    first = ops.a1p.data + half / qf * np.linalg.matrix_power(ops.a1m.data, k - 1)
    second = ops.a2m.data + half / qf * np.linalg.matrix_power(ops.a2p.data, k - 1)
    return CplxMat.square(first @ second, FockSpace(k).basis)


# --- eps(j) projector forms ----------------------------------------------------


def h_spin(j: HalfLike) -> CplxMat:
    """H on eps(j) as the dyadic sum of sqrt((j+m)(j-m+1)) |jm><jm|."""
    sp = SpinSpace.of(j)
    diag = [math.sqrt((sp.tj + tm) * (sp.tj - tm + 2)) / 2 for tm in sp.labels]
    return CplxMat.square(np.diag(diag), sp.labels)


def u_spin(j: HalfLike, r) -> CplxMat:
    """U_r on eps(j): sum |j m+1><j m| + e^{i phi_r} |j -j><j j|."""
    sp = SpinSpace.of(j)
    d = sp.dim
    U = np.zeros((d, d), complex)
    for i in range(1, d):  # column i has m, row i-1 has m+1
        U[i - 1, i] = 1.0
    U[d - 1, 0] += cmath.exp(1j * math.pi * sp.tj * float(r))
    return CplxMat.square(U, sp.labels)


def udag_spin(j: HalfLike, r) -> CplxMat:
    """U_r^dagger on eps(j): sum |j m-1><j m| + e^{-i phi_r} |j j><j -j|."""
    sp = SpinSpace.of(j)
    d = sp.dim
    U = np.zeros((d, d), complex)
    for i in range(d - 1):
        U[i + 1, i] = 1.0
    U[0, d - 1] += cmath.exp(-1j * math.pi * sp.tj * float(r))
    return CplxMat.square(U, sp.labels)


# --- su(2) -----------------------------------------------------------------------


class Generators(NamedTuple):
    Jp: CplxMat
    Jm: CplxMat
    Jz: CplxMat


def su2_generators(j: HalfLike, r=0) -> Generators:
    """J+ = H U_r, J- = U_r^dagger H, Jz = (N1 - N2)/2, restricted to eps(j)."""
    sp = SpinSpace.of(j)
    if sp.tj < 1:
        raise InputError("su2_generators needs j >= 1/2")
    k = sp.k
    H, U, ops = h_op(k), u_op(k, r), quon_ops(k)
    Jp = sp.restrict(H @ U)
    Jm = sp.restrict(U.dag() @ H)
    Jz = sp.restrict((ops.N1 - ops.N2) * 0.5)
    return Generators(Jp, Jm, Jz)


def casimir_forms(j: HalfLike, r=0) -> dict[str, CplxMat]:
    """The four expressions for J^2 on eps(j), keyed by their defining form.

    ``sym`` is (J+J- + J-J+)/2 + Jz^2, ``h_minus`` is H^2 + Jz^2 - Jz,
    ``h_plus`` is U^dag H^2 U + Jz^2 + Jz and ``number`` is (N1+N2)(N1+N2+2)/4.
    """
    sp = SpinSpace.of(j)
    if sp.tj == 0:
        zero = CplxMat.square(np.zeros((1, 1)), sp.labels)
        return {"sym": zero, "h_minus": zero, "h_plus": zero, "number": zero}
    k = sp.k
    H, U, ops = h_op(k), u_op(k, r), quon_ops(k)
    Jz = (ops.N1 - ops.N2) * 0.5
    Jp, Jm = H @ U, U.dag() @ H
    H2 = H @ H
    Ntot = ops.N1 + ops.N2
    forms = {
        "sym": (Jp @ Jm + Jm @ Jp) * 0.5 + Jz @ Jz,
        "h_minus": H2 + Jz @ Jz - Jz,
        "h_plus": U.dag() @ H2 @ U + Jz @ Jz + Jz,
        "number": Ntot @ (Ntot + CplxMat.square(2 * np.eye(k * k), Ntot.rows)) * 0.25,
    }
    return {name: sp.restrict(m) for name, m in forms.items()}


def casimir(j: HalfLike, r=0) -> CplxMat:
    """J^2 on eps(j) in the number-operator form."""
    return casimir_forms(j, r)["number"]


def u_commutator_norm(j: HalfLike, r, s) -> float:
    """Frobenius norm of [U_r, U_s] on eps(j)."""
    return float(np.linalg.norm(commutator(u_spin(j, r).data, u_spin(j, s).data)))
