"""Verification suites: every structural identity evaluated and reduced to a worst deviation.

A suite returns a :class:`SuiteReport` whose table maps a short identity tag
to the largest deviation seen for it. Reports are pure max-reductions, so the
order in which cases run never changes the result.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from . import quon as Q
from . import urbasis as B
from .exactcheck import biedenharn_elliott, cg_orthogonality, sixj_orthogonality
from .halfint import HalfInt, InputError, m_values, triangle
from .linalg import commutator, max_abs
from .rotation import compose, wigner_D
from .su2core import cg_array
from .wra import recoupling as RC
from .wra import symbols as S
from .wra import tensors as T

TOL_SINGLE = RC.TOL_SINGLE
TOL_SIXJ = RC.TOL_SIXJ
TOL_NINEJ = RC.TOL_NINEJ
TOL_WIGNER_ECKART = 1e-10

QUON_KS = (2, 3, 4, 5, 7)
DEFAULT_RS = (Fraction(0), Fraction(1), Fraction(37, 100))


@dataclass
class SuiteReport:
    name: str
    tol: float
    cases: int = 0
    table: dict[str, float] = field(default_factory=dict)
    parts: list["SuiteReport"] = field(default_factory=list)

    @property
    def worst(self) -> float:
        return max(self.table.values(), default=0.0)

    @property
    def passed(self) -> bool:
        if self.parts:
            return all(p.passed for p in self.parts)
        return self.worst < self.tol or self.worst == 0.0

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def add(self, tag: str, deviation: float) -> None:
        deviation = float(deviation)
        if math.isnan(deviation):
            deviation = math.inf
        self.cases += 1
        self.table[tag] = max(self.table.get(tag, 0.0), deviation)

    def merge(self, other: "SuiteReport") -> None:
        """Fold a sub-suite in; it keeps its own tolerance for pass/fail."""
        self.parts.append(other)
        self.cases += other.cases
        for tag, dev in other.table.items():
            key = f"{other.name}: {tag}"
            self.table[key] = max(self.table.get(key, 0.0), dev)

    def to_dict(self) -> dict:
        out = {
            "suite": self.name,
            "cases": self.cases,
            "worst": self.worst,
            "tol": self.tol,
            "passed": self.passed,
            "table": dict(sorted(self.table.items())),
        }
        if self.parts:
            out["parts"] = [p.to_dict() for p in self.parts]
        return out


def _js(tjmax: int, tjmin: int = 0) -> list[HalfInt]:
    return [HalfInt(t) for t in range(tjmin, tjmax + 1)]


def _rs(rs) -> list[Fraction]:
    return [B.as_r(r) for r in (DEFAULT_RS if rs is None else rs)]


# --- quon ----------------------------------------------------------------------


def quon_suite(ks: Sequence[int] = QUON_KS, rs=None, tol: float | None = None) -> SuiteReport:
    rep = SuiteReport("quon", TOL_SINGLE if tol is None else tol)
    for k in ks:
        ops = Q.quon_ops(k)
        q = Q.q_root(k)
        I = np.eye(k * k)
        pairs = ((ops.a1m, ops.a1p, ops.N1), (ops.a2m, ops.a2p, ops.N2))
        for am, ap, N in pairs:
            rep.add("quon relation", max_abs(am.data @ ap.data - q * ap.data @ am.data - I))
            rep.add("number raises", max_abs(commutator(N.data, ap.data) - ap.data))
            rep.add("number lowers", max_abs(commutator(N.data, am.data) + am.data))
            rep.add("number hermitian", N.deviation(N.dag()))
            rep.add("nilpotency", max(max_abs((ap ** k).data), max_abs((am ** k).data)))
        A1 = (ops.a1m, ops.a1p, ops.N1)
        A2 = (ops.a2m, ops.a2p, ops.N2)
        rep.add("cross commutativity", max(max_abs(commutator(x.data, y.data)) for x in A1 for y in A2))
        H = Q.h_op(k)
        rep.add("H hermitian", H.deviation(H.dag()))
        sp = Q.SpinSpace(k - 1)
        rep.add("H projector form", sp.restrict(H).deviation(Q.h_spin(HalfInt(k - 1))))
        for r in _rs(rs):
            U = Q.u_op(k, r)
            phase = cmath.exp(1j * Q.phi(k, r))
            rep.add("U unitary", max_abs(U.dag().data @ U.data - I))
            rep.add("U cyclicity", max_abs((U ** k).data - phase * I))
            rep.add("U product form", U.deviation(Q.u_op_product(k, r)))
            rep.add("U projector form", sp.restrict(U).deviation(Q.u_spin(HalfInt(k - 1), r)))
            rep.add("U dagger projector form", sp.restrict(U.dag()).deviation(Q.udag_spin(HalfInt(k - 1), r)))
            Us = Q.u_spin(HalfInt(k - 1), r)
            rep.add("U cyclicity on eps(j)", max_abs((Us ** k).data - phase * np.eye(k)))
    return rep


# --- emergent su(2) --------------------------------------------------------------


def su2_suite(tjmax: int = 20, rs=None, tol: float | None = None) -> SuiteReport:
    rep = SuiteReport("su2", TOL_SINGLE if tol is None else tol)
    for j in _js(tjmax, 1):
        tj = j.twice
        ms = m_values(tj)
        d = tj + 1
        Jp_ref = np.zeros((d, d))
        for i, tm in enumerate(ms[1:], start=1):  # |m> -> |m+1> sits at row i-1
            Jp_ref[i - 1, i] = math.sqrt((tj - tm) * (tj + tm + 2)) / 2
        Jz_ref = np.diag([tm / 2 for tm in ms])
        jj = tj * (tj + 2) / 4
        for r in _rs(rs):
            g = Q.su2_generators(j, r)
            Jp, Jm, Jz = g.Jp.data, g.Jm.data, g.Jz.data
            rep.add("[Jz, J+] = J+", max_abs(commutator(Jz, Jp) - Jp))
            rep.add("[Jz, J-] = -J-", max_abs(commutator(Jz, Jm) + Jm))
            rep.add("[J+, J-] = 2Jz", max_abs(commutator(Jp, Jm) - 2 * Jz))
            rep.add("J+ matrix elements", max_abs(Jp - Jp_ref))
            rep.add("J- matrix elements", max_abs(Jm - Jp_ref.T))
            rep.add("Jz matrix elements", max_abs(Jz - Jz_ref))
            forms = Q.casimir_forms(j, r)
            for name, M in forms.items():
                rep.add(f"J^2 {name} = j(j+1)", max_abs(M.data - jj * np.eye(d)))
            U = Q.u_spin(j, r).data
            rep.add("[J^2, U_r]", max_abs(commutator(forms["sym"].data, U)))
    return rep


# --- basis -----------------------------------------------------------------


RS_BASIS = (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(37, 100))


def basis_suite(tjmax: int = 12, rs=None, tol: float | None = None) -> SuiteReport:
    rep = SuiteReport("basis", TOL_SINGLE if tol is None else tol)
    rs = _rs(RS_BASIS if rs is None else rs)
    rng = np.random.default_rng(20240611)
    for j in _js(tjmax):
        tj, d = j.twice, j.twice + 1
        for r in rs:
            V = B.basis_matrix(tj, r)
            rep.add("unitarity over m", max_abs(V.conj().T @ V - np.eye(d)))
            rep.add("unitarity over alpha", max_abs(V @ V.conj().T - np.eye(d)))
            labels = B.alpha_labels(j, r)
            if tj:
                U = Q.u_spin(j, r).data
                J2 = Q.casimir(j, r).data
                for lab in labels:
                    v = V[:, lab.t]
                    rep.add("U_r eigenvector", np.linalg.norm(U @ v - B.q_power(tj, -lab.alpha) * v))
                    rep.add("J^2 eigenvector", np.linalg.norm(J2 @ v - tj * (tj + 2) / 4 * v))
            for tm in m_values(tj):
                back = V @ B.inverse_expansion(j, HalfInt(tm), r)
                e = np.zeros(d)
                e[m_values(tj).index(tm)] = 1
                rep.add("inverse expansion round trip", max_abs(back - e))
            rep.add("MUB modulus", B.mub_check(j, r))
            # cyclic subgroup: z-rotations by 2 pi p / (2j+1)
            mats = []
            for p in range(d):
                Dr = B.rot_matrix_r(j, (B.z_rotation_angle(j, p), 0.0, 0.0), r).data
                ref = B.cyclic_action(j, p)
                rep.add("cyclic action", max_abs(Dr - ref))
                mats.append(ref)
            for p1, p2 in itertools.product(range(d), repeat=2):
                prod = mats[p1] @ mats[p2]
                target = mats[(p1 + p2) % d]
                wraps = (p1 + p2) // d
                sign = -1.0 if (tj % 2 and wraps % 2) else 1.0
                rep.add("cyclic closure", max_abs(prod - sign * target))
            if d > 1:
                rep.add("cyclic faithfulness", 0.0 if all(
                    max_abs(np.abs(mats[p]) - np.eye(d)) > 0.5 for p in range(1, d)) else 1.0)
            # group property and conjugation through the metric
            e1, e2 = rng.uniform(0, 2 * math.pi, 3), rng.uniform(0, 2 * math.pi, 3)
            e1[1] /= 2
            e2[1] /= 2
            D1 = B.rot_matrix_r(j, e1, r).data
            D2 = B.rot_matrix_r(j, e2, r).data
            D12 = wigner_D(j, compose(e1, e2))
            rep.add("D_r homomorphism", max_abs(D1 @ D2 - V.conj().T @ D12 @ V))
            rep.add("D_r unitary", max_abs(D1.conj().T @ D1 - np.eye(d)))
            G = S.metric_alpha_matrix(tj, r)
            rep.add("D_r conjugation via metric", max_abs(D1.conj() - G.conj() @ D1 @ G.T))
            # time reversal: K|alpha> = sum_a' G[alpha, a'] |a'>, K^2 = (-1)^{2j}
            for lab in labels:
                e = np.zeros(d, complex)
                e[lab.t] = 1
                rep.add("time reversal via metric", max_abs(B.time_reversal(j, r, e) - G[lab.t]))
            c = rng.normal(size=d) + 1j * rng.normal(size=d)
            sign = -1.0 if tj % 2 else 1.0
            rep.add("time reversal squared", max_abs(B.time_reversal(j, r, B.time_reversal(j, r, c)) - sign * c))
            rep.add("metric transpose symmetry", max_abs(G.T - sign * G))
        # overlaps between B_r and B_s, including the Dirichlet limit points
        for r, s in itertools.product(rs, repeat=2):
            for a, b in itertools.product(B.alpha_labels(j, r), B.alpha_labels(j, s)):
                rep.add("Dirichlet overlap", abs(B.basis_overlap(j, a, b) - B.basis_overlap_direct(j, a, b)))
        if tj:
            # alpha - beta = n (2j+1): both sines vanish, limit (-1)^{2jn}
            base = B.AlphaLabel(j, Fraction(0), 0)
            for n in (-2, -1, 1, 2):
                lab = B.AlphaLabel(j, Fraction(-2 * n * d, tj), 0)
                limit = -1.0 if (tj * n) % 2 else 1.0
                rep.add("Dirichlet limit", abs(B.basis_overlap(j, lab, base) - limit))
                rep.add("Dirichlet limit", abs(B.basis_overlap_direct(j, lab, base) - limit))
    return rep


def mub_suite(tjs: Iterable[int], rs=None, tol: float | None = None) -> SuiteReport:
    rep = SuiteReport("mub", TOL_SINGLE if tol is None else tol)
    for tj in tjs:
        for r in _rs(rs):
            rep.add("MUB modulus", B.mub_check(HalfInt(tj), r))
    return rep


# --- coupling symbols --------------------------------------------------------------


_PERMS = {
    (0, 1, 2): False, (1, 2, 0): False, (2, 0, 1): False,
    (1, 0, 2): True, (0, 2, 1): True, (2, 1, 0): True,
}


def _triads(tjmax: int) -> list[tuple[int, int, int]]:
    return [t for t in itertools.product(range(tjmax + 1), repeat=3) if triangle(*t)]


def symbols_suite(tjmax: int = 3, rs=None, tol: float | None = None) -> SuiteReport:
    rep = SuiteReport("symbols", TOL_SINGLE if tol is None else tol)
    rs = _rs(rs)
    for r in rs:
        for tj in range(tjmax + 1):
            G = S.metric_alpha_matrix(tj, r)
            sign = -1.0 if tj % 2 else 1.0
            rep.add("metric unitarity", max_abs(G @ G.conj().T - np.eye(tj + 1)))
            rep.add("metric transpose symmetry", max_abs(G.T - sign * G))
            rep.add("metric as fbar(j 0 j)", max_abs(G - math.sqrt(tj + 1) * S.fbar_tensor(tj, 0, tj, r)[:, 0, :]))
        for tj1, tj2 in itertools.product(range(tjmax + 1), repeat=2):
            o = S.fbar_orthogonality(HalfInt(tj1), HalfInt(tj2), r)
            rep.add("fbar completeness", o["completeness"])
            rep.add("fbar orthogonality", o["orthogonality"])
        for t1, t2, t3 in itertools.product(range(tjmax + 1), repeat=3):
            F = S.fbar_tensor(t1, t2, t3, r)
            if not triangle(t1, t2, t3):
                rep.add("broken triad vanishes", max_abs(F))
                rep.add("broken triad vanishes", max_abs(S.fr_tensor(t1, t2, t3, r)))
                continue
            tjs = (t1, t2, t3)
            odd = ((t1 + t2 + t3) // 2) % 2 == 1
            for perm, is_odd in _PERMS.items():
                Fp = S.fbar_tensor(*(tjs[i] for i in perm), r)
                eps = -1.0 if (is_odd and odd) else 1.0
                # fbar(j_a j_b j_c; a_a a_b a_c) as a tensor over the original axes
                rep.add("fbar column permutation", max_abs(F - eps * np.transpose(Fp, np.argsort(perm))))
            G1, G2, G3 = (S.metric_alpha_matrix(t, r) for t in tjs)
            conj_rhs = np.einsum("xa,yb,zc,abc->xyz", G1.conj(), G2.conj(), G3.conj(), F)
            rep.add("fbar conjugation via metrics", max_abs(F.conj() - conj_rhs))
            if odd:
                rep.add("fbar parity (odd: imaginary)", max_abs(F.real))
            else:
                rep.add("fbar parity (even: real)", max_abs(F.imag))
            rep.add("fbar from f_r", max_abs(S.fbar_via_f(t1, t2, t3, r) - F))
            f = S.fr_tensor(t1, t2, t3, r)
            rep.add("f_r from fbar", max_abs(S.f_via_fbar(t1, t2, t3, r) - f))
            swap = S.fr_tensor(t1, t3, t2, r)
            eps = -1.0 if odd else 1.0
            rep.add("f_r last-column swap", max_abs(f - eps * np.transpose(swap, (0, 2, 1))))
            if r == 1 and odd and all(t % 2 == 0 for t in tjs):
                rep.add("fbar(alpha=0) vanishes for odd sum", abs(F[t1 // 2, t2 // 2, t3 // 2]))
    return rep


# --- recoupling --------------------------------------------------------------


def sixj_patterns(tjmax: int) -> list[tuple[int, ...]]:
    out = []
    for a, b, c, d, e, f in itertools.product(range(tjmax + 1), repeat=6):
        if triangle(a, b, c) and triangle(a, e, f) and triangle(d, b, f) and triangle(d, e, c):
            out.append((a, b, c, d, e, f))
    return out


def ninej_patterns(tjmax: int) -> list[tuple[int, ...]]:
    triads = _triads(tjmax)
    out = []
    for r1, r2 in itertools.product(triads, repeat=2):
        for c0, c1 in itertools.product(range(tjmax + 1), repeat=2):
            if not (triangle(r1[0], r2[0], c0) and triangle(r1[1], r2[1], c1)):
                continue
            for c2 in range(tjmax + 1):
                if triangle(r1[2], r2[2], c2) and triangle(c0, c1, c2):
                    out.append((*r1, *r2, c0, c1, c2))
    return out


def sixj_suite(tjmax: int = 2, rs=(0, 1), tol: float | None = None) -> SuiteReport:
    rep = SuiteReport("sixj", TOL_SIXJ if tol is None else tol)
    for r in _rs(rs):
        for pat in sixj_patterns(tjmax):
            for tag, dev in RC.sixj_identity_suite(*(HalfInt(t) for t in pat), r).items():
                rep.add(tag, dev)
    return rep


def ninej_suite(tjmax: int = 2, rs=(0, 1), tol: float | None = None) -> SuiteReport:
    rep = SuiteReport("ninej", TOL_NINEJ if tol is None else tol)
    for r in _rs(rs):
        for pat in ninej_patterns(tjmax):
            J = [[HalfInt(t) for t in pat[i:i + 3]] for i in (0, 3, 6)]
            for tag, dev in RC.ninej_identity_suite(J, r).items():
                rep.add(tag, dev)
    return rep


def invariance_suite(rs=None, tol: float | None = None) -> SuiteReport:
    """W-bar and X rebuilt from fbar agree across r (they are rotational invariants)."""
    rep = SuiteReport("invariance", TOL_NINEJ if tol is None else tol)
    rs = _rs(rs)
    for pat in sixj_patterns(2):
        vals = [RC.sixj_via_fbar(pat, r) for r in rs]
        rep.add("W-bar across r", max(abs(v - vals[0]) for v in vals))
    for pat in ninej_patterns(2)[::7]:
        T_ = [list(pat[i:i + 3]) for i in (0, 3, 6)]
        vals = [RC._ninej_via_fbar(T_, r) for r in rs]
        rep.add("X across r", max(abs(v - vals[0]) for v in vals))
    return rep


# --- tensors and Wigner-Eckart -----------------------------------------------------------


WE_TRIPLES = ((1, 1, 2), (2, 2, 2), (2, 1, 1), (1, 2, 1), (2, 2, 4), (3, 1, 2), (3, 3, 2))


def wigner_eckart_suite(triples=WE_TRIPLES, rs=None, tol: float | None = None) -> SuiteReport:
    """Reduced matrix element extracted as matrix element / f_r must not depend on the labels."""
    rep = SuiteReport("wigner-eckart", TOL_WIGNER_ECKART if tol is None else tol)
    for tj1, tj2, tk in triples:
        js = (HalfInt(tj1), HalfInt(tj2), HalfInt(tk))
        unit = T.unit_tensor_m(*js)
        solved = T.solve_tensor_operator(*js)
        for r in _rs(rs):
            me, spread = T.reduced_matrix_element(unit, *js, r)
            rep.add("unit operator: reduced element constant", spread)
            rep.add("unit operator: reduced element is 1", abs(me - 1))
            _, spread = T.reduced_matrix_element(solved, *js, r)
            rep.add("commutator solution: reduced element constant", spread)
            if tj1 == tj2 and tk == 2:
                _, spread = T.reduced_matrix_element(T.spin_vector_operator(js[0]), *js, r)
                rep.add("spin vector: reduced element constant", spread)
    return rep


def _random_ops(rng, tk: int, d: int) -> np.ndarray:
    return rng.normal(size=(tk + 1, d, d)) + 1j * rng.normal(size=(tk + 1, d, d))


def tensor_suite(rs=None, tol: float | None = None) -> SuiteReport:
    rep = SuiteReport("tensor", TOL_SINGLE if tol is None else tol)
    rng = np.random.default_rng(7)
    for r in _rs(rs):
        for tj in (1, 2, 3):
            j = HalfInt(tj)
            for tk in (0, 1, 2, 3):
                if not triangle(tj, tj, tk):
                    continue
                comps = T.solve_tensor_operator(j, j, HalfInt(tk))
                A = T.tensor_transform(comps, HalfInt(tk), r)
                rep.add("transform unitarity", abs(np.sum(np.abs(A) ** 2) - np.sum(np.abs(comps) ** 2)))
                rep.add("transform round trip", max_abs(T.tensor_untransform(A, HalfInt(tk), r) - comps))
                euler = rng.uniform(0, math.pi, 3)
                Dc = wigner_D(j, euler)
                Dr = B.rot_matrix_r(HalfInt(tk), euler, r).data
                lhs = T.rotate_components(A, Dc)
                rhs = np.einsum("bxy,ba->axy", A, Dr)
                rep.add("rotation covariance", max_abs(lhs - rhs))
        # scalar and tensor products on the j = 1 carrier
        Jv = T.spin_vector_operator(HalfInt(2))
        Ja = T.tensor_transform(Jv, HalfInt(2), r)
        std = T.scalar_product_standard(Jv, Jv, HalfInt(2))
        rep.add("J.J = j(j+1)", max_abs(std - 2 * np.eye(3)))
        for tk in (0, 2, 4):
            X = _random_ops(rng, tk, 3)
            Y = _random_ops(rng, tk, 3)
            Xa = T.tensor_transform(X, HalfInt(tk), r)
            Ya = T.tensor_transform(Y, HalfInt(tk), r)
            ref = T.scalar_product_standard(X, Y, HalfInt(tk))
            rep.add("scalar product: coupled vs metric",
                    max_abs(T.scalar_product_coupled(Xa, Ya, HalfInt(tk), r) - T.scalar_product_metric(Xa, Ya, HalfInt(tk), r)))
            rep.add("scalar product: metric vs standard", max_abs(T.scalar_product_metric(Xa, Ya, HalfInt(tk), r) - ref))
        rep.add("scalar product of J", max_abs(T.scalar_product_metric(Ja, Ja, HalfInt(2), r) - std))
        # coupled product of two vectors transforms like the standard coupled product
        for tk in (0, 2, 4):
            prod = T.tensor_product_ur(Ja, Ja, HalfInt(2), HalfInt(2), HalfInt(tk), r)
            std_m = np.einsum("abc,axy,byz->cxz", cg_array(2, 2, tk), Jv, Jv)
            rep.add("tensor product vs standard basis", max_abs(prod - T.tensor_transform(std_m, HalfInt(tk), r)))
        s1, s2 = np.array([[2.0]]), np.array([[3.0]])
        rep.add("scalar x scalar", max_abs(T.tensor_product_ur(s1[None], s2[None], 0, 0, 0, r)[0] - 6.0))
    return rep


def exact_suite(tjmax: int = 5) -> SuiteReport:
    rep = SuiteReport("exact", 0.0)
    for tag, fn, tj in (
        ("CG orthogonality", cg_orthogonality, 6),
        ("6-j orthogonality", sixj_orthogonality, tjmax),
        ("Biedenharn-Elliott", biedenharn_elliott, tjmax),
    ):
        cases, bad = fn(tj)
        rep.cases += cases
        rep.table[tag] = float(len(bad))
    return rep


ALL_SUITES = ("quon", "su2", "basis", "mub", "symbols", "sixj", "ninej", "invariance", "wigner-eckart", "tensor")

SUITES: dict[str, Callable[..., SuiteReport]] = {
    "quon": quon_suite,
    "su2": su2_suite,
    "basis": basis_suite,
    "mub": mub_suite,
    "symbols": symbols_suite,
    "sixj": sixj_suite,
    "ninej": ninej_suite,
    "invariance": invariance_suite,
    "wigner-eckart": wigner_eckart_suite,
    "tensor": tensor_suite,
    "exact": exact_suite,
}


def run_suite(name: str, tj: int | None = None, tjmax: int | None = None, rs=None, tol: float | None = None) -> SuiteReport:
    """Run one suite by name with optional j / jmax (twice-values) and r overrides."""
    if name not in SUITES and name != "all":
        raise InputError(f"unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}")
    tjs = None
    if tj is not None:
        tjs = [tj]
    elif tjmax is not None:
        tjs = list(range(tjmax + 1))
    top = max(tjs) if tjs else None
    if name == "quon":
        ks = [t + 1 for t in tjs if t >= 1] if tjs else QUON_KS
        return quon_suite(ks, rs, tol)
    if name == "su2":
        return su2_suite(20 if top is None else top, rs, tol)
    if name == "basis":
        return basis_suite(12 if top is None else top, rs, tol)
    if name == "mub":
        return mub_suite(tjs if tjs else range(13), rs, tol)
    if name == "symbols":
        return symbols_suite(3 if top is None else top, rs, tol)
    if name == "sixj":
        return sixj_suite(2 if top is None else top, (0, 1) if rs is None else rs, tol)
    if name == "ninej":
        return ninej_suite(2 if top is None else top, (0, 1) if rs is None else rs, tol)
    if name == "invariance":
        return invariance_suite(rs, tol)
    if name == "wigner-eckart":
        return wigner_eckart_suite(rs=rs, tol=tol)
    if name == "tensor":
        return tensor_suite(rs, tol)
    if name == "exact":
        return exact_suite(5 if top is None else top)
    rep = SuiteReport("all", TOL_NINEJ if tol is None else tol)
    for sub in ALL_SUITES:
        rep.merge(run_suite(sub, tj, tjmax, rs, tol))
    return rep
