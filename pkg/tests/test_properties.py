from fractions import Fraction

import numpy as np
from hypothesis import given, settings, strategies as st

from wigner_ur import AlphaLabel, basis_overlap
from wigner_ur.halfint import HalfInt, triangle
from wigner_ur.rotation import compose, wigner_D
from wigner_ur.urbasis import basis_matrix, rot_matrix_r
from wigner_ur.wra.recoupling import sixj_via_fbar
from wigner_ur.su2core import sixj2
from wigner_ur.wra.symbols import fbar_tensor, metric_alpha_matrix

rs = st.fractions(min_value=-4, max_value=4, max_denominator=60)
angles = st.tuples(*[st.floats(-6.3, 6.3, allow_nan=False)] * 3)
tjs = st.integers(0, 8)


@settings(max_examples=40, deadline=None)
@given(tjs, rs)
def test_basis_unitary_and_unbiased(tj, r):
    V = basis_matrix(tj, r)
    assert np.max(abs(V.conj().T @ V - np.eye(tj + 1))) < 1e-12
    assert np.max(abs(abs(V) - (tj + 1) ** -0.5)) < 1e-12


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), rs, rs, st.data())
def test_overlap_closed_form(tj, r, s, data):
    t1 = data.draw(st.integers(0, tj))
    t2 = data.draw(st.integers(0, tj))
    a, b = AlphaLabel(HalfInt(tj), r, t1), AlphaLabel(HalfInt(tj), s, t2)
    direct = np.vdot(basis_matrix(tj, r)[:, t1], basis_matrix(tj, s)[:, t2])
    assert abs(basis_overlap(HalfInt(tj), a, b) - direct) < 1e-12


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), rs, angles, angles)
def test_rotation_group_property(tj, r, e1, e2):
    j = HalfInt(tj)
    D1, D2 = rot_matrix_r(j, e1, r).data, rot_matrix_r(j, e2, r).data
    D12 = rot_matrix_r(j, compose(e1, e2), r).data
    assert np.max(abs(D1 @ D2 - D12)) < 1e-10


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), rs, angles)
def test_metric_conjugates_rotations(tj, r, e):
    # D_r^* = G^* D_r G^T
    j = HalfInt(tj)
    Dr = rot_matrix_r(j, e, r).data
    G = metric_alpha_matrix(tj, r)
    assert np.max(abs(Dr.conj() - G.conj() @ Dr @ G.T)) < 1e-11


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 6), angles)
def test_wigner_d_unitary(tj, e):
    D = wigner_D(HalfInt(tj), e)
    assert np.max(abs(D.conj().T @ D - np.eye(tj + 1))) < 1e-12


@settings(max_examples=25, deadline=None)
@given(st.tuples(*[st.integers(0, 3)] * 6), rs)
def test_sixj_from_fbar_any_r(t, r):
    a, b, c, d, e, f = t
    if not (triangle(a, b, c) and triangle(a, e, f) and triangle(d, b, f) and triangle(d, e, c)):
        return
    assert abs(sixj_via_fbar(t, r) - float(sixj2(*t))) < 1e-10


@settings(max_examples=40, deadline=None)
@given(st.tuples(*[st.integers(0, 4)] * 3), rs)
def test_fbar_parity(t, r):
    F = fbar_tensor(*t, r)
    if not triangle(*t):
        assert not F.any()
        return
    G = [metric_alpha_matrix(x, r) for x in t]
    # fbar^* is fbar contracted with the three conjugated metrics
    rhs = np.einsum("xa,yb,zc,abc->xyz", G[0].conj(), G[1].conj(), G[2].conj(), F)
    assert np.max(abs(F.conj() - rhs)) < 1e-12


def test_negative_and_large_r_labels():
    lab = AlphaLabel(HalfInt(3), Fraction(-101, 7), 2)
    assert lab.alpha == Fraction(3, 2) * Fraction(101, 7) + 2
