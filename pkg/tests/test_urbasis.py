from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.linalg import expm

from wigner_ur import AlphaLabel, InputError, basis_overlap, build_basis, inverse_expansion, mub_check, rot_matrix_r
from wigner_ur.halfint import HalfInt, m_values
from wigner_ur.quon import su2_generators, u_spin
from wigner_ur.rotation import wigner_D
from wigner_ur.urbasis import (
    alpha_labels, basis_matrix, basis_overlap_direct, cyclic_action, overlap_coeff, q_power, time_reversal,
    z_rotation_angle,
)

RS = (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(37, 100))


def test_golden_fixtures(golden):
    assert len(golden) == 4
    for name, j, r, expected in golden:
        V = basis_matrix(HalfInt.of(j).twice, Fraction(r))
        for lab in alpha_labels(j, r):
            for i, tm in enumerate(m_values(lab.j.twice)):
                want = expected[(str(lab), str(HalfInt(tm)))]
                assert abs(V[i, lab.t] - want) < 1e-14, (name, str(lab), tm)


def test_alpha_labels():
    labs = alpha_labels("1/2", 1)
    assert [str(a) for a in labs] == ["-1/2", "1/2"]
    assert [str(a) for a in alpha_labels(1, 0)] == ["0", "1", "2"]
    assert AlphaLabel.from_alpha(1, 0, 4) == AlphaLabel(1, 0, 1)
    with pytest.raises(InputError):
        AlphaLabel.from_alpha("1/2", 0, "1/2")
    with pytest.raises(InputError):
        AlphaLabel(1, 0, 3)


@pytest.mark.parametrize("tj", range(0, 13))
@pytest.mark.parametrize("r", RS)
def test_eigenvectors_of_u(tj, r):
    V = basis_matrix(tj, r)
    assert np.max(abs(V.conj().T @ V - np.eye(tj + 1))) < 1e-12
    if tj:
        U = u_spin(tj / 2, r).data
        for lab in alpha_labels(HalfInt(tj), r):
            v = V[:, lab.t]
            assert np.max(abs(U @ v - q_power(tj, -lab.alpha) * v)) < 1e-12
    for i, tm in enumerate(m_values(tj)):
        # |jm> = sum_alpha c_alpha |j alpha; r>
        assert np.max(abs(V @ inverse_expansion(HalfInt(tj), HalfInt(tm), r) - np.eye(tj + 1)[i])) < 1e-12
    assert mub_check(HalfInt(tj), r) < 1e-12


def test_overlap_coeff_matches_matrix():
    lab = AlphaLabel("3/2", Fraction(37, 100), 2)
    V = basis_matrix(3, lab.r)
    for i, tm in enumerate(m_values(3)):
        assert abs(overlap_coeff("3/2", HalfInt(tm), lab) - V[i, 2]) < 1e-15


@pytest.mark.parametrize("tj", range(0, 9))
def test_dirichlet_overlaps(tj):
    j = HalfInt(tj)
    for r in RS:
        for s in RS:
            for a in alpha_labels(j, r):
                for b in alpha_labels(j, s):
                    closed = basis_overlap(j, a, b)
                    assert abs(closed - basis_overlap_direct(j, a, b)) < 1e-12


def test_dirichlet_limit_cases():
    # alpha - beta a nonzero multiple of 2j+1: both sines vanish
    for tj in range(1, 8):
        j, d = HalfInt(tj), tj + 1
        for n in (1, 2, -1):
            r = Fraction(-2 * n * d, tj)
            a, b = AlphaLabel(j, r, 0), AlphaLabel(j, 0, 0)
            assert a.alpha - b.alpha == n * d
            want = (-1) ** (tj * n)
            assert basis_overlap(j, a, b) == want
            assert abs(basis_overlap_direct(j, a, b) - want) < 1e-12


def test_overlap_rejects_mixed_j():
    with pytest.raises(InputError):
        basis_overlap(1, AlphaLabel(1, 0, 0), AlphaLabel("1/2", 0, 0))


def rotation_by_expm(tj, euler):
    g = su2_generators(tj / 2)
    Jy = (g.Jp.data - g.Jm.data) / 2j
    a, b, c = euler
    Jz = g.Jz.data
    return expm(-1j * a * Jz) @ expm(-1j * b * Jy) @ expm(-1j * c * Jz)


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 8), st.tuples(*[st.floats(-7, 7, allow_nan=False)] * 3))
def test_wigner_d_matches_exponential(tj, euler):
    assert np.max(abs(wigner_D(HalfInt(tj), euler) - rotation_by_expm(tj, euler))) < 1e-11


@pytest.mark.parametrize("tj", range(1, 9))
@pytest.mark.parametrize("r", RS)
def test_rotation_in_alpha_basis(tj, r):
    j = HalfInt(tj)
    euler = (0.3, 1.1, -0.7)
    Dr = rot_matrix_r(j, euler, r).data
    V = basis_matrix(tj, r)
    assert np.max(abs(Dr.conj().T @ Dr - np.eye(tj + 1))) < 1e-12
    assert np.max(abs(V @ Dr @ V.conj().T - rotation_by_expm(tj, euler))) < 1e-11
    for p in range(-tj - 1, 2 * tj + 3):
        Dz = rot_matrix_r(j, (z_rotation_angle(j, p), 0, 0), r).data
        assert np.max(abs(Dz - cyclic_action(j, p))) < 1e-12


@pytest.mark.parametrize("tj", range(0, 9))
def test_time_reversal(tj):
    rng = np.random.default_rng(tj)
    for r in RS:
        c = rng.normal(size=tj + 1) + 1j * rng.normal(size=tj + 1)
        kk = time_reversal(HalfInt(tj), r, time_reversal(HalfInt(tj), r, c))
        assert np.max(abs(kk - (-1) ** tj * c)) < 1e-12


def test_build_basis():
    vecs = build_basis("3/2", "1/2")
    assert len(vecs) == 4
    assert vecs[0].m_labels == (3, 1, -1, -3)
    assert all(abs(np.linalg.norm(v.coeffs) - 1) < 1e-15 for v in vecs)


def test_float_r_is_exact():
    assert np.array_equal(basis_matrix(2, Fraction(0.37)), basis_matrix(2, Fraction(0.37)))
    assert AlphaLabel(1, 0.5, 0).r == Fraction(1, 2)
