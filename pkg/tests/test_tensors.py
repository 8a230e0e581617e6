import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from wigner_ur import AlphaLabel, InputError, SphericalTensor, f_r, tensor_product_ur, tensor_transform, wigner_eckart_ur
from wigner_ur.halfint import HalfInt
from wigner_ur.rotation import wigner_D
from wigner_ur.urbasis import alpha_labels, basis_matrix, cyclic_action, rot_matrix_r, z_rotation_angle
from wigner_ur.verify import tensor_suite, wigner_eckart_suite
from wigner_ur.wra.symbols import fbar_tensor, fr_tensor
from wigner_ur.wra.tensors import (
    alpha_matrix_elements, reduced_matrix_element, rotate_components, scalar_product_coupled, scalar_product_metric,
    scalar_product_standard, solve_tensor_operator, spin_vector_operator, tensor_product_component, tensor_untransform,
    unit_tensor_m,
)

R37 = Fraction(37, 100)
H = HalfInt(1)


def test_scalar_transform_is_identity():
    X = np.arange(4.0).reshape(1, 2, 2)
    assert np.allclose(tensor_transform(X, 0, R37), X)


def test_vector_covariance_under_cyclic_rotation():
    # k = 1, r = 1 on the j = 1 carrier: z-rotation by 2 pi / 3 permutes the alpha components
    J = spin_vector_operator(1)
    A = tensor_transform(J, 1, 1)
    D = wigner_D(1, (z_rotation_angle(1, 1), 0, 0))
    rotated = rotate_components(A, D)
    P = cyclic_action(1, 1)
    assert np.max(abs(rotated - np.einsum("bxy,ba->axy", A, P))) < 1e-12


def test_transform_gram_identity():
    for tk in range(0, 6):
        V = basis_matrix(tk, R37)
        E = np.eye(tk + 1)[:, :, None]
        A = tensor_transform(E, tk / 2, R37)[:, :, 0]
        assert np.max(abs(A.conj().T @ A - np.eye(tk + 1))) < 1e-12
        assert np.max(abs(tensor_untransform(A[:, :, None], tk / 2, R37)[:, :, 0] - np.eye(tk + 1))) < 1e-12


def test_scalar_times_scalar():
    out = tensor_product_ur(np.array([2.0]), np.array([5.0]), 0, 0, 0, R37)
    assert abs(out[0, 0, 0] - 10) < 1e-14


def test_scalar_product_routes_agree_on_spin_vector():
    J = spin_vector_operator(1)
    std = scalar_product_standard(J, J, 1)
    assert np.max(abs(std - 2 * np.eye(3))) < 1e-12
    for r in (0, 1, R37):
        A = tensor_transform(J, 1, r)
        assert np.max(abs(scalar_product_metric(A, A, 1, r) - std)) < 1e-12
        assert np.max(abs(scalar_product_coupled(A, A, 1, r) - std)) < 1e-12


def test_scalar_product_needs_integer_rank():
    S = spin_vector_operator("1/2")[:2]
    with pytest.raises(InputError):
        scalar_product_metric(S, S, "1/2", 0)


def test_tensor_product_component_label_check():
    J = tensor_transform(spin_vector_operator(1), 1, 0)
    a = AlphaLabel(2, 0, 3)
    full = tensor_product_ur(J, J, 1, 1, 2, 0)
    assert np.allclose(tensor_product_component(J, J, 1, 1, 2, a), full[3])
    with pytest.raises(InputError):
        tensor_product_component(J, J, 1, 1, 2, AlphaLabel(1, 0, 0))
    with pytest.raises(InputError):
        tensor_product_ur(J, J, 1, 1, 3, 0)


def test_spherical_tensor_container():
    T = SphericalTensor(1, spin_vector_operator(1), tau="J")
    assert T.rank == HalfInt(2) and T.tau == "J"
    assert np.allclose(T.alpha_components(0), tensor_transform(T.components, 1, 0))
    with pytest.raises(InputError):
        SphericalTensor(2, spin_vector_operator(1))


def test_wigner_eckart_zero_reduced_element():
    a = alpha_labels(1, 0)
    assert wigner_eckart_ur(1, a[0], 1, a[1], 1, a[2], 0, 0) == 0


def test_unit_operator_matrix_elements_are_f_r():
    h, one = alpha_labels("1/2", 1), alpha_labels(1, 1)
    E = alpha_matrix_elements(unit_tensor_m("1/2", "1/2", 1), "1/2", "1/2", 1, 1)
    for a1, a2, a in itertools.product(h, h, one):
        assert abs(E[a1.t, a2.t, a.t] - wigner_eckart_ur("1/2", a1, "1/2", a2, 1, a, 1, 1.0)) < 1e-12
        assert abs(E[a1.t, a2.t, a.t] - f_r("1/2", "1/2", 1, a1, a2, a)) < 1e-12


@pytest.mark.parametrize("js", [("1/2", "1/2", 1), (1, 1, 1), (1, "1/2", "1/2"), ("1/2", 1, "1/2"), (2, 1, 1)])
def test_reduced_element_constant_at_generic_r(js):
    j1, j2, k = (HalfInt.of(x) for x in js)
    me, spread = reduced_matrix_element(unit_tensor_m(j1, j2, k), j1, j2, k, R37)
    assert spread < 1e-10 and abs(me - 1) < 1e-12
    _, spread = reduced_matrix_element(solve_tensor_operator(j1, j2, k), j1, j2, k, R37)
    assert spread < 1e-10


def test_fbar_reading_is_not_label_independent():
    # the alternative reading with fbar_r in place of f_r fails the constancy test
    for tj1, tj2, tk in ((1, 1, 2), (2, 1, 1), (3, 1, 2)):
        E = alpha_matrix_elements(unit_tensor_m(HalfInt(tj1), HalfInt(tj2), HalfInt(tk)), HalfInt(tj1), HalfInt(tj2), HalfInt(tk), R37)
        F = fbar_tensor(tj1, tj2, tk, R37)
        mask = abs(F) > 1e-8
        ratios = E[mask] / F[mask]
        assert np.max(abs(ratios - ratios.mean())) > 1e-3
        F = fr_tensor(tj1, tj2, tk, R37)
        mask = abs(F) > 1e-8
        ratios = E[mask] / F[mask]
        assert np.max(abs(ratios - ratios.mean())) < 1e-12


def test_spin_vector_reduced_element():
    # |<j||J||j>| = sqrt(j(j+1)(2j+1)) in the unit-operator normalisation
    for tj in (1, 2, 3, 4):
        j = HalfInt(tj)
        me, spread = reduced_matrix_element(spin_vector_operator(j), j, j, 1, R37)
        assert spread < 1e-10
        jj = tj / 2
        assert abs(abs(me) - math.sqrt(jj * (jj + 1) * (tj + 1))) < 1e-12


def test_solved_operator_is_proportional_to_unit_operator():
    for js in ((1, 1, 2), (3, 1, 2), (4, 2, 2)):
        j1, j2, k = (HalfInt(t) for t in js)
        S, U = solve_tensor_operator(j1, j2, k), unit_tensor_m(j1, j2, k)
        c = np.vdot(U, S) / np.vdot(U, U)
        assert np.max(abs(S - c * U)) < 1e-12


def test_rotation_covariance_generic():
    rng = np.random.default_rng(3)
    for tj, tk in ((2, 2), (3, 2), (4, 4)):
        comps = solve_tensor_operator(HalfInt(tj), HalfInt(tj), HalfInt(tk))
        for r in (0, R37):
            A = tensor_transform(comps, HalfInt(tk), r)
            euler = tuple(rng.uniform(-3, 3, 3))
            lhs = rotate_components(A, wigner_D(HalfInt(tj), euler))
            Dr = rot_matrix_r(HalfInt(tk), euler, r).data
            assert np.max(abs(lhs - np.einsum("bxy,ba->axy", A, Dr))) < 1e-12


def test_suites_pass():
    assert wigner_eckart_suite().passed
    assert tensor_suite((0, 1, R37)).passed
