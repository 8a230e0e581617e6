import itertools
from fractions import Fraction

import pytest

from wigner_ur import ninej, ninej_identity_suite, sixj, sixj_identity_suite
from wigner_ur.halfint import triangle
from wigner_ur.verify import ninej_patterns, ninej_suite, sixj_patterns
from wigner_ur.wra.recoupling import ninej_via_fbar, sixj_via_fbar

H = Fraction(1, 2)
R37 = Fraction(37, 100)


def test_all_half_patterns_r1():
    # every triad of three spin-1/2 entries fails, so mix in 0 and 1
    for tjs in sixj_patterns(2):
        if max(tjs) > 2 or tjs.count(1) < 2:
            continue
        js = [Fraction(t, 2) for t in tjs]
        dev = sixj_identity_suite(*js, 1)
        assert max(dev.values()) < 1e-10, (tjs, dev)


def test_r_independence():
    args = (H, H, 1, H, H, 1)
    w = float(sixj(*args))
    for r in (0, 1, R37, Fraction(-5, 3)):
        assert abs(sixj_via_fbar([1, 1, 2, 1, 1, 2], r) - w) < 1e-12
        assert max(sixj_identity_suite(*args, r).values()) < 1e-10


def test_broken_triad_both_sides_zero():
    dev = sixj_identity_suite(1, 1, 3, 1, 1, 1, 0)
    assert max(dev.values()) < 1e-15
    assert abs(sixj_via_fbar([2, 2, 6, 2, 2, 2], 0)) < 1e-15
    J = [[1, 1, 3], [1, 1, 1], [1, 1, 1]]
    assert abs(ninej_via_fbar(J, 1)) < 1e-15
    assert max(ninej_identity_suite(J, 1).values()) < 1e-15


def test_ninej_half_integer_arrays():
    arrays = [
        [[H, H, 1], [H, H, 1], [1, 1, 0]],
        [[H, H, 0], [H, H, 1], [0, 1, 1]],
        [[H, H, 1], [H, H, 0], [1, 1, 1]],
    ]
    for J in arrays:
        for r in (1, 0):
            assert abs(ninej_via_fbar(J, r) - float(ninej(J))) < 1e-12
            assert max(ninej_identity_suite(J, r).values()) < 1e-9


def test_ninej_zero_row_reduces():
    # {a b c; d e f; 0 0 0} forces c = f, a = d, b = e ... reduces to 1/((2a+1)(2b+1)) weighting
    for a, b in itertools.product((0, H, 1), repeat=2):
        for c in (Fraction(x, 2) for x in range(0, 5)):
            if not triangle(int(2 * a), int(2 * b), int(2 * c)):
                continue
            J = [[a, b, c], [a, b, c], [0, 0, 0]]
            want = float(ninej([[a, a, 0], [b, b, 0], [c, c, 0]]))
            assert abs(ninej_via_fbar(J, R37) - want) < 1e-12


def test_pattern_enumeration_is_complete():
    six = [t for t in itertools.product(range(3), repeat=6)
           if triangle(*t[:3]) and triangle(t[0], t[4], t[5]) and triangle(t[3], t[1], t[5]) and triangle(t[3], t[4], t[2])]
    assert sixj_patterns(2) == six and len(six) == 47
    nine = [t for t in itertools.product(range(3), repeat=9)
            if all(triangle(*t[i:i + 3]) for i in (0, 3, 6)) and all(triangle(t[c], t[c + 3], t[c + 6]) for c in range(3))]
    assert ninej_patterns(2) == nine and len(nine) == 215


def test_ninej_suite_at_generic_r():
    rep = ninej_suite(1, (R37,))
    assert rep.passed


def test_rows_validation():
    with pytest.raises(ValueError):
        ninej_via_fbar([[1, 1, 0], [1, 1, 0]], 0)
