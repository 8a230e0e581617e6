"""Exact-arithmetic identity checks on the standard SU(2) substrate.

Both routines return the number of identity instances evaluated and a list of
failures; a failure is any instance whose two sides differ as exact numbers
(an inexact intermediate counts as a failure too).
"""

from __future__ import annotations

import itertools

from .halfint import m_values, triangle
from .sqrtrational import SqrtRational, exact_sum
from .su2core import cg2, sixj2


def _tvals(tjmax: int) -> range:
    return range(0, tjmax + 1)


def _couple(ta: int, tb: int, tjmax: int):
    return [t for t in range(abs(ta - tb), min(ta + tb, tjmax) + 1, 2)]


def _exact(x) -> bool:
    return isinstance(x, SqrtRational)


def cg_orthogonality(tjmax: int) -> tuple[int, list]:
    """sum_{m1 m2} <j1 j2 m1 m2|J M><j1 j2 m1 m2|J' M'> = delta delta, exactly."""
    cases, bad = 0, []
    for tj1, tj2 in itertools.product(_tvals(tjmax), repeat=2):
        Js = list(range(abs(tj1 - tj2), tj1 + tj2 + 1, 2))
        for tJ, tJp in itertools.product(Js, repeat=2):
            for tM in m_values(tJ):
                for tMp in m_values(tJp):
                    if tM != tMp:
                        continue  # every term vanishes by m-selection
                    s = exact_sum(
                        cg2(tj1, tj2, tm1, tM - tm1, tJ, tM) * cg2(tj1, tj2, tm1, tM - tm1, tJp, tMp)
                        for tm1 in m_values(tj1)
                        if abs(tM - tm1) <= tj2
                    )
                    expect = SqrtRational.rational(1 if tJ == tJp else 0)
                    cases += 1
                    if not _exact(s) or s != expect:
                        bad.append(((tj1, tj2, tJ, tM, tJp, tMp), s))
        # completeness in the other direction
        for tm1, tm2, tm1p in itertools.product(m_values(tj1), m_values(tj2), m_values(tj1)):
            tm2p = tm1 + tm2 - tm1p
            if abs(tm2p) > tj2:
                continue
            s = exact_sum(
                cg2(tj1, tj2, tm1, tm2, tJ, tm1 + tm2) * cg2(tj1, tj2, tm1p, tm2p, tJ, tm1 + tm2)
                for tJ in Js
                if abs(tm1 + tm2) <= tJ
            )
            expect = SqrtRational.rational(1 if tm1 == tm1p else 0)
            cases += 1
            if not _exact(s) or s != expect:
                bad.append(((tj1, tj2, tm1, tm2, tm1p, tm2p), s))
    return cases, bad


def sixj_orthogonality(tjmax: int) -> tuple[int, list]:
    """sum_x (2x+1)(2f+1) {a b x; c d f}{a b x; c d f'} = delta(f, f'), exactly.

    Instances are restricted to (a, d, f), (c, b, f) and their primed
    counterparts being triangular, which is where the delta is asserted.
    """
    cases, bad = 0, []
    for a, b, c, d in itertools.product(_tvals(tjmax), repeat=4):
        fs = [f for f in _couple(a, d, tjmax) if triangle(c, b, f)]
        xs = [x for x in _couple(a, b, 10 * tjmax + 10) if triangle(c, d, x)]
        for f, fp in itertools.product(fs, repeat=2):
            s = exact_sum(
                sixj2(a, b, x, c, d, f) * sixj2(a, b, x, c, d, fp) * ((x + 1) * (f + 1)) for x in xs
            )
            cases += 1
            if not _exact(s) or s != SqrtRational.rational(1 if f == fp else 0):
                bad.append(((a, b, c, d, f, fp), s))
    return cases, bad


def biedenharn_elliott(tjmax: int) -> tuple[int, list]:
    """Biedenharn-Elliott identity for all nine arguments up to tjmax.

    sum_x (-1)^{S+x} (2x+1) {a b x; c d p}{c d x; e f q}{e f x; b a r}
        = {p q r; e a d}{p q r; f b c},   S = a+b+c+d+e+f+p+q+r.

    Argument choices where one of the six triads not involving x or (p q r)
    fails make every term vanish on both sides and are skipped.
    """
    cases, bad = 0, []
    vals = _tvals(tjmax)
    for a, b, c, d, e, f in itertools.product(vals, repeat=6):
        ps = [p for p in _couple(a, d, tjmax) if triangle(c, b, p)]
        if not ps:
            continue
        qs = [q for q in _couple(c, f, tjmax) if triangle(e, d, q)]
        if not qs:
            continue
        rs = [r for r in _couple(e, a, tjmax) if triangle(b, f, r)]
        if not rs:
            continue
        xs = [x for x in range(0, 4 * tjmax + 1)
              if triangle(a, b, x) and triangle(c, d, x) and triangle(e, f, x)]
        for p, q, r in itertools.product(ps, qs, rs):
            S = a + b + c + d + e + f + p + q + r  # twice the sum
            terms = []
            for x in xs:
                t = sixj2(a, b, x, c, d, p) * sixj2(c, d, x, e, f, q) * sixj2(e, f, x, b, a, r)
                if t:
                    sign = -1 if ((S + x) // 2) % 2 else 1
                    terms.append(t * (sign * (x + 1)))
            lhs = exact_sum(terms)
            rhs = sixj2(p, q, r, e, a, d) * sixj2(p, q, r, f, b, c)
            cases += 1
            if not _exact(lhs) or lhs != rhs:
                bad.append(((a, b, c, d, e, f, p, q, r), lhs, rhs))
    return cases, bad

