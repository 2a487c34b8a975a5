import random

import pytest

from hyperenc import poly
from hyperenc.census import hessian_j_census, sample_curve
from hyperenc.curves import DeMoivreCurve, Genus2Type1Curve, Genus2Type2Curve, HessianCurve, type1_degeneracy
from hyperenc.exceptions import Undefined
from hyperenc.ffield import make_field
from hyperenc.invariants import (
    demoivre_igusa,
    hessian_j_invariant,
    igusa,
    igusa_locus_residual,
    igusa_type1,
    igusa_type2,
)


def test_hessian_j_examples():
    assert hessian_j_invariant(HessianCurve(5, 0)) == 0
    assert hessian_j_invariant(HessianCurve(5, 2)) == 2
    assert hessian_j_invariant(HessianCurve(5, 4)) == 2
    F = make_field(7)
    with pytest.raises(Undefined):
        hessian_j_invariant(F(2))   # d^2 + d + 1 = 0 mod 7


@pytest.mark.parametrize("q", (5, 11, 17, 23, 29, 41))
def test_hessian_j_census_counts(q):
    assert len(hessian_j_census(q)) == q // 2


def test_hessian_j_census_anchor():
    assert hessian_j_census(5) == {0, 2}


def _curve_disc(curve):
    return poly.discriminant(list(curve.f), curve.q)


def _igusa_identities(curve, J):
    J2, J4, J6, J8, J10 = J
    assert J10 == 256 * _curve_disc(curve)
    assert 4 * J8 == J2 * J6 - J4 ** 2


def test_type1_identities_on_random_curves():
    rng = random.Random(7)
    for _ in range(20):
        c = sample_curve("genus2type1", 1009, rng)
        J = igusa_type1(c)
        _igusa_identities(c, J)
        assert J[4] == 2 ** 28 * 3 ** 6 * type1_degeneracy(c.a, c.b)


def test_type1_zero_parameters():
    F = make_field(1009)
    J = igusa_type1(F(0), F(0))
    assert J == (-(2 ** 6) * 3 ** 3 % 1009, 0, 0, 0, 0)


def test_type2_identities_and_locus():
    rng = random.Random(8)
    for q in (251, 1009):
        for _ in range(50):
            c = sample_curve("genus2type2", q, rng)
            J = igusa(c)
            _igusa_identities(c, J)
            assert igusa_locus_residual(J) == 0


def test_type2_b_zero():
    F = make_field(251)
    lam, mu, a = F(3), F(5), F(7)
    J = igusa_type2(lam, mu, a, F(0))
    assert J[1:] == (0, 0, 0, 0)
    assert J[0] == -(2 ** 6) * 3 * lam ** 2 * (9 * mu ** 3 + 9 * a ** 2)


def test_type1_curves_are_generally_off_the_type2_locus():
    rng = random.Random(9)
    residuals = [igusa_locus_residual(igusa(sample_curve("genus2type1", 1009, rng))) for _ in range(20)]
    assert any(r != 0 for r in residuals)


def test_locus_residual_examples():
    F = make_field(251)
    assert igusa_locus_residual((F(1), F(0), F(0), F(0), F(0))) == 0
    assert igusa_locus_residual((F(0), F(0), F(0), F(0), F(1))) == -64097340625 % 251


def test_demoivre_igusa():
    F = make_field(17)
    for a in range(1, 17):
        for b in range(17):
            try:
                c = DeMoivreCurve(F, 5, a, b)
            except Exception:
                continue
            _igusa_identities(c, demoivre_igusa(c))
    J = demoivre_igusa(F(0), F(3))
    assert J == (0, 0, 0, 0, 800000 * 3 ** 4 % 17)
    assert demoivre_igusa(F(1), F(0))[4] == 800000 * 16 % 17
    with pytest.raises(Undefined):
        demoivre_igusa(DeMoivreCurve(F, 7, 1, 1))


def test_igusa_dispatch_rejects_elliptic():
    with pytest.raises(Undefined):
        igusa(HessianCurve(5, 0))


def test_igusa_of_type1_direct_example():
    # a = b = 1 over F_11 by independent integer evaluation of the same closed forms
    a = b = 1
    want = (
        2 ** 6 * 3 * (-9 + 4 + 4 - 9),
        2 ** 10 * 3 * (-9 * (4 - 15) + 4 * 2 * (2 + 2 - 27)),
        2 ** 14 * (729 - 216 * 26 + 16 * 89 * 4),
        2 ** 18 * 3 * (-6561 + 2916 * 7 - 144 * (4 + 63 + 450 - 149 - 810) + 64 * (1 + 2 + 154 + 153 - 729) * 4),
        2 ** 28 * 3 ** 6 * (4 - 13 + 32),
    )
    F = make_field(11)
    assert igusa_type1(F(a), F(b)) == tuple(w % 11 for w in want)
    assert igusa(Genus2Type1Curve(11, 1, 1)) == tuple(w % 11 for w in want)


def test_genus2type2_curve_object_matches_bare_values():
    c = Genus2Type2Curve(251, 1, 1, 1, 2, 3)
    assert igusa_type2(c) == igusa_type2(c.lam, c.mu, c.a, c.b)
