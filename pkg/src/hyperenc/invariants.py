"""j-invariants of Hessian curves and Igusa invariants of the genus-2 families.

Every function here evaluates a fixed polynomial (or rational) expression in
the curve parameters, so they accept either a curve object or bare field
elements.  Igusa tuples are returned in the order (J2, J4, J6, J8, J10).
"""

from __future__ import annotations

from .curves import DeMoivreCurve, Genus2Type1Curve, Genus2Type2Curve, HessianCurve
from .exceptions import Undefined


def hessian_j_invariant(d):
    """j(E_d) = 27 d^3 (d+2)^3 (d^2 - 2d + 4)^3 / ((d-1)^3 (d^2+d+1)^3)."""
    if isinstance(d, HessianCurve):
        d = d.d
    den = ((d - 1) * (d * d + d + 1)) ** 3
    if den == 0:
        raise Undefined(f"j-invariant undefined at d={d}")
    return 27 * (d * (d + 2) * (d * d - 2 * d + 4)) ** 3 / den


def igusa_type1(a, b=None):
    """Igusa invariants of y^2 = (x^3 + 3ax + 2)^2 + 8 b x^3."""
    if isinstance(a, Genus2Type1Curve):
        a, b = a.a, a.b
    a3 = a ** 3
    a6 = a3 * a3
    b2 = b * b
    J2 = 2 ** 6 * 3 * (-9 * a3 + 4 * b2 + 4 * b - 9)
    J4 = 2 ** 10 * 3 * (-9 * b * (4 * b - 15) * a3 + 4 * b * (b + 1) * (2 * b2 + 2 * b - 27))
    J6 = 2 ** 14 * (729 * a6 * b2 - 216 * b2 * (2 * b2 + 3 * b + 21) * a3
                     + 16 * b2 * (4 * b2 + 4 * b + 81) * (b + 1) ** 2)
    J8 = 2 ** 18 * 3 * (-6561 * a6 * a3 * b2
                        + 2916 * b2 * (b2 + 13 * b - 7) * a6
                        - 144 * b2 * (4 * b ** 4 + 63 * b ** 3 + 450 * b2 - 149 * b - 810) * a3
                        + 64 * b2 * (b ** 4 + 2 * b ** 3 + 154 * b2 + 153 * b - 729) * (b + 1) ** 2)
    J10 = 2 ** 28 * 3 ** 6 * (4 * a6 * b ** 3 - b ** 3 * (b2 + 20 * b - 8) * a3 + 4 * b ** 3 * (b + 1) ** 3)
    return J2, J4, J6, J8, J10


def igusa_type2(lam, mu=None, a=None, b=None):
    """Igusa invariants of y^2 = lambda ((x^3 + 3 mu x + 2a)^2 + 4b).

    Pass a ``Genus2Type2Curve`` or the four values (lambda, mu, a, b); the
    curve's b is the derived one, v^2/lambda - u^2.
    """
    if isinstance(lam, Genus2Type2Curve):
        lam, mu, a, b = lam.lam, lam.mu, lam.a, lam.b
    mu3 = mu ** 3
    a2 = a * a
    l2 = lam * lam
    J2 = -(2 ** 6) * 3 * l2 * (9 * mu3 + 9 * a2 + 10 * b)
    J4 = 2 ** 9 * 3 * b * l2 ** 2 * (297 * mu3 + 54 * a2 + 55 * b)
    J6 = 2 ** 14 * b * b * l2 ** 3 * (-6480 * mu3 + 81 * a2 + 80 * b)
    J8 = -(2 ** 16) * 3 * b * b * l2 ** 4 * (31347 * mu3 * mu3 - 134136 * mu3 * a2 - 158310 * b * mu3
                                            + 11664 * a2 * a2 + 23940 * b * a2 + 12275 * b * b)
    J10 = -(2 ** 24) * 3 ** 6 * b ** 3 * l2 ** 5 * (mu3 * mu3 + 2 * mu3 * a2 - 2 * b * mu3
                                                   + a2 * a2 + 2 * b * a2 + b * b)
    return J2, J4, J6, J8, J10


# (coefficient, exponents of J2, J4, J6, J10) of the degree-30 relation
# satisfied by the Igusa invariants of every Type-2 curve.
TYPE2_LOCUS_TERMS = (
    (11852352, 5, 0, 0, 2),
    (196992, 5, 1, 1, 1),
    (-362998800, 3, 1, 0, 2),
    (64, 6, 0, 3, 0),
    (-636672, 4, 0, 2, 1),
    (-895349625, 2, 0, 1, 2),
    (-64097340625, 0, 0, 0, 3),
    (-373248, 4, 3, 0, 1),
    (-4466016, 3, 2, 1, 1),
    (2903657625, 1, 2, 0, 2),
    (-3984, 4, 1, 3, 0),
    (606810, 2, 1, 2, 1),
    (3383973750, 0, 1, 1, 2),
    (1647, 3, 0, 4, 0),
    (49583475, 1, 0, 3, 1),
    (11290752, 2, 4, 0, 1),
    (38072430, 1, 3, 1, 1),
    (76593, 2, 2, 3, 0),
    (-115457700, 0, 2, 2, 1),
    (20196, 1, 1, 4, 0),
    (-530604, 0, 0, 5, 0),
    (-85386312, 0, 5, 0, 1),
    (-468512, 0, 3, 3, 0),
)


def igusa_locus_residual(J):
    """Evaluate the degree-30 Type-2 locus polynomial at J = (J2, J4, J6, J8, J10).

    Zero exactly when J lies on the locus.  J8 does not appear.
    """
    J2, J4, J6, _J8, J10 = J
    total = 0
    for c, e2, e4, e6, e10 in TYPE2_LOCUS_TERMS:
        total = total + c * J2 ** e2 * J4 ** e4 * J6 ** e6 * J10 ** e10
    return total


def demoivre_igusa(a, b=None):
    """Igusa invariants of the genus-2 De Moivre curve y^2 = x^5 + 5a x^3 + 5a^2 x + b."""
    if isinstance(a, DeMoivreCurve):
        if a.d != 5:
            raise Undefined(f"Igusa invariants need genus 2 (d=5), got d={a.d}")
        a, b = a.a, a.b
    a5 = a ** 5
    J2 = 700 * a * a
    J4 = 13750 * a ** 4
    J6 = -2500 * a * (3 * a5 + 32 * b * b)
    J8 = -15625 * a ** 3 * (3109 * a5 + 896 * b * b)
    J10 = 800000 * (4 * a5 + b * b) ** 2
    return J2, J4, J6, J8, J10


def igusa(curve):
    """Dispatch to the family's Igusa formula."""
    if isinstance(curve, Genus2Type1Curve):
        return igusa_type1(curve)
    if isinstance(curve, Genus2Type2Curve):
        return igusa_type2(curve)
    if isinstance(curve, DeMoivreCurve):
        return demoivre_igusa(curve)
    raise Undefined(f"no Igusa formula for family {curve.family!r}")
