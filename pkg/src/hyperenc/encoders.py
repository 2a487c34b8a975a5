"""Deterministic encodings F_q -> curve points, and their preimage solvers.

Each family has a public ``*_encode(curve, t)`` returning a ``CurvePoint`` or
raising ``NotEncodable(stage)``.  ``stage`` names the denominator or condition
that failed, so the excluded set of a curve is exactly the set of ``t`` on which
the encoder raises.

Internally every encoder is an int -> (int, int) closure built once per curve
(``raw_encoder``) with all t-independent constants folded in; the census calls
these closures directly.

The only root extractions in the forward maps are cube roots and d-th roots
with gcd(d, q - 1) = 1, i.e. single exponentiations.  Square roots and
polynomial root finding appear only in the preimage solvers.
"""

from __future__ import annotations

from functools import lru_cache

from . import poly
from .curves import (
    CurvePoint,
    DeMoivreCurve,
    Genus2Type1Curve,
    Genus2Type2Curve,
    HessianCurve,
    QuasiQuadraticCurve,
)
from .exceptions import CapabilityMissing, DegenerateCurve, NoPreimage, NoRationalRoot, NoSquareRoot, NotEncodable
from .ffield import FieldElement


def _require_cube_roots(field):
    if not field.is_2_mod_3:
        raise CapabilityMissing(f"q={field.q} is not 2 mod 3")


def _as_int(field, t):
    if isinstance(t, FieldElement):
        if t.ctx != field:
            raise ValueError(f"t from F_{t.ctx.q} used over F_{field.q}")
        return t.value
    return int(t) % field.q


def _point(field, xy):
    return CurvePoint(FieldElement(xy[0], field), FieldElement(xy[1], field))


# --------------------------------------------------------------------------
# Icart's map onto y^2 = x^3 + A x + B
# --------------------------------------------------------------------------

def _icart(F, A, B, t):
    q = F.q
    if t == 0:
        raise NotEncodable("t=0")
    inv6t = F.inv(6 * t)
    t2 = t * t
    v = (3 * A - t2 * t2) * inv6t % q
    x = (F.cbrt((v * v - B - t2 * t2 * t2 * F.inv(27)) % q) + t2 * F.inv(3)) % q
    return x, (t * x + v) % q


def icart_encode(a, b, t):
    """Icart's point on y^2 = x^3 + a x + b for t != 0 (needs q = 2 mod 3)."""
    F = a.ctx
    _require_cube_roots(F)
    return _point(F, _icart(F, a.value, b.value, _as_int(F, t)))


def icart_preimages(a, b, p):
    """All t with icart_encode(a, b, t) == p: nonzero roots of t^4 - 6 x t^2 + 6 y t - 3a."""
    F = a.ctx
    q = F.q
    x, y = p.x.value, p.y.value
    cands = poly.roots([-3 * a.value, 6 * y, -6 * x, 0, 1], q)
    out = set()
    for t in cands:
        if t and _icart(F, a.value, b.value, t) == (x, y):
            out.add(FieldElement(t, F))
    return out


# --------------------------------------------------------------------------
# Hessian curves
# --------------------------------------------------------------------------

@lru_cache(maxsize=256)
def _hessian_raw(curve):
    F = curve.field
    _require_cube_roots(F)
    q = F.q
    d = curve.d.value
    cbrt = F.cbrt

    if curve.is_minus_two:
        def enc(t):
            if t == 0:
                raise NotEncodable("t=0")
            X = cbrt((t + t * t) % q)
            den = (X + t) % q
            if den == 0:
                raise NotEncodable("X+Y=0")
            inv = pow(den, -1, q)
            return (X + 1) * inv % q, (X - t - 1) * inv % q
        return enc

    a = curve.a.value
    k = (d * d + d + 1) % q
    e2 = 3 * (d + 2) ** 2 % q          # 3 (d+2)^2
    e3 = e2 * (d + 2) % q              # 3 (d+2)^3
    e1 = e2 * (d + 1) % q              # 3 (d+1)(d+2)^2
    half = 3 * a * F.inv(2) % q        # 3a/2
    neg_half = -half % q
    t_excl = (2 * d + 1) * (d * d + d + 7) * F.inv(18 * pow(d + 2, 3, q)) % q
    c27a2 = 27 * a * a % q
    c54a = (54 * a - 4) % q
    inv6 = F.inv(6)
    a3 = 3 * a

    def enc(t):
        if t == t_excl:
            raise NotEncodable("excluded t")
        if t == half or t == neg_half:
            X = Y = 0
        else:
            den = (36 * t + c54a) % q
            if den == 0:
                raise NotEncodable("36t+54a-4=0")
            Y = (12 * t * t - c27a2) * pow(den, -1, q) % q
            D = cbrt(36 * Y * (2 * t + a3) % q)
            if D == 0:
                raise NotEncodable("Delta=0")
            X = (D * inv6 + 2 * Y * pow(D, -1, q)) % q
        den = (e2 * X + k) % q
        if den == 0:
            raise NotEncodable("3(d+2)^2X+d^2+d+1=0")
        inv = pow(den, -1, q)
        x = e2 * (Y * (d + 2) + X) * inv % q
        y = -(e1 * X + e3 * Y + k) * inv % q
        return x, y
    return enc


def hessian_encode(curve, t):
    """Encode t onto x^3 + y^3 + 1 = 3dxy."""
    return _point(curve.field, _hessian_raw(curve)(_as_int(curve.field, t)))


def _hessian_inverse_map(curve, x, y):
    """(X, Y) on the auxiliary cubic that maps to (x, y) on E_d, or None."""
    F = curve.field
    q = F.q
    d = curve.d.value
    if curve.is_minus_two:
        # x (X + Y) = X + 1,  y (X + Y) = X - Y - 1
        m = ((x - 1, x), (y - 1, y + 1))
        rhs = (1, -1)
    else:
        k = d * d + d + 1
        e2 = 3 * (d + 2) ** 2
        m = ((e2 * (x - 1), -e2 * (d + 2)), (e2 * y + e2 * (d + 1), e2 * (d + 2)))
        rhs = (-x * k, -k * (1 + y))
    det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % q
    if det == 0:
        return None
    inv = pow(det, -1, q)
    X = (rhs[0] * m[1][1] - m[0][1] * rhs[1]) * inv % q
    Y = (m[0][0] * rhs[1] - rhs[0] * m[1][0]) * inv % q
    return X, Y


def hessian_preimages(curve, p):
    """All t with hessian_encode(curve, t) == p (at most 2 for d != -2, at most 1 for d = -2)."""
    if p.is_infinity or not curve.is_on_curve(p):
        return set()
    F = curve.field
    q = F.q
    enc = _hessian_raw(curve)
    target = (p.x.value, p.y.value)
    XY = _hessian_inverse_map(curve, *target)
    if XY is None:
        return set()
    X, Y = XY
    if curve.is_minus_two:
        cands = {Y}
    else:
        a = curve.a.value
        # Y (36t + 54a - 4) = 12 t^2 - 27 a^2, a quadratic in t
        c1 = -36 * Y
        c0 = -54 * Y * a - 27 * a * a + 4 * Y
        disc = (c1 * c1 - 48 * c0) % q
        cands = set()
        try:
            s = F.sqrt(disc)
            inv24 = F.inv(24)
            cands = {(-c1 + s) * inv24 % q, (-c1 - s) * inv24 % q}
        except NoSquareRoot:
            pass
        if Y == 0:
            half = 3 * a * F.inv(2) % q
            cands |= {half, -half % q}
    out = set()
    for t in cands:
        try:
            if enc(t) == target:
                out.add(FieldElement(t, F))
        except NotEncodable:
            pass
    return out


# --------------------------------------------------------------------------
# Genus 2, type 1:  y^2 = (x^3 + 3ax + 2)^2 + 8b x^3
# --------------------------------------------------------------------------

@lru_cache(maxsize=256)
def _type1_raw(curve):
    F = curve.field
    _require_cube_roots(F)
    q = F.q
    a, b = curve.a.value, curve.b.value
    if a == 0:
        # W vanishes identically on the Icart image
        raise DegenerateCurve("a=0")
    cbrt = F.cbrt
    B1 = b + 1
    a3 = a ** 3
    a6 = a3 * a3
    c = (-a6 + 2 * B1 * (2 * b - 1) * a3 - B1 ** 4) % q
    # delta(t) = -t^8 + d4 t^4 + d2 t^2 + d0
    d4 = (-12 * B1 * (2 * b - 1) * a3 + 6 * a6 + 6 * B1 ** 4) % q
    d2 = (12 * (2 * b - 5 * b * b - 2) * a6 - 8 * B1 ** 6 - 8 * a6 * a3
          + 24 * (2 * b - 1) * B1 ** 3 * a3) % q
    d0 = 3 * (a6 - 2 * B1 * (2 * b - 1) * a3 + B1 ** 4) ** 2 % q
    w0 = a * (B1 * B1 + a3) % q
    y0 = ((2 * b - 1) * a3 - B1 ** 3) % q
    inv6 = F.inv(6)
    a2 = a * a % q

    def enc(t):
        if t == 0:
            raise NotEncodable("t=0")
        t2 = t * t % q
        t4 = t2 * t2 % q
        delta = (-t4 * t4 + d4 * t4 + d2 * t2 + d0) % q
        inv_t = pow(t, -1, q)
        U = (cbrt(2 * delta * inv_t * inv_t % q) + 2 * t2) * inv6 % q
        V = (cbrt(2 * delta * t % q) + t2 * t + c * inv_t) * inv6 % q
        W = (-3 * U * a + w0) % q
        if W == 0:
            raise NotEncodable("W=0")
        inv_w = pow(W, -1, q)
        Y = (3 * B1 * U + y0) * inv_w % q
        Z = 3 * V * inv_w % q
        den = (a * Y + B1) % q
        if den == 0:
            raise NotEncodable("aY+b+1=0")
        T = (a2 * Y + a) * pow(den, -1, q) % q
        D = cbrt(T * (Z + Y) % q)
        if D == 0:
            raise NotEncodable("Delta=0")
        x = (D - T * pow(D, -1, q)) % q
        y = (-4 * a * Y + x * x * x + 3 * a * x - 2) % q
        return x, y
    return enc


def genus2_type1_encode(curve, t):
    return _point(curve.field, _type1_raw(curve)(_as_int(curve.field, t)))


def type1_auxiliary_curve(curve):
    """(A, B) of the Weierstrass curve V^2 = U^3 + A U + B whose Icart points drive type 1."""
    a, b = curve.a, curve.b
    B1 = b + 1
    a3 = a ** 3
    A = (-a3 * a3 + 2 * B1 * (2 * b - 1) * a3 - B1 ** 4) / 3
    B = (2 * a3 ** 3 + 3 * (2 - 2 * b + 5 * b * b) * a3 * a3
         - 6 * (2 * b - 1) * B1 ** 3 * a3 + 2 * B1 ** 6) / 27
    return A, B


# --------------------------------------------------------------------------
# Genus 2, type 2:  y^2 = lambda ((x^3 + 3 mu x + 2a)^2 + 4b)
# --------------------------------------------------------------------------

@lru_cache(maxsize=256)
def _type2_raw(curve):
    F = curve.field
    _require_cube_roots(F)
    q = F.q
    cbrt = F.cbrt
    lam, mu, a, v = (x.value for x in (curve.lam, curve.mu, curve.a, curve.v))
    if mu == 0:
        # Z = S identically, so no t is encodable
        raise DegenerateCurve("mu=0")
    u, b, z = curve.u.value, curve.b.value, curve.z.value
    mu3 = mu ** 3
    mu6 = mu3 * mu3
    a2 = a * a
    ab = a2 + b
    l2 = lam * lam

    # delta(t) = -t^8 + d4 t^4 + d2 t^2 + d0
    d4 = 2 ** 9 * 3 * (mu6 + (-b + 2 * a2) * mu3 + ab ** 2) * l2 % q
    d2 = 2 ** 14 * (-2 * mu6 * mu3 - (6 * a2 - 3 * b) * mu6 + 3 * ab * (b - 2 * a2) * mu3
                    - 2 * ab ** 3) * l2 * lam % q
    d0 = 2 ** 16 * 3 * (mu6 * mu6 + (-2 * b + 4 * a2) * mu6 * mu3 + (3 * b * b + 6 * a2 * a2) * mu6
                        + 2 * ab ** 2 * (-b + 2 * a2) * mu3 + ab ** 4) * l2 * l2 % q
    vc = 128 * (-mu6 + (b - 2 * a2) * mu3 - ab ** 2) * l2 * F.inv(3) % q

    z2 = z * z
    ua = u * a
    # W = -9 U^2 + w1 U + w0
    w1 = -48 * lam * (-3 * z2 - 2 * b + 6 * ua + 4 * a2 + 4 * mu3) % q
    w0 = 256 * (-4 * mu6 + (6 * z2 + a2 - 12 * ua + 4 * b) * mu3
                + ab * (5 * a2 + 6 * ua - b - 3 * z2)) * l2 % q
    # W Y = yU U + yV V + y0
    yU = -288 * v * (u + a) % q
    yV = -72 * z % q
    y0 = 1536 * lam * v * (b * u + a2 * a - 2 * mu3 * u + a * b + a * mu3 + u * a2) % q
    # -W^2 Z = sum of the terms below
    l3 = l2 * lam
    l4 = l2 * l2
    zU4 = -324 * z
    zU3 = 6912 * lam * mu3 * z + 1728 * lam * z * (-3 * z2 - 2 * b + 6 * ua + 4 * a2)
    zU2V = -2592 * v * (u + a)
    zU2 = (-27648 * l2 * z * ab * (2 * a2 + 6 * ua - 4 * b - 3 * z2) + 193536 * l2 * z * mu6
           - 27648 * l2 * z * (-5 * a2 - 12 * ua + 6 * z2 + 7 * b) * mu3)
    zUV = 27648 * lam * v * (-2 * u + a) * mu3 + 27648 * lam * v * ab * (u + a)
    zU = (49152 * l3 * z * (36 * a2 * a * u - 18 * a2 * z2 + 12 * a2 * a2 + 9 * z2 * b + 30 * b * b
                            - 12 * a2 * b - 18 * a * u * b) * mu3
          + 49152 * l3 * z * (-6 * b + 18 * ua + 12 * a2 - 9 * z2) * mu6
          + 49152 * l3 * z * ab ** 2 * (4 * a2 + 18 * ua - 14 * b - 9 * z2)
          + 196608 * l3 * mu6 * mu3 * z)
    zV = (-73728 * v * l2 * ab ** 2 * (u + a) - 73728 * v * l2 * (4 * u - 8 * a) * mu6
          - 73728 * v * l2 * (-4 * b * u + 9 * z2 * a - 7 * a2 * a - 13 * u * a2 + 2 * a * b) * mu3)
    z0 = (-7340032 * l4 * mu6 * mu6 * z
          - 262144 * l4 * z * (60 * ua - 56 * b + 85 * a2 - 30 * z2) * mu6 * mu3
          - 262144 * l4 * z * ab * (31 * a2 * a2 + 72 * a2 * a * u - 10 * a2 * b - 36 * a2 * z2
                                    + 18 * a * u * b + 13 * b * b - 9 * z2 * b) * mu3
          - 262144 * l4 * z * ab ** 3 * (a2 + 6 * ua - 5 * b - 3 * z2)
          - 262144 * l4 * z * (15 * b * b + 87 * a2 * a2 - 63 * a2 * z2 + 45 * z2 * b - 90 * a * u * b
                               - 33 * a2 * b + 126 * a2 * a * u) * mu6)
    zU4, zU3, zU2V, zU2, zUV, zU, zV, z0 = (c % q for c in (zU4, zU3, zU2V, zU2, zUV, zU, zV, z0))
    s2 = (a - u) * lam % q          # S = s2 Y^2 - 4 v Y + s0
    s0 = -4 * (a + u) % q
    inv2 = F.inv(2)
    inv6 = F.inv(6)
    three_mu = 3 * mu % q
    a_minus_u = (a - u) % q

    def enc(t):
        if t == 0:
            raise NotEncodable("t=0")
        t2 = t * t % q
        t4 = t2 * t2 % q
        delta = (-t4 * t4 + d4 * t4 + d2 * t2 + d0) % q
        inv_t = pow(t, -1, q)
        U = (cbrt(2 * delta * inv_t * inv_t % q) + 2 * t2) * inv6 % q
        V = (cbrt(2 * delta * t % q) * inv6 + t2 * t * inv6 + vc * inv_t) % q
        W = (-9 * U * U + w1 * U + w0) % q
        if W == 0:
            raise NotEncodable("W=0")
        inv_w = pow(W, -1, q)
        Y = (yU * U + yV * V + y0) * inv_w % q
        U2 = U * U % q
        Zn = (zU4 * U2 * U2 + zU3 * U2 * U + zU2V * U2 * V + zU2 * U2 + zUV * U * V
              + zU * U + zV * V + z0)
        Z = -Zn * inv_w * inv_w % q
        S = (s2 * Y * Y - 4 * v * Y + s0) % q
        den = (lam * Y * Y - 4) % q
        if den == 0:
            raise NotEncodable("lambda*Y^2-4=0")
        if (Z - S) % q == 0:
            raise NotEncodable("Z-S=0")
        D = cbrt((Z - S) * pow(den, -1, q) % q)
        x = (D - mu * pow(D, -1, q)) % q
        y = (lam * ((x * x * x + three_mu * x) * inv2 + a_minus_u) * Y - 2 * v) % q
        return x, y
    return enc


def genus2_type2_encode(curve, t):
    return _point(curve.field, _type2_raw(curve)(_as_int(curve.field, t)))


# --------------------------------------------------------------------------
# Quasiquadratic curves:  y^2 = x^(2d) + x^d + a
# --------------------------------------------------------------------------

@lru_cache(maxsize=256)
def _quasiquadratic_raw(curve):
    F = curve.field
    q = F.q
    e = F.root_exponent(curve.d)
    a = curve.a.value
    half = F.inv(2)

    def enc(t):
        if t == half:
            raise NotEncodable("t=1/2")
        inv = pow(1 - 2 * t, -1, q)
        alpha = (t * t - a) * inv % q
        return pow(alpha, e, q), (t - a - t * t) * inv % q
    return enc


def quasiquadratic_encode(curve, t):
    return _point(curve.field, _quasiquadratic_raw(curve)(_as_int(curve.field, t)))


def quasiquadratic_preimage(curve, p):
    """The unique t with quasiquadratic_encode(curve, t) == p.

    With alpha = x^d, the encoder gives alpha - y = -t, so t = y - x^d.
    """
    if p.is_infinity:
        raise NoPreimage("point at infinity")
    F = curve.field
    x, y = p.x.value, p.y.value
    t = (y - pow(x, curve.d, F.q)) % F.q
    try:
        if _quasiquadratic_raw(curve)(t) == (x, y):
            return FieldElement(t, F)
    except NotEncodable:
        pass
    raise NoPreimage(f"({x}, {y}) is not in the image")


# --------------------------------------------------------------------------
# De Moivre curves:  y^2 = p_{a,b}(x)
# --------------------------------------------------------------------------

def _demoivre_consts(curve):
    F = curve.field
    q = F.q
    a, b = curve.a.value, curve.b.value
    ad = pow(a, curve.d, q)
    # (alpha, y) lives on Y^2 = A^3 + P A + R
    P = (-ad - b * b * F.inv(3)) % q
    R = (2 * b ** 3 * F.inv(27) + ad * b * F.inv(3)) % q
    return ad, P, R


@lru_cache(maxsize=256)
def _demoivre_raw(curve):
    F = curve.field
    _require_cube_roots(F)
    q = F.q
    e = F.root_exponent(curve.d)
    b = curve.b.value
    if curve.a == 0:
        raise DegenerateCurve("a=0")
    ad, P, R = _demoivre_consts(curve)
    ad3 = 3 * ad % q

    def enc(t):
        A, Y = _icart(F, P, R, t)
        s = (b - 3 * A) % q
        if s == 0:
            raise NotEncodable("-3A+b=0")
        inv_s = pow(s, -1, q)
        alpha = ad3 * inv_s % q
        if alpha == 0:
            raise NotEncodable("alpha=0")
        y = -3 * Y * inv_s % q
        x = (pow(alpha, e, q) + pow(-ad * pow(alpha, -1, q) % q, e, q)) % q
        return x, y
    return enc


def demoivre_encode(curve, t):
    return _point(curve.field, _demoivre_raw(curve)(_as_int(curve.field, t)))


def demoivre_roots(curve, y):
    """The rational root x of p_{a,b}(x) = y^2 given by the quadratic resolvent.

    theta^2 + (b - y^2) theta - a^d has roots theta0, theta1 and
    x = theta0^(1/d) + theta1^(1/d).  With gcd(d, q - 1) = 1 that is the only
    root the resolvent yields over F_q.
    """
    F = curve.field
    q = F.q
    e = F.root_exponent(curve.d)
    yv = _as_int(F, y)
    ad = pow(curve.a.value, curve.d, q)
    B = (curve.b.value - yv * yv) % q
    try:
        s = F.sqrt(B * B + 4 * ad)
    except NoSquareRoot:
        raise NoRationalRoot(f"resolvent has no roots in F_{q} at y={yv}") from None
    inv2 = F.inv(2)
    th0 = (-B + s) * inv2 % q
    th1 = (-B - s) * inv2 % q
    return FieldElement(pow(th0, e, q) + pow(th1, e, q), F)


def demoivre_preimages(curve, p):
    """All t with demoivre_encode(curve, t) == p (at most 8).

    x = g - a/g with g^d = alpha, so g is a root of g^2 - x g - a.  Each root
    gives alpha = g^d, hence A = (b - 3a^d/alpha)/3 and Y = -y a^d/alpha, and
    t is a root of Icart's quartic for (A, Y).
    """
    if p.is_infinity or not curve.is_on_curve(p):
        return set()
    F = curve.field
    q = F.q
    x, y = p.x.value, p.y.value
    a, b = curve.a.value, curve.b.value
    ad, P, R = _demoivre_consts(curve)
    enc = _demoivre_raw(curve)
    out = set()
    for g in poly.roots([-a, -x, 1], q):
        alpha = pow(g, curve.d, q)
        if alpha == 0:
            continue
        s = 3 * ad * pow(alpha, -1, q) % q
        A = (b - s) * F.inv(3) % q
        Y = -y * s * F.inv(3) % q
        for t in poly.roots([-3 * P, 6 * Y, -6 * A, 0, 1], q):
            if t == 0:
                continue
            try:
                if enc(t) == (x, y):
                    out.add(FieldElement(t, F))
            except NotEncodable:
                pass
    return out


# --------------------------------------------------------------------------
# dispatch
# --------------------------------------------------------------------------

_RAW = {
    HessianCurve: _hessian_raw,
    Genus2Type1Curve: _type1_raw,
    Genus2Type2Curve: _type2_raw,
    QuasiQuadraticCurve: _quasiquadratic_raw,
    DeMoivreCurve: _demoivre_raw,
}


def raw_encoder(curve):
    """The int -> (int, int) encoder closure for ``curve`` (cached per curve)."""
    return _RAW[type(curve)](curve)


def encode(curve, t):
    """Encode ``t`` onto ``curve`` with the family's deterministic map."""
    return _point(curve.field, raw_encoder(curve)(_as_int(curve.field, t)))


def preimages(curve, p):
    """All t mapping to ``p``; available for the Hessian, quasiquadratic and De Moivre families."""
    if isinstance(curve, HessianCurve):
        return hessian_preimages(curve, p)
    if isinstance(curve, QuasiQuadraticCurve):
        try:
            return {quasiquadratic_preimage(curve, p)}
        except NoPreimage:
            return set()
    if isinstance(curve, DeMoivreCurve):
        return demoivre_preimages(curve, p)
    raise NotImplementedError(f"no preimage solver for {curve.family}")
