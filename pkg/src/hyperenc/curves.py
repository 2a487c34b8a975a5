"""Curve families with deterministic encodings, their validation and membership tests.

Five families are supported:

* ``HessianCurve``         x^3 + y^3 + 1 = 3 d x y
* ``Genus2Type1Curve``     y^2 = (x^3 + 3 a x + 2)^2 + 8 b x^3
* ``Genus2Type2Curve``     y^2 = lambda ((x^3 + 3 mu x + 2 a)^2 + 4 b)
* ``QuasiQuadraticCurve``  y^2 = x^(2d) + x^d + a
* ``DeMoivreCurve``        y^2 = D_d(x, -a) + b   (Dickson-type polynomial, see below)

Constructing a curve validates it; an invalid parameter set raises
``DegenerateCurve`` naming the violated condition.  Curves are immutable and
hashable, so per-curve constants can be cached by the encoders.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb

from . import poly
from .exceptions import DegenerateCurve, FieldError, FieldMismatch
from .ffield import FieldCtx, FieldElement, make_field, to_hex

FAMILIES = ("hessian", "genus2type1", "genus2type2", "quasiquadratic", "demoivre")


@dataclass(frozen=True)
class CurvePoint:
    """An affine point (x, y), or the point at infinity when both are None."""

    x: FieldElement | None = None
    y: FieldElement | None = None

    @classmethod
    def infinity(cls):
        return cls()

    @classmethod
    def affine(cls, x, y):
        return cls(x, y)

    @property
    def is_infinity(self):
        return self.x is None

    def key(self):
        """Canonical (x, y) integer pair used for image counting and sorting."""
        return (-1, -1) if self.is_infinity else (self.x.value, self.y.value)

    def to_dict(self):
        if self.is_infinity:
            return {"infinity": True}
        return {"x": self.x.hex(), "y": self.y.hex()}

    @classmethod
    def from_dict(cls, field, doc):
        if doc.get("infinity"):
            return cls.infinity()
        return cls(field.from_hex(doc["x"]), field.from_hex(doc["y"]))


def _elem(field, v):
    if isinstance(v, FieldElement):
        if v.ctx != field:
            raise FieldMismatch(f"parameter from F_{v.ctx.q} used over F_{field.q}")
        return v
    return FieldElement(v, field)


def _field(field):
    return field if isinstance(field, FieldCtx) else make_field(field)


class Curve:
    """Common behaviour; subclasses fill in the equation and parameters."""

    family: str
    genus: int
    field: FieldCtx

    @property
    def q(self):
        return self.field.q

    def point(self, x, y):
        return CurvePoint(_elem(self.field, x), _elem(self.field, y))

    def is_on_curve(self, p):
        if p.is_infinity:
            return True
        if p.x.ctx != self.field or p.y.ctx != self.field:
            return False
        return self._satisfies(p.x.value, p.y.value)

    def _satisfies(self, x, y):
        raise NotImplementedError

    def params(self):
        """Ordered parameter dict in document form (hex field elements, int degrees)."""
        raise NotImplementedError

    def to_dict(self):
        doc = {"family": self.family, "q": str(self.q)}
        doc.update(self.params())
        return doc


class HyperellipticCurve(Curve):
    """A curve y^2 = f(x); ``f`` is the dense ascending coefficient list of ints mod q."""

    f: tuple

    def _satisfies(self, x, y):
        q = self.q
        return (y * y - poly.evaluate(self.f, x, q)) % q == 0

    def rhs(self, x):
        return FieldElement(poly.evaluate(self.f, int(x), self.q), self.field)

    def discriminant(self):
        return FieldElement(poly.discriminant(list(self.f), self.q), self.field)


@dataclass(frozen=True, eq=True)
class HessianCurve(Curve):
    """E_d : x^3 + y^3 + 1 = 3 d x y with d != 1.

    For d != -2 the curve is birational to Y^2 + X Y + a Y = X^3 with
    a = (d^2 + d + 1) / (3 (d + 2)^3); at d = -2 that ``a`` is undefined and
    ``a`` is None.
    """

    field: FieldCtx
    d: FieldElement

    family = "hessian"
    genus = 1

    def __init__(self, field, d):
        field = _field(field)
        d = _elem(field, d)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "d", d)
        if d == 1:
            raise DegenerateCurve("d=1")
        if not self.is_minus_two:
            a = self.a
            if a == 0:
                raise DegenerateCurve("a=0")
            if a * 27 == 1:
                raise DegenerateCurve("a=1/27")

    @property
    def is_minus_two(self):
        return self.d == -2

    @cached_property
    def a(self):
        if self.is_minus_two:
            return None
        d = self.d
        return (d * d + d + 1) / (3 * (d + 2) ** 3)

    def _satisfies(self, x, y):
        q = self.q
        return (x * x * x + y * y * y + 1 - 3 * self.d.value * x * y) % q == 0

    def params(self):
        return {"d": self.d.hex()}


def type1_degeneracy(a, b):
    """4a^6 b^3 - b^3 (b^2 + 20b - 8) a^3 + 4 b^3 (b + 1)^3; J10 / (2^28 3^6)."""
    a3 = a ** 3
    b3 = b ** 3
    return 4 * a3 * a3 * b3 - b3 * (b * b + 20 * b - 8) * a3 + 4 * b3 * (b + 1) ** 3


@dataclass(frozen=True, eq=True)
class Genus2Type1Curve(HyperellipticCurve):
    """H_{1,a,b} : y^2 = (x^3 + 3 a x + 2)^2 + 8 b x^3."""

    field: FieldCtx
    a: FieldElement
    b: FieldElement

    family = "genus2type1"
    genus = 2

    def __init__(self, field, a, b):
        field = _field(field)
        a, b = _elem(field, a), _elem(field, b)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if type1_degeneracy(a, b) == 0:
            raise DegenerateCurve("zero discriminant")

    @cached_property
    def f(self):
        a, b, q = self.a.value, self.b.value, self.q
        # (x^3 + 3ax + 2)^2 + 8b x^3
        return tuple(c % q for c in (4, 12 * a, 9 * a * a, 4 + 8 * b, 6 * a, 0, 1))

    def params(self):
        return {"a": self.a.hex(), "b": self.b.hex()}


def type2_degeneracy(lam, mu, a, b):
    """b^3 lambda^10 (mu^6 + 2 mu^3 a^2 - 2 b mu^3 + a^4 + 2 b a^2 + b^2)."""
    mu3 = mu ** 3
    return b ** 3 * lam ** 10 * (mu3 * mu3 + 2 * mu3 * a * a - 2 * b * mu3 + a ** 4 + 2 * b * a * a + b * b)


@dataclass(frozen=True, eq=True)
class Genus2Type2Curve(HyperellipticCurve):
    """H_{2,lambda,mu,a,v,w} : y^2 = lambda ((x^3 + 3 mu x + 2 a)^2 + 4 b).

    Derived: u = mu^3/(2w) - w/2 - a,  b = v^2/lambda - u^2,  z = (w^2 + mu^3)/(2w),
    so that (u + a)^2 + mu^3 = z^2.
    """

    field: FieldCtx
    lam: FieldElement
    mu: FieldElement
    a: FieldElement
    v: FieldElement
    w: FieldElement

    family = "genus2type2"
    genus = 2

    def __init__(self, field, lam, mu, a, v, w):
        field = _field(field)
        vals = [_elem(field, x) for x in (lam, mu, a, v, w)]
        object.__setattr__(self, "field", field)
        for name, val in zip(("lam", "mu", "a", "v", "w"), vals):
            object.__setattr__(self, name, val)
        if self.w == 0:
            raise DegenerateCurve("w=0")
        if self.lam == 0:
            raise DegenerateCurve("lambda=0")
        if type2_degeneracy(self.lam, self.mu, self.a, self.b) == 0:
            raise DegenerateCurve("zero discriminant")
        if (self.u + self.a) ** 2 + self.mu ** 3 != self.z ** 2:
            raise DegenerateCurve("inconsistent derived parameters")

    @cached_property
    def u(self):
        return self.mu ** 3 / (2 * self.w) - self.w / 2 - self.a

    @cached_property
    def b(self):
        return self.v ** 2 / self.lam - self.u ** 2

    @cached_property
    def z(self):
        return (self.w ** 2 + self.mu ** 3) / (2 * self.w)

    @cached_property
    def f(self):
        lam, mu, a, b, q = self.lam.value, self.mu.value, self.a.value, self.b.value, self.q
        # lambda * ((x^3 + 3 mu x + 2a)^2 + 4b)
        base = (4 * a * a + 4 * b, 12 * mu * a, 9 * mu * mu, 4 * a, 6 * mu, 0, 1)
        return tuple(lam * c % q for c in base)

    def params(self):
        return {"lambda": self.lam.hex(), "mu": self.mu.hex(), "a": self.a.hex(),
                "v": self.v.hex(), "w": self.w.hex()}


@dataclass(frozen=True, eq=True)
class QuasiQuadraticCurve(HyperellipticCurve):
    """H_a : y^2 = x^(2d) + x^d + a, genus d - 1.

    x^(2d) + x^d + a = (x^d - z0)(x^d - z1) with z0 + z1 = -1, z0 z1 = a, so for
    d prime to the characteristic the roots are distinct iff a (1 - 4a) != 0.
    """

    field: FieldCtx
    d: int
    a: FieldElement

    family = "quasiquadratic"

    def __init__(self, field, d, a):
        field = _field(field)
        d = int(d)
        a = _elem(field, a)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "a", a)
        if d < 2:
            raise DegenerateCurve("d must be >= 2")
        if d % field.q == 0:
            raise DegenerateCurve("d divisible by the characteristic")
        if a == 0 or 1 - 4 * a == 0:
            raise DegenerateCurve("zero discriminant")

    @property
    def genus(self):
        return self.d - 1

    @cached_property
    def f(self):
        c = [0] * (2 * self.d + 1)
        c[0] = self.a.value
        c[self.d] = 1
        c[2 * self.d] = 1
        return tuple(c)

    def params(self):
        return {"d": self.d, "a": self.a.hex()}


def demoivre_coefficients(d, a, b):
    """Ascending coefficients of x^d + sum_k c_k a^k x^(d-2k) + b.

    c_k = d/(d-k) * C(d-k, k), the coefficients of the polynomial satisfied by
    x = g - a/g whenever g^d is a root of theta^2 + b theta - a^d.  For d = 3, 5, 7
    this is the familiar d, (d, d a^2), (7, 14, 7) pattern.
    """
    d = int(d)
    if d < 3 or d % 2 == 0:
        raise ValueError(f"De Moivre degree must be odd and >= 3, got {d}")
    field = a.ctx if isinstance(a, FieldElement) else None
    coeffs = [0] * (d + 1)
    coeffs[d] = 1
    coeffs[0] = b
    for k in range(1, (d - 1) // 2 + 1):
        coeffs[d - 2 * k] = (d * comb(d - k, k) // (d - k)) * a ** k
    if field is not None:
        coeffs = [_elem(field, c) for c in coeffs]
    return coeffs


@dataclass(frozen=True, eq=True)
class DeMoivreCurve(HyperellipticCurve):
    """H_{a,b} : y^2 = p_{a,b}(x), p of odd degree d with nonzero discriminant; genus (d-1)/2."""

    field: FieldCtx
    d: int
    a: FieldElement
    b: FieldElement

    family = "demoivre"

    def __init__(self, field, d, a, b):
        field = _field(field)
        d = int(d)
        a, b = _elem(field, a), _elem(field, b)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if d < 3 or d % 2 == 0:
            raise DegenerateCurve("d must be odd and >= 3")
        if d % field.q == 0:
            raise DegenerateCurve("d divisible by the characteristic")
        if self.discriminant() == 0:
            raise DegenerateCurve("zero discriminant")

    @property
    def genus(self):
        return (self.d - 1) // 2

    @cached_property
    def f(self):
        return tuple(int(c) for c in demoivre_coefficients(self.d, self.a, self.b))

    def params(self):
        return {"d": self.d, "a": self.a.hex(), "b": self.b.hex()}


_PARAM_KEYS = {
    "hessian": (HessianCurve, ("d",)),
    "genus2type1": (Genus2Type1Curve, ("a", "b")),
    "genus2type2": (Genus2Type2Curve, ("lambda", "mu", "a", "v", "w")),
    "quasiquadratic": (QuasiQuadraticCurve, ("d", "a")),
    "demoivre": (DeMoivreCurve, ("d", "a", "b")),
}

# Parameters that are integer degrees rather than field elements.
_INT_PARAMS = {"quasiquadratic": {"d"}, "demoivre": {"d"}}


def make_curve(family, q, **params):
    """Validate raw parameters (ints or FieldElements) into a curve of ``family``."""
    try:
        cls, keys = _PARAM_KEYS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}") from None
    missing = [k for k in keys if k not in params]
    extra = [k for k in params if k not in keys]
    if missing or extra:
        raise ValueError(f"{family}: missing {missing}, unexpected {extra}")
    return cls(_field(q), *(params[k] for k in keys))


def curve_from_dict(doc):
    """Parse and validate a curve-spec document (see ``Curve.to_dict``)."""
    if not isinstance(doc, dict):
        raise ValueError("curve spec must be a JSON object")
    family = doc.get("family")
    if family not in _PARAM_KEYS:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    q_text = doc.get("q")
    if not isinstance(q_text, str) or not q_text.isdigit():
        raise FieldError(f"q must be a decimal string, got {q_text!r}")
    field = make_field(int(q_text))
    _, keys = _PARAM_KEYS[family]
    params = {}
    for k in keys:
        if k not in doc:
            raise ValueError(f"{family}: missing parameter {k!r}")
        if k in _INT_PARAMS.get(family, ()):
            if isinstance(doc[k], bool) or not isinstance(doc[k], int):
                raise ValueError(f"{family}: {k} must be an integer")
            params[k] = doc[k]
        else:
            params[k] = field.from_hex(doc[k])
    extra = set(doc) - set(keys) - {"family", "q"}
    if extra:
        raise ValueError(f"{family}: unexpected keys {sorted(extra)}")
    return make_curve(family, field, **params)


def validate(family, q, **params):
    """Alias of ``make_curve``: returns the validated curve or raises DegenerateCurve."""
    return make_curve(family, q, **params)


def is_on_curve(curve, p):
    return curve.is_on_curve(p)


__all__ = [
    "FAMILIES", "CurvePoint", "Curve", "HyperellipticCurve", "HessianCurve",
    "Genus2Type1Curve", "Genus2Type2Curve", "QuasiQuadraticCurve", "DeMoivreCurve",
    "demoivre_coefficients", "type1_degeneracy", "type2_degeneracy", "make_curve",
    "curve_from_dict", "validate", "is_on_curve", "to_hex",
]
