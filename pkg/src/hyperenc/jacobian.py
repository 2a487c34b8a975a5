"""1-smooth reduced divisors on hyperelliptic curves built from encoder outputs.

A divisor is held as its list of affine points P_1..P_r, standing for
P_1 + ... + P_r - r P_inf.  No group law is implemented.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curves import CurvePoint, HyperellipticCurve
from .encoders import encode
from .exceptions import EmptyDivisor, NotEncodable


def negate_point(curve, p):
    """The hyperelliptic involution (x, y) -> (x, -y)."""
    if p.is_infinity:
        return p
    return CurvePoint(p.x, -p.y)


@dataclass(frozen=True)
class ReducedDivisor:
    curve: HyperellipticCurve
    points: tuple

    @property
    def r(self):
        return len(self.points)

    def is_valid(self):
        """r <= g, every point rational and on the curve, and no point is the negation of another."""
        if not 0 < self.r <= self.curve.genus:
            return False
        for i, p in enumerate(self.points):
            if p.is_infinity or not self.curve.is_on_curve(p):
                return False
            neg = negate_point(self.curve, p)
            if any(neg == o for j, o in enumerate(self.points) if j != i):
                return False
        return True

    def to_dict(self):
        return {"points": [p.to_dict() for p in self.points], "r": self.r}


def encode_smooth_divisor(curve, seeds, g=None):
    """Encode seeds in order and keep up to g points, dropping any whose negation is already kept.

    Unencodable seeds are skipped.  Fewer than g points is a valid result;
    no points at all raises EmptyDivisor.
    """
    if not isinstance(curve, HyperellipticCurve):
        raise TypeError(f"{curve.family} is not a hyperelliptic family")
    g = curve.genus if g is None else g
    if not 1 <= g <= curve.genus:
        raise ValueError(f"g must lie in [1, {curve.genus}], got {g}")
    kept = []
    keys = set()
    for t in seeds:
        if len(kept) == g:
            break
        try:
            p = encode(curve, t)
        except NotEncodable:
            continue
        # A y=0 point is its own negation, so it is admitted at most once.
        if negate_point(curve, p).key() in keys:
            continue
        kept.append(p)
        keys.add(p.key())
    if not kept:
        raise EmptyDivisor("no seed produced an acceptable point")
    return ReducedDivisor(curve, tuple(kept))
