"""Hash-to-point by counter retry, and seed derivation for divisor encoding.

t_i = int_be(H(message || i)) mod q, with i a single counter byte.
"""

from __future__ import annotations

import hashlib

from .encoders import encode
from .exceptions import HashFailure, NotEncodable
from .jacobian import encode_smooth_divisor

MAX_ATTEMPTS = 256


def _digest_fn(name):
    try:
        h = hashlib.new(name)
    except (ValueError, TypeError):
        raise ValueError(f"unknown digest {name!r}") from None
    if h.digest_size == 0 or name.lower().startswith("shake"):
        raise ValueError(f"digest {name!r} has no fixed output length")
    return lambda data: hashlib.new(name, data).digest()


def hash_to_field(field, message, counter, digest="sha256"):
    if not 0 <= counter < MAX_ATTEMPTS:
        raise ValueError("counter must fit in one byte")
    h = _digest_fn(digest)(bytes(message) + bytes([counter]))
    return field(int.from_bytes(h, "big"))


def hash_to_point(curve, message, digest="sha256"):
    """Return (point, counter, t) for the first counter whose t is encodable."""
    for counter in range(MAX_ATTEMPTS):
        t = hash_to_field(curve.field, message, counter, digest)
        try:
            return encode(curve, t), counter, t
        except NotEncodable:
            continue
    raise HashFailure(f"no encodable t in {MAX_ATTEMPTS} attempts")


def derive_seeds(field, message, n, digest="sha256"):
    return [hash_to_field(field, message, i, digest) for i in range(n)]


def hash_to_divisor(curve, message, g=None, digest="sha256"):
    """Reduced divisor from g + 4 seeds derived from ``message``."""
    g = curve.genus if g is None else g
    seeds = derive_seeds(curve.field, message, g + 4, digest)
    return encode_smooth_divisor(curve, seeds, g)
