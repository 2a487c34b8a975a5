import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import P256
from hyperenc.census import sample_curve
from hyperenc.curves import HessianCurve, QuasiQuadraticCurve
from hyperenc.encoders import encode
from hyperenc.exceptions import HashFailure, NotEncodable
from hyperenc.hashing import derive_seeds, hash_to_divisor, hash_to_field, hash_to_point

FAMILIES = ("hessian", "genus2type1", "genus2type2", "quasiquadratic", "demoivre")


def test_hash_to_field_definition():
    import hashlib
    c = HessianCurve(P256, 7)
    t = hash_to_field(c.field, b"abc", 3)
    assert t.value == int.from_bytes(hashlib.sha256(b"abc\x03").digest(), "big") % P256
    with pytest.raises(ValueError):
        hash_to_field(c.field, b"abc", 256)


@settings(max_examples=1000)
@given(st.sampled_from(FAMILIES), st.sampled_from((11, 17, 23, P256)), st.binary(max_size=64))
def test_hashed_points_are_on_curve(family, q, message):
    d = 7 if family == "demoivre" and q % 5 == 1 else None
    c = sample_curve(family, q, random.Random(q), d=d)
    p, counter, t = hash_to_point(c, message)
    assert c.is_on_curve(p)
    assert hash_to_point(c, message) == (p, counter, t)


def test_counter_advances_only_past_excluded_t():
    c = HessianCurve(11, 4)
    seen_retry = False
    for i in range(2000):
        m = b"msg%d" % i
        _, counter, _ = hash_to_point(c, m)
        for j in range(counter):
            with pytest.raises(NotEncodable):
                encode(c, hash_to_field(c.field, m, j))
        seen_retry |= counter > 0
    assert seen_retry


def test_hash_failure_when_every_counter_fails(monkeypatch):
    import hyperenc.hashing as hashing

    def never(curve, t):
        raise NotEncodable("forced")
    monkeypatch.setattr(hashing, "encode", never)
    with pytest.raises(HashFailure):
        hash_to_point(HessianCurve(11, 4), b"x")


def test_divisor_uses_g_plus_four_seeds():
    c = QuasiQuadraticCurve(41, 3, 5)
    div = hash_to_divisor(c, b"hello")
    seeds = derive_seeds(c.field, b"hello", c.genus + 4)
    assert len(seeds) == 6
    assert div.is_valid()
    assert div.points[0] == _first_point(c, seeds)


def _first_point(c, seeds):
    for t in seeds:
        try:
            return encode(c, t)
        except NotEncodable:
            pass
