import random

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Poly, symbols
from sympy.polys.subresultants_qq_zz import sylvester

from helpers import brute_roots
from hyperenc import poly

X = symbols("x")
small_primes = st.sampled_from((5, 7, 11, 13, 17, 23, 53, 101))


def coeffs(max_deg=8):
    return st.lists(st.integers(min_value=-1000, max_value=1000), min_size=1, max_size=max_deg + 1)


def sym(f, q):
    return Poly(list(reversed(f)) or [0], X)


@given(small_primes, coeffs())
def test_roots_match_brute_force(q, f):
    f = poly.normalize(f, q)
    if poly.degree(f) < 0:
        with pytest.raises(ValueError):
            poly.roots(f, q)
        return
    assert poly.roots(f, q) == brute_roots(f, q)


@given(small_primes, coeffs(), coeffs())
def test_divmod_identity(q, f, g):
    g = poly.normalize(g, q)
    if not g:
        return
    quo, rem = poly.divmod_(f, g, q)
    assert poly.add(poly.mul(quo, g, q), rem, q) == poly.normalize(f, q)
    assert poly.degree(rem) < poly.degree(g)


@given(small_primes, coeffs(6), coeffs(6))
def test_resultant_is_the_sylvester_determinant(q, f, g):
    # sympy's own resultant() returns the wrong sign for e.g. (x + 1, x^3),
    # so the oracle is the Sylvester matrix itself.
    f, g = poly.normalize(f, q), poly.normalize(g, q)
    if poly.degree(f) < 1 or poly.degree(g) < 1:
        return
    S = sylvester(sym(f, q).as_expr(), sym(g, q).as_expr(), X)
    assert poly.resultant(f, g, q) == int(S.det()) % q


@given(st.sampled_from((5, 7, 11)), coeffs(12))
def test_discriminant_matches_sympy(q, f):
    # degrees up to 12 include q | deg f, where f' loses its leading term
    f = poly.normalize(f, q)
    if poly.degree(f) < 2:
        return
    assert poly.discriminant(f, q) == int(sym(f, q).discriminant()) % q


def test_discriminant_when_degree_is_a_multiple_of_q():
    # x^5 + x + 1 over F_5: f' = 1, so Res(f, f') = 1 but lc^(4 - 0) must be folded in
    f = [1, 1, 0, 0, 0, 3]
    assert poly.discriminant(f, 5) == int(sym(f, 5).discriminant()) % 5


def test_roots_of_split_polynomial_at_large_prime():
    q = 2**127 - 1
    rng = random.Random(1)
    want = sorted({rng.randrange(q) for _ in range(6)})
    f = [1]
    for r in want:
        f = poly.mul(f, [-r, 1], q)
    f = poly.mul(f, [1, 0, 1], q)   # x^2 + 1 is irreducible since q = 3 mod 4
    assert poly.roots(f, q) == want


def test_repeated_roots_reported_once():
    q = 13
    f = poly.mul(poly.mul([-2, 1], [-2, 1], q), [0, 1], q)
    assert poly.roots(f, q) == [0, 2]


def test_gcd_and_powmod():
    q = 11
    a = poly.mul([1, 1], [2, 1], q)
    b = poly.mul([1, 1], [3, 1], q)
    assert poly.gcd(a, b, q) == [1, 1]
    # Fermat: x^q = x mod (x^q - x) reduces to the identity on F_q
    m = [0, 1, 0, 0, 1]
    assert poly.powmod([0, 1], q ** 2, m, q) == poly.powmod(poly.powmod([0, 1], q, m, q), q, m, q)
