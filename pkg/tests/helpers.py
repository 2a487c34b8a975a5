"""Shared constants and brute-force oracles for the test-suite."""

SMALL_PRIMES_2MOD3 = (5, 11, 17, 23, 29, 41, 47, 53)
# Smallest prime above 2^255 that is 2 mod 3.
P256 = 2**255 + 141


def brute_roots(f, q):
    """Roots of the ascending coefficient list f by trying every x."""
    return [x for x in range(q) if sum(c * pow(x, i, q) for i, c in enumerate(f)) % q == 0]


def brute_sqrt(x, q):
    return sorted(r for r in range(q) if r * r % q == x % q)


def on_weierstrass(a, b, x, y, q):
    return (y * y - x ** 3 - a * x - b) % q == 0
