"""Dense univariate polynomials over F_q, coefficient lists in ascending degree.

Only what the preimage solvers and discriminant checks need: Euclidean
arithmetic, resultants, and distinct-root extraction by Cantor-Zassenhaus.
"""

from __future__ import annotations

import random


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def normalize(f, q):
    return trim(c % q for c in f)


def degree(f):
    return len(f) - 1 if f else -1


def evaluate(f, x, q):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % q
    return acc


def add(f, g, q):
    n = max(len(f), len(g))
    return trim(((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % q for i in range(n))


def sub(f, g, q):
    n = max(len(f), len(g))
    return trim(((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % q for i in range(n))


def mul(f, g, q):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return normalize(out, q)


def divmod_(f, g, q):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = normalize(f, q)
    dg = degree(g)
    inv_lc = pow(g[-1], -1, q)
    quot = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        shift = len(f) - 1 - dg
        c = f[-1] * inv_lc % q
        quot[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % q
        f = trim(f)
    return trim(quot), f


def mod(f, g, q):
    return divmod_(f, g, q)[1]


def monic(f, q):
    if not f:
        return []
    inv_lc = pow(f[-1], -1, q)
    return [c * inv_lc % q for c in f]


def gcd(f, g, q):
    f, g = normalize(f, q), normalize(g, q)
    while g:
        f, g = g, mod(f, g, q)
    return monic(f, q)


def powmod(f, e, m, q):
    result = [1]
    base = mod(f, m, q)
    while e:
        if e & 1:
            result = mod(mul(result, base, q), m, q)
        base = mod(mul(base, base, q), m, q)
        e >>= 1
    return result


def derivative(f, q):
    return normalize((i * c for i, c in enumerate(f)), q)[1:] if len(f) > 1 else []


def resultant(f, g, q):
    """Res(f, g) over F_q by the Euclidean remainder sequence."""
    f, g = normalize(f, q), normalize(g, q)
    if not f or not g:
        return 0
    res = 1
    while True:
        df, dg = degree(f), degree(g)
        if dg == 0:
            return res * pow(g[0], df, q) % q
        r = mod(f, g, q)
        if not r:
            return 0
        dr = degree(r)
        # Res(f, g) = (-1)^(df*dg) * lc(g)^(df - dr) * Res(g, r)
        if (df * dg) % 2:
            res = -res
        res = res * pow(g[-1], df - dr, q) % q
        f, g = g, r


def discriminant(f, q):
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    f = normalize(f, q)
    n = degree(f)
    if n < 1:
        raise ValueError("discriminant of a constant")
    df = derivative(f, q)
    r = resultant(f, df, q)
    # f' has formal degree n - 1; when q | n it drops, costing lc(f)^(n-1-deg f').
    if df:
        r = r * pow(f[-1], n - 1 - degree(df), q)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r * pow(f[-1], -1, q) % q


def _split(g, q, rng, out):
    """Append the roots of ``g`` (monic, squarefree, splitting into linear factors)."""
    d = degree(g)
    if d == 0:
        return
    if d == 1:
        out.append(-g[0] % q)
        return
    half = (q - 1) // 2
    while True:
        a = rng.randrange(q)
        h = sub(powmod([a, 1], half, g, q), [1], q)
        h = gcd(g, h, q)
        if 0 < degree(h) < d:
            _split(h, q, rng, out)
            _split(divmod_(g, h, q)[0], q, rng, out)
            return


def roots(f, q, rng=None):
    """Sorted list of the distinct roots of ``f`` in F_q (q an odd prime)."""
    f = normalize(f, q)
    if not f:
        raise ValueError("every element is a root of the zero polynomial")
    if degree(f) <= 0:
        return []
    f = monic(f, q)
    # gcd with x^q - x keeps exactly the product of the distinct linear factors.
    xq = powmod([0, 1], q, f, q)
    g = gcd(f, sub(xq, [0, 1], q), q)
    out = []
    if degree(g) > 0:
        if g[0] == 0:
            out.append(0)
            g = divmod_(g, [0, 1], q)[0]
        _split(g, q, rng or random.Random(0x5EED), out)
    return sorted(out)
