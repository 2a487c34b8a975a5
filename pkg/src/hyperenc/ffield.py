"""Prime-field arithmetic with the deterministic root maps the encoders rely on.

Everything hot (the encoders, the census loops) works on plain Python ints
reduced modulo ``q`` and calls the ``FieldCtx`` helpers directly.  The
``FieldElement`` wrapper is the public, type-checked face of the same
arithmetic.

Example:
    >>> F = make_field(5)
    >>> F(2).cube_root()
    FieldElement(3, q=5)
    >>> F(1) / F(3)
    FieldElement(2, q=5)
"""

from __future__ import annotations

import random
import re
from functools import lru_cache
from math import gcd

from .exceptions import (
    CapabilityMissing,
    EvenModulus,
    FieldDivisionByZero,
    FieldError,
    FieldMismatch,
    NoSquareRoot,
    NotPrime,
)

# Deterministic for n < 3.3 * 10^24, which covers every n < 2^64.
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_ROUNDS = 64
_HEX_RE = re.compile(r"^(0x)?[0-9a-fA-F]+$")


def _mr_witness(n, a, d, s):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n, rounds=_MR_ROUNDS, rng=None):
    """Miller-Rabin: deterministic below 2^64, ``rounds`` random bases above."""
    if n < 2:
        return False
    for p in _MR_BASES_64:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        return not any(_mr_witness(n, a, d, s) for a in _MR_BASES_64)
    # Seeded so repeated checks of the same n agree.
    rng = rng or random.Random(n)
    return not any(_mr_witness(n, rng.randrange(2, n - 1), d, s) for _ in range(rounds))


class FieldCtx:
    """The prime field F_q together with its cached capability flags.

    Attributes:
        q: the odd prime modulus.
        is_2_mod_3: whether x -> x^3 is a bijection of F_q.
        cube_exp: 3^-1 mod (q - 1) when ``is_2_mod_3``, else None.
    """

    __slots__ = ("q", "is_2_mod_3", "cube_exp", "_root_exps", "_nonresidue")

    def __init__(self, q):
        q = int(q)
        if q % 2 == 0:
            raise EvenModulus(f"modulus {q} is even")
        if q < 5:
            raise FieldError(f"modulus must be >= 5, got {q}")
        if not is_probable_prime(q):
            raise NotPrime(f"modulus {q} is not prime")
        self.q = q
        self.is_2_mod_3 = q % 3 == 2
        self.cube_exp = pow(3, -1, q - 1) if self.is_2_mod_3 else None
        self._root_exps = {}
        if self.cube_exp is not None:
            self._root_exps[3] = self.cube_exp
        self._nonresidue = None

    def __repr__(self):
        return f"FieldCtx(q={self.q})"

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other.q == self.q

    def __hash__(self):
        return hash(("FieldCtx", self.q))

    def __reduce__(self):
        return (make_field, (self.q,))

    def __call__(self, value):
        return FieldElement(value, self)

    @property
    def zero(self):
        return FieldElement(0, self)

    @property
    def one(self):
        return FieldElement(1, self)

    def elements(self):
        return (FieldElement(v, self) for v in range(self.q))

    # -- capability queries -------------------------------------------------

    def has_root(self, d):
        return d > 0 and gcd(d, self.q - 1) == 1

    def root_exponent(self, d):
        """Return d^-1 mod (q - 1); raise CapabilityMissing if x -> x^d is not bijective."""
        e = self._root_exps.get(d)
        if e is None:
            if not self.has_root(d):
                raise CapabilityMissing(f"gcd({d}, q-1) != 1 for q={self.q}")
            e = self._root_exps[d] = pow(d, -1, self.q - 1)
        return e

    # -- integer-level kernels (inputs already reduced mod q) -----------------

    def inv(self, x):
        if x % self.q == 0:
            raise FieldDivisionByZero("inverse of zero")
        # pow(x, -1, q) runs the extended Euclidean algorithm.
        return pow(x, -1, self.q)

    def cbrt(self, x):
        if self.cube_exp is None:
            raise CapabilityMissing(f"q={self.q} is not 2 mod 3; cube roots are not unique")
        return pow(x, self.cube_exp, self.q)

    def root(self, x, d):
        return pow(x, self.root_exponent(d), self.q)

    def legendre(self, x):
        x %= self.q
        if x == 0:
            return 0
        return 1 if pow(x, (self.q - 1) // 2, self.q) == 1 else -1

    def nonresidue(self):
        if self._nonresidue is None:
            z = 2
            while self.legendre(z) != -1:
                z += 1
            self._nonresidue = z
        return self._nonresidue

    def sqrt(self, x):
        """Tonelli-Shanks square root; returns the root r with r <= q - r."""
        q = self.q
        x %= q
        if x == 0:
            return 0
        if self.legendre(x) != 1:
            raise NoSquareRoot(f"{x} is not a square mod {q}")
        if q % 4 == 3:
            r = pow(x, (q + 1) // 4, q)
        else:
            m, s = q - 1, 0
            while m % 2 == 0:
                m //= 2
                s += 1
            c = pow(self.nonresidue(), m, q)
            r = pow(x, (m + 1) // 2, q)
            t = pow(x, m, q)
            while t != 1:
                i, t2 = 0, t
                while t2 != 1:
                    t2 = t2 * t2 % q
                    i += 1
                b = pow(c, 1 << (s - i - 1), q)
                r = r * b % q
                c = b * b % q
                t = t * c % q
                s = i
        return min(r, q - r)

    # -- serialization --------------------------------------------------------

    def from_hex(self, text):
        """Parse a canonical field element: hex digits, value < q."""
        if not isinstance(text, str) or not _HEX_RE.match(text):
            raise FieldError(f"malformed hex field element: {text!r}")
        v = int(text, 16)
        if v >= self.q:
            raise FieldError(f"hex value {text} is not reduced mod {self.q}")
        return FieldElement(v, self)


@lru_cache(maxsize=None)
def make_field(q):
    """Build (or fetch the cached) FieldCtx for the odd prime ``q``."""
    return FieldCtx(q)


def to_hex(value):
    """Lowercase big-endian hex without leading zeros (zero is ``"0"``)."""
    return format(int(value), "x")


class FieldElement:
    """An element of F_q.  Plain ints are coerced into the field on mixed arithmetic."""

    __slots__ = ("value", "ctx")

    def __init__(self, value, ctx):
        if isinstance(value, FieldElement):
            if value.ctx != ctx:
                raise FieldMismatch(f"element of F_{value.ctx.q} used in F_{ctx.q}")
            value = value.value
        self.value = int(value) % ctx.q
        self.ctx = ctx

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx.q != self.ctx.q:
                raise FieldMismatch(f"F_{self.ctx.q} vs F_{other.ctx.q}")
            return other.value
        if isinstance(other, int):
            return other % self.ctx.q
        return NotImplemented

    def _new(self, v):
        return FieldElement(v, self.ctx)

    def __repr__(self):
        return f"FieldElement({self.value}, q={self.ctx.q})"

    def __str__(self):
        return str(self.value)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx.q == other.ctx.q and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.ctx.q
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.ctx.q))

    def __bool__(self):
        return self.value != 0

    def __neg__(self):
        return self._new(-self.value)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(self.value * self.ctx.inv(o))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(o * self.ctx.inv(self.value))

    def __pow__(self, n):
        if n < 0:
            return self._new(pow(self.ctx.inv(self.value), -n, self.ctx.q))
        return self._new(pow(self.value, n, self.ctx.q))

    def inverse(self):
        return self._new(self.ctx.inv(self.value))

    def cube_root(self):
        return self._new(self.ctx.cbrt(self.value))

    def nth_root(self, d):
        return self._new(self.ctx.root(self.value, d))

    def legendre(self):
        return self.ctx.legendre(self.value)

    def is_square(self):
        return self.legendre() >= 0

    def sqrt(self):
        return self._new(self.ctx.sqrt(self.value))

    def hex(self):
        return to_hex(self.value)


def arith(x, y, op):
    """Apply one of ``add``, ``sub``, ``mul``, ``div`` to two elements of one field."""
    if x.ctx != y.ctx:
        raise FieldMismatch(f"F_{x.ctx.q} vs F_{y.ctx.q}")
    try:
        fn = {"add": FieldElement.__add__, "sub": FieldElement.__sub__,
              "mul": FieldElement.__mul__, "div": FieldElement.__truediv__}[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(x, y)


def cube_root(x):
    return x.cube_root()


def nth_root(x, d):
    return x.nth_root(d)


def legendre(x):
    return x.legendre()


def sqrt(x):
    return x.sqrt()
