"""Exact integer, rational and Z/p^s arithmetic with p-adic utilities.

Everything here is built on Python's arbitrary-precision integers and
``fractions.Fraction``; values are immutable and all functions are pure,
so they are safe to use from multiple threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class NonIntegralError(ArithmeticError):
    """Raised when a rational cannot be reduced modulo p^a (p divides the denominator)."""


class NonUnitError(ArithmeticError):
    """Raised when an inversion is requested for a non-unit residue."""


# --------------------------------------------------------------------------
# primality / generators

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond desk-scale inputs."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # this witness set is deterministic for n < 3.3 * 10^24
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_odd_prime(n: int) -> bool:
    return n != 2 and is_prime(n)


def factorize(n: int) -> dict:
    """Prime factorization by trial division; fine for desk-scale n."""
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def find_generator(p: int) -> int:
    """Smallest generator of the multiplicative group of F_p (deterministic)."""
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    qs = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
    raise AssertionError("unreachable: F_p^x is cyclic")


# --------------------------------------------------------------------------
# parameter records

@dataclass(frozen=True)
class OmegaParam:
    """The rational exponent omega = r/q driving all superpotential exponents.

    Normalized to lowest terms on construction; requires 0 < r and 2r <= q.
    """

    r: int
    q: int

    def __post_init__(self):
        if self.r <= 0 or self.q <= 0:
            raise ValueError("r and q must be positive")
        if 2 * self.r > self.q:
            raise ValueError(f"need r/q <= 1/2, got {self.r}/{self.q}")
        g = math.gcd(self.r, self.q)
        if g > 1:
            object.__setattr__(self, "r", self.r // g)
            object.__setattr__(self, "q", self.q // g)

    @classmethod
    def coerce(cls, value) -> "OmegaParam":
        if isinstance(value, OmegaParam):
            return value
        if isinstance(value, Fraction):
            return cls(value.numerator, value.denominator)
        if isinstance(value, tuple) and len(value) == 2:
            return cls(*value)
        raise TypeError(f"cannot interpret {value!r} as an exponent parameter")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.r, self.q)


@dataclass(frozen=True)
class PrimeData:
    """An odd prime p = ell*q + 1 together with the working precision exponent s."""

    p: int
    s: int
    ell: int

    @classmethod
    def create(cls, p: int, s: int, omega: OmegaParam) -> "PrimeData":
        omega = OmegaParam.coerce(omega)
        if s < 1:
            raise ValueError("precision exponent s must be >= 1")
        if not is_odd_prime(p):
            raise ValueError(f"p must be an odd prime, got {p}")
        if (p - 1) % omega.q != 0:
            raise ValueError(f"p must satisfy p = 1 mod q, got p={p}, q={omega.q}")
        return cls(p, s, (p - 1) // omega.q)

    @property
    def modulus(self) -> int:
        return self.p ** self.s


class ResidueElem:
    """An element of Z/p^s.  Immutable; arithmetic stays in the ring."""

    __slots__ = ("value", "p", "s", "modulus")

    def __init__(self, value: int, p: int, s: int):
        self.p = p
        self.s = s
        self.modulus = p ** s
        self.value = value % self.modulus

    def _check(self, other):
        if not isinstance(other, ResidueElem):
            if isinstance(other, int):
                return ResidueElem(other, self.p, self.s)
            return NotImplemented
        if (other.p, other.s) != (self.p, self.s):
            raise ValueError("residue moduli differ")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ResidueElem(self.value + other.value, self.p, self.s)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ResidueElem(self.value - other.value, self.p, self.s)

    def __rsub__(self, other):
        return ResidueElem(other, self.p, self.s) - self

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return ResidueElem(self.value * other.value, self.p, self.s)

    __rmul__ = __mul__

    def __neg__(self):
        return ResidueElem(-self.value, self.p, self.s)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ResidueElem(pow(self.value, e, self.modulus), self.p, self.s)

    def is_unit(self) -> bool:
        return self.value % self.p != 0

    def inverse(self) -> "ResidueElem":
        if not self.is_unit():
            raise NonUnitError(f"{self.value} is not a unit mod {self.p}^{self.s}")
        return ResidueElem(pow(self.value, -1, self.modulus), self.p, self.s)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value == other % self.modulus
        return (isinstance(other, ResidueElem)
                and (self.value, self.p, self.s) == (other.value, other.p, other.s))

    def __hash__(self):
        return hash((self.value, self.p, self.s))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"ResidueElem({self.value} mod {self.p}^{self.s})"


# --------------------------------------------------------------------------
# operations

def pochhammer(x, d: int, step):
    """Rising product x(x+step)...(x+(d-1)step); empty product 1; inverted for d < 0.

    Works for any ring elements supporting mixed arithmetic with ints
    (Fraction, RatFun, ...).  For d < 0 a vanishing factor raises
    ZeroDivisionError.
    """
    if d >= 0:
        out = 1
        for i in range(d):
            out = out * (x + i * step)
        return out
    den = 1
    for i in range(1, -d + 1):
        den = den * (x - i * step)
    return 1 / den


def rational_binomial(a: Fraction, d: int) -> Fraction:
    """Generalized binomial coefficient a(a-1)...(a-d+1)/d! for d >= 0."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    a = Fraction(a)
    num = Fraction(1)
    for i in range(d):
        num *= a - i
    return num / math.factorial(d)


def teichmuller_lift(u: int, p: int, s: int) -> ResidueElem:
    """The unique lift t of u in Z/p^s with t^p = t (0 lifts to 0).

    Computed by Frobenius iteration t <- t^p; s-1 rounds reach the fixed
    point, we simply iterate until stable.
    """
    m = p ** s
    t = u % m
    while True:
        t2 = pow(t, p, m)
        if t2 == t:
            return ResidueElem(t, p, s)
        t = t2


def padic_valuation(x, p: int) -> int:
    """The exponent of p in x, for nonzero int or Fraction x."""
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("valuation of zero is undefined")
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def reduce_rational_mod(x, p: int, a: int) -> int:
    """Reduce a p-integral rational modulo p^a."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise NonIntegralError(f"{x} is not p-integral for p={p}")
    m = p ** a
    return x.numerator * pow(x.denominator, -1, m) % m
