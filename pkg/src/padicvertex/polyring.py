"""Dense exact univariate polynomials, truncated power series, and rational functions.

Coefficients are Python ints or Fractions (exact ring, ``modulus=None``) or
integers reduced modulo m (``modulus=m``).  Dense storage is deliberate:
every polynomial in this project has desk-scale degree, and the congruence
checks want plain coefficient lists.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

NEG_INF = float("-inf")

_KARATSUBA_CUTOFF = 64
_INT64_GUARD = 2 ** 62


class PoleAtZeroError(ZeroDivisionError):
    """A rational function has a genuine pole at the evaluation point."""


def _trim(coeffs: list) -> list:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return coeffs[:n]


def _as_int(c) -> int:
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ValueError("non-integer coefficient in a Z/m polynomial; use reduce_mod")
        return c.numerator
    return int(c)


def _convolve(a: list, b: list, modulus):
    """Exact convolution; numpy int64 when provably overflow-free, else Karatsuba."""
    if not a or not b:
        return []
    if modulus is not None:
        a = [x % modulus for x in a]
        b = [x % modulus for x in b]
    if (all(isinstance(x, int) for x in a) and all(isinstance(x, int) for x in b)
            and len(a) >= 8 and len(b) >= 8):
        ma = max(1, max(abs(x) for x in a))
        mb = max(1, max(abs(x) for x in b))
        if ma * mb * min(len(a), len(b)) < _INT64_GUARD:
            out = np.convolve(np.array(a, dtype=np.int64),
                              np.array(b, dtype=np.int64)).tolist()
            if modulus is not None:
                out = [x % modulus for x in out]
            return out
    out = _mul_exact(a, b)
    if modulus is not None:
        out = [x % modulus for x in out]
    return out


def _mul_schoolbook(a: list, b: list) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _mul_exact(a: list, b: list) -> list:
    if min(len(a), len(b)) <= _KARATSUBA_CUTOFF:
        return _mul_schoolbook(a, b)
    h = min(len(a), len(b)) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _mul_exact(a0, b0)
    z2 = _mul_exact(a1, b1)
    s0 = [x + y for x, y in zip(a0, a1)] + list(a1[len(a0):] or a0[len(a1):])
    s1 = [x + y for x, y in zip(b0, b1)] + list(b1[len(b0):] or b0[len(b1):])
    z1 = _mul_exact(s0, s1)
    for i, v in enumerate(z0):
        z1[i] -= v
    for i, v in enumerate(z2):
        z1[i] -= v
    out = [0] * (len(a) + len(b) - 1)
    for i, v in enumerate(z0):
        out[i] += v
    for i, v in enumerate(z1):
        out[i + h] += v
    for i, v in enumerate(z2):
        out[i + 2 * h] += v
    return out


class UniPoly:
    """Dense univariate polynomial, coefficient list indexed by degree.

    Trailing zeros are trimmed; the zero polynomial has degree -inf.
    Instances are treated as immutable.
    """

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs=(), modulus=None):
        if modulus is not None:
            coeffs = [_as_int(c) % modulus for c in coeffs]
        else:
            coeffs = list(coeffs)
        self.coeffs = _trim(coeffs)
        self.modulus = modulus

    @classmethod
    def constant(cls, c, modulus=None):
        return cls([c], modulus)

    @classmethod
    def x(cls, modulus=None):
        return cls([0, 1], modulus)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.modulus != self.modulus:
                raise ValueError("polynomial ring mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other], self.modulus)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        out = [self.coeff(i) + other.coeff(i) for i in range(n)]
        return UniPoly(out, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        out = [self.coeff(i) - other.coeff(i) for i in range(n)]
        return UniPoly(out, self.modulus)

    def __rsub__(self, other):
        return UniPoly([other], self.modulus) - self

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.modulus)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs], self.modulus)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return UniPoly(_convolve(self.coeffs, other.coeffs, self.modulus), self.modulus)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UniPoly([other], self.modulus)
        return (isinstance(other, UniPoly) and self.modulus == other.modulus
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.modulus, tuple(self.coeffs)))

    def __call__(self, x):
        out = 0
        if self.modulus is None:
            for c in reversed(self.coeffs):
                out = out * x + c
        else:
            for c in reversed(self.coeffs):
                out = (out * x + c) % self.modulus
        return out

    def substitute_power(self, e: int) -> "UniPoly":
        """The polynomial a(z^e)."""
        if e < 1:
            raise ValueError("power must be >= 1")
        if e == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * e + 1)
        for i, c in enumerate(self.coeffs):
            out[i * e] = c
        return UniPoly(out, self.modulus)

    def is_palindromic(self) -> bool:
        """coeff_i == coeff_(deg-i) for all i; true for the zero polynomial."""
        return self.coeffs == self.coeffs[::-1]

    def reduce_mod(self, m: int) -> "UniPoly":
        """Image in Z/m; Fraction coefficients must have denominator prime to m."""
        out = []
        for c in self.coeffs:
            if isinstance(c, Fraction) and c.denominator != 1:
                out.append(c.numerator * pow(c.denominator, -1, m) % m)
            else:
                out.append(int(c) % m)
        return UniPoly(out, m)

    def map_coeffs(self, fn) -> "UniPoly":
        return UniPoly([fn(c) for c in self.coeffs], self.modulus)

    def __repr__(self):
        tag = f" mod {self.modulus}" if self.modulus is not None else ""
        return f"UniPoly({self.coeffs}{tag})"


def poly_mul(a: UniPoly, b: UniPoly) -> UniPoly:
    return a * b


def substitute_power(a: UniPoly, e: int) -> UniPoly:
    return a.substitute_power(e)


def is_palindromic(a: UniPoly) -> bool:
    return a.is_palindromic()


# --------------------------------------------------------------------------
# truncated power series

class TruncSeries:
    """Power series truncated above degree cap; same coefficient rings as UniPoly."""

    __slots__ = ("coeffs", "cap", "modulus")

    def __init__(self, coeffs, cap: int, modulus=None):
        coeffs = list(coeffs)[:cap + 1]
        if modulus is not None:
            coeffs = [_as_int(c) % modulus for c in coeffs]
        coeffs += [0] * (cap + 1 - len(coeffs))
        self.coeffs = coeffs
        self.cap = cap
        self.modulus = modulus

    @classmethod
    def from_poly(cls, poly: UniPoly, cap: int):
        return cls(poly.coeffs, cap, poly.modulus)

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            raise TypeError("expected a TruncSeries")
        if other.cap != self.cap or other.modulus != self.modulus:
            raise ValueError("series cap or ring mismatch")

    def __add__(self, other):
        self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)],
                           self.cap, self.modulus)

    def __sub__(self, other):
        self._check(other)
        return TruncSeries([a - b for a, b in zip(self.coeffs, other.coeffs)],
                           self.cap, self.modulus)

    def __mul__(self, other):
        self._check(other)
        cap, m = self.cap, self.modulus
        out = [0] * (cap + 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j in range(0, cap + 1 - i):
                    y = other.coeffs[j]
                    if y:
                        out[i + j] += x * y
        if m is not None:
            out = [v % m for v in out]
        return TruncSeries(out, cap, m)

    def __eq__(self, other):
        return (isinstance(other, TruncSeries) and self.cap == other.cap
                and self.modulus == other.modulus and self.coeffs == other.coeffs)

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse; constant term must be invertible."""
        c0 = self.coeffs[0]
        if self.modulus is not None:
            i0 = pow(int(c0), -1, self.modulus)
        else:
            if c0 == 0:
                raise ZeroDivisionError("series has zero constant term")
            i0 = c0 if (isinstance(c0, int) and abs(c0) == 1) else Fraction(1) / Fraction(c0)
        out = [i0] + [0] * self.cap
        for k in range(1, self.cap + 1):
            acc = 0
            for j in range(1, k + 1):
                acc += self.coeffs[j] * out[k - j]
            v = -i0 * acc
            out[k] = v % self.modulus if self.modulus is not None else v
        return TruncSeries(out, self.cap, self.modulus)

    def __repr__(self):
        tag = f" mod {self.modulus}" if self.modulus is not None else ""
        return f"TruncSeries({self.coeffs}, cap={self.cap}{tag})"


# --------------------------------------------------------------------------
# rational functions over Q

def _to_integer_primitive(coeffs: list) -> list:
    """Scale Fraction coefficients to a primitive integer list (sign preserved)."""
    fracs = [Fraction(c) for c in coeffs]
    if not fracs:
        return []
    den = math.lcm(*[f.denominator for f in fracs])
    ints = [int(f * den) for f in fracs]
    g = math.gcd(*[abs(v) for v in ints])
    return [v // g for v in ints]


def _int_poly_gcd(a: list, b: list) -> list:
    """Primitive gcd of integer coefficient lists via primitive-PRS Euclid."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        da, db = len(a) - 1, len(b) - 1
        if da < db:
            a, b = b, a
            continue
        lb = b[-1]
        # pseudo-remainder of a by b: eliminate top coefficients downwards
        r = list(a)
        for shift in range(da - db, -1, -1):
            q = r[db + shift]
            if q:
                r = [c * lb for c in r]
                for i in range(db + 1):
                    r[i + shift] -= q * b[i]
        r = _trim(r)
        if r:
            g = math.gcd(*[abs(v) for v in r])
            r = [v // g for v in r]
        a, b = b, r
    if not a:
        return []
    if a[-1] < 0:
        a = [-v for v in a]
    return a


def fraction_poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd of two polynomials with rational coefficients."""
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    else:
        gi = _int_poly_gcd(_to_integer_primitive(a.coeffs), _to_integer_primitive(b.coeffs))
        g = UniPoly([Fraction(v) for v in gi])
    if g.is_zero():
        return g
    lead = Fraction(g.coeffs[-1])
    return UniPoly([Fraction(c) / lead for c in g.coeffs])


def _poly_divexact(a: UniPoly, b: UniPoly) -> UniPoly:
    """Exact quotient a/b over Q (remainder must vanish)."""
    rem = [Fraction(c) for c in a.coeffs]
    bc = [Fraction(c) for c in b.coeffs]
    db = len(bc) - 1
    out = [Fraction(0)] * (len(rem) - db)
    inv_lead = 1 / bc[-1]
    for shift in range(len(rem) - db - 1, -1, -1):
        q = rem[db + shift] * inv_lead
        out[shift] = q
        if q:
            for i in range(db + 1):
                rem[i + shift] -= q * bc[i]
    assert not _trim(rem), "non-exact polynomial division"
    return UniPoly(out)


class RatFun:
    """Rational function in one variable over Q, stored reduced with monic denominator.

    Reduction is eager so that evaluation at t=0 sees only genuine poles:
    removable singularities are cancelled by the gcd at construction time.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        if isinstance(num, (int, Fraction)):
            num = UniPoly([Fraction(num)])
        if den is None:
            den = UniPoly([Fraction(1)])
        elif isinstance(den, (int, Fraction)):
            den = UniPoly([Fraction(den)])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce:
            num, den = self._reduced(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduced(num: UniPoly, den: UniPoly):
        num = num.map_coeffs(Fraction)
        den = den.map_coeffs(Fraction)
        if num.is_zero():
            return num, UniPoly([Fraction(1)])
        g = fraction_poly_gcd(num, den)
        if g.degree > 0:
            num = _poly_divexact(num, g)
            den = _poly_divexact(den, g)
        lead = Fraction(den.coeffs[-1])
        if lead != 1:
            num = num.map_coeffs(lambda c: c / lead)
            den = den.map_coeffs(lambda c: c / lead)
        return num, den

    @classmethod
    def variable(cls) -> "RatFun":
        return cls(UniPoly([Fraction(0), Fraction(1)]))

    @classmethod
    def linear(cls, constant, slope) -> "RatFun":
        return cls(UniPoly([Fraction(constant), Fraction(slope)]))

    def _coerce(self, other):
        if isinstance(other, RatFun):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFun(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFun(self.num * other.den - other.num * self.den, self.den * other.den)

    def __rsub__(self, other):
        return RatFun(other) - self

    def __neg__(self):
        return RatFun(-self.num, self.den, reduce=False)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFun(other) / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def eval(self, x: Fraction) -> Fraction:
        d = self.den(Fraction(x))
        if d == 0:
            raise PoleAtZeroError(f"pole at t={x}")
        return Fraction(self.num(Fraction(x))) / d

    def eval_at_zero(self) -> Fraction:
        """Value at t=0 on the reduced representation; a pole here is genuine."""
        return self.eval(Fraction(0))

    def __repr__(self):
        return f"RatFun({self.num.coeffs}/{self.den.coeffs})"


def ratfun_eval_at_zero(f: RatFun) -> Fraction:
    return f.eval_at_zero()
