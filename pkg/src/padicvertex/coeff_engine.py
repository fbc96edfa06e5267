"""Target-monomial coefficient extraction from products of binomial powers.

The polynomial superpotential is a product of factors x^A, (u - w)^E with
operands among the quiver variables, z and 1.  The coefficient of the
target monomial (exponent j*p^s - 1 on variable (i,j)) is computed without
expanding the multivariate product: variables are eliminated one at a time
in the modulus-rank order, convolving only the factors incident to the
current variable and keeping the single exponent slice that can still reach
the target.  Partial terms whose committed exponent already exceeds a
remaining variable's target, or whose z-degree exceeds the framing budget,
are discarded immediately.  All arithmetic is exact over the integers so
that the result can be reduced at several moduli afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iter_product
from math import comb

from .padic_core import OmegaParam, PrimeData
from .polyring import UniPoly
from .quiver_model import (
    Z_TOK,
    FactorList,
    build_quiver,
    eps_order,
    is_var,
    superpotential_factors,
    target_monomial,
    z_degree_bound,
)


def _signed_binomial_row(E: int) -> list:
    """[(-1)^t * comb(E, t) for t in 0..E], built incrementally."""
    row = [0] * (E + 1)
    c = 1
    for t in range(E + 1):
        row[t] = c if t % 2 == 0 else -c
        c = c * (E - t) // (t + 1)
    return row


def extract_coefficient(factors, targets: dict, order=None, z_cap=None) -> UniPoly:
    """Coefficient polynomial in z of the target x-monomial in the product.

    factors: iterable of Factor with nonnegative integer exponents.
    targets: map variable -> required exponent.
    order:   variable elimination order (any order gives the same result;
             the modulus-rank order keeps intermediate states small).
    z_cap:   degree bound in z; defaults to the total z budget of the factors.
    """
    order = list(order) if order is not None else sorted(targets)
    pos = {v: i for i, v in enumerate(order)}
    keyed = {v: [] for v in order}
    for f in factors:
        ops = [op for op in f.operands() if is_var(op)]
        keyed[min(ops, key=pos.__getitem__)].append(f)
    if z_cap is None:
        z_cap = sum(f.exponent for f in factors if Z_TOK in f.operands())

    # state key: (z_degree, exponent of order[step], exponent of order[step+1], ...)
    states = {(0,) + (0,) * len(order): 1}
    for step, v in enumerate(order):
        tgt = targets[v]
        fs = sorted(keyed[v], key=lambda f: (f.second is not None, f.exponent))
        solved = fs.pop() if fs and fs[-1].second is not None else None

        def slot_of(op):
            if op == Z_TOK:
                return 0
            if is_var(op):
                return 1 + pos[op] - step
            return None  # the operand 1 carries no exponent

        def slot_cap(slot):
            return z_cap if slot == 0 else targets[order[step + slot - 1]]

        # suffix[i] = max contribution to v still to come from fs[i:] and solved
        suffix = [0] * (len(fs) + 1)
        suffix[len(fs)] = solved.exponent if solved is not None else 0
        for i in range(len(fs) - 1, -1, -1):
            suffix[i] = suffix[i + 1] + fs[i].exponent

        for fi, f in enumerate(fs):
            rem_after = suffix[fi + 1]
            new = {}
            if f.second is None:
                A = f.exponent
                for key, c in states.items():
                    ev = key[1] + A
                    if ev > tgt or ev + rem_after < tgt:
                        continue
                    nk = (key[0], ev) + key[2:]
                    new[nk] = new.get(nk, 0) + c
            else:
                E = f.exponent
                sp = slot_of(f.first)
                sq = slot_of(f.second)
                for key, c in states.items():
                    # term t contributes E-t to the first operand, t to the
                    # second, with coefficient comb(E,t) * (-1)^t
                    lo, hi = 0, E
                    if sp is not None:
                        lo = max(lo, E - (slot_cap(sp) - key[sp]))
                    if sq is not None:
                        hi = min(hi, slot_cap(sq) - key[sq])
                    if sp == 1:
                        hi = min(hi, key[1] + E + rem_after - tgt)
                    elif sq == 1:
                        lo = max(lo, tgt - key[1] - rem_after)
                    if lo > hi:
                        continue
                    coeff = comb(E, lo) if lo % 2 == 0 else -comb(E, lo)
                    for t in range(lo, hi + 1):
                        nk = list(key)
                        if sp is not None:
                            nk[sp] += E - t
                        if sq is not None:
                            nk[sq] += t
                        nk = tuple(nk)
                        val = c * coeff
                        if nk in new:
                            new[nk] += val
                        else:
                            new[nk] = val
                        coeff = -coeff * (E - t) // (t + 1)
            states = new

        # close variable v: the last factor's index is forced by the residual
        # target, then the slot is dropped
        new = {}
        if solved is not None:
            E = solved.exponent
            v_is_first = solved.first == v
            so = slot_of(solved.second if v_is_first else solved.first)
            row = _signed_binomial_row(E)  # one pass beats per-state math.comb
            for key, c in states.items():
                need = tgt - key[1]
                t = E - need if v_is_first else need
                if not 0 <= t <= E:
                    continue
                nk = list(key)
                if so is not None:
                    nk[so] += (t if v_is_first else E - t)
                    if nk[so] > slot_cap(so):
                        continue
                nk = (nk[0],) + tuple(nk[2:])
                val = c * row[t]
                new[nk] = new.get(nk, 0) + val
        else:
            for key, c in states.items():
                if key[1] == tgt:
                    nk = (key[0],) + key[2:]
                    new[nk] = new.get(nk, 0) + c
        states = {k: c for k, c in new.items() if c}

    out = [0] * (z_cap + 1)
    for key, c in states.items():
        out[key[0]] = c
    return UniPoly(out)


@dataclass(frozen=True)
class TsPolynomial:
    """The degree-(p^s-1)kr/q integer polynomial approximating the vertex series.

    unsigned is the raw extracted coefficient; sign is its value at z=0
    (always +-1) and signed = sign * unsigned, so that signed(0) = 1.
    """

    signed: UniPoly
    unsigned: UniPoly
    sign: int
    k: int
    n: int
    r: int
    q: int
    p: int
    s: int

    @property
    def degree(self) -> int:
        return int(self.signed.degree) if not self.signed.is_zero() else 0

    def to_json(self) -> dict:
        return {
            "k": self.k, "n": self.n, "r": self.r, "q": self.q,
            "p": self.p, "s": self.s,
            "coeffs": [str(c) for c in self.signed.coeffs],
            "sign": self.sign,
            "degree": self.degree,
        }


@lru_cache(maxsize=None)
def _compute_ts(k: int, n: int, r: int, q: int, p: int, s: int) -> TsPolynomial:
    one = UniPoly([1])
    if s == 0:
        return TsPolynomial(one, one, 1, k, n, r, q, p, s)
    omega = OmegaParam(r, q)
    prime = PrimeData.create(p, s, omega)
    model = build_quiver(k, n)
    factors = superpotential_factors(model, omega, prime)
    targets = target_monomial(model, prime)
    cap = z_degree_bound(model, omega, prime)
    unsigned = extract_coefficient(factors, targets, eps_order(model), cap)
    sign = unsigned.coeff(0)
    if sign not in (1, -1):
        raise AssertionError(f"constant term {sign} is not a unit sign")
    signed = unsigned * sign
    if signed.degree != cap:
        raise AssertionError(f"degree {signed.degree} != expected {cap}")
    return TsPolynomial(signed, unsigned, sign, k, n, r, q, p, s)


def compute_ts(k: int, n: int, omega, p: int, s: int) -> TsPolynomial:
    """The s-th approximation polynomial for (k, n) at omega = r/q and prime p.

    s = 0 gives the constant polynomial 1.  Results are cached; they are
    reused heavily by the congruence checks.
    """
    omega = OmegaParam.coerce(omega)
    if s < 0:
        raise ValueError("s must be >= 0")
    if s > 0:
        PrimeData.create(p, s, omega)  # validates p
    return _compute_ts(k, n, omega.r, omega.q, p, s)


def ts_sequence(k: int, n: int, omega, p: int, s_max: int, signed=True) -> list:
    """[T_0, ..., T_{s_max}] as plain integer polynomials."""
    ts = [compute_ts(k, n, omega, p, s) for s in range(s_max + 1)]
    return [t.signed if signed else t.unsigned for t in ts]


def fp_sum_oracle(k: int, n: int, omega, p: int, z0: int) -> int:
    """Brute-force F_p sum oracle for the first approximation at k=1.

    Returns -sum over t in F_p^(n-1) of the evaluated superpotential
    product modulo p; equals (-1)^n times the unsigned first approximation
    at z0 modulo p.
    """
    if k != 1:
        raise ValueError("the finite-field sum oracle is defined for k=1 only")
    omega = OmegaParam.coerce(omega)
    prime = PrimeData.create(p, 1, omega)
    e = p - 1
    A = e * (omega.q - omega.r) // omega.q
    C = e * omega.r // omega.q
    z0 %= p
    total = 0
    for t in iter_product(range(p), repeat=n - 1):
        val = 1
        for ti in t:
            val = val * pow(ti, A, p) % p
        for i in range(n - 2):
            val = val * pow((t[i] - t[i + 1]) % p, C, p) % p
        val = val * pow((z0 - t[0]) % p, C, p) % p
        val = val * pow((1 - t[n - 2]) % p, C, p) % p
        total += val
    return (-total) % p
