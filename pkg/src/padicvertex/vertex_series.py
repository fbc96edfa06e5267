"""The vertex series at the symmetric specialization, by four independent routes.

Routes: the closed hypergeometric form (k=1 only), equivariant localization
along the one-parameter curve u_j = j*t with an exact t -> 0 limit, residue
expansion of the rational superpotential on the ranked torus, and the p-adic
limit through the infinite product of approximation polynomials.  The first
three agree exactly over Q; the fourth reproduces them modulo p^a.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .coeff_engine import compute_ts
from .padic_core import OmegaParam, pochhammer, rational_binomial, reduce_rational_mod
from .polyring import RatFun, TruncSeries
from .quiver_model import (
    ONE_TOK,
    Z_TOK,
    build_quiver,
    eps_order,
    is_var,
    rational_superpotential_factors,
)


@dataclass(frozen=True)
class VertexSeries:
    """Truncated vertex series with exact rational coefficients."""

    coeffs: tuple
    k: int
    n: int
    omega: OmegaParam
    provenance: str

    def coeff(self, d: int) -> Fraction:
        return self.coeffs[d]

    @property
    def dmax(self) -> int:
        return len(self.coeffs) - 1

    def reduce_mod(self, p: int, a: int) -> list:
        return [reduce_rational_mod(c, p, a) for c in self.coeffs]

    def to_json(self) -> dict:
        return {
            "k": self.k, "n": self.n,
            "r": self.omega.r, "q": self.omega.q,
            "provenance": self.provenance,
            "coeffs": [str(c) for c in self.coeffs],
        }


def vertex_closed_form_k1(n: int, omega, dmax: int) -> VertexSeries:
    """Hypergeometric closed form for k=1: c_d = (-1)^(n*d) * binom(-omega, d)^n."""
    omega = OmegaParam.coerce(omega)
    w = omega.fraction
    coeffs = tuple((-1) ** (n * d) * rational_binomial(-w, d) ** n
                   for d in range(dmax + 1))
    return VertexSeries(coeffs, 1, n, omega, "closed_form")


# --------------------------------------------------------------------------
# localization route

def _compositions(d: int, parts: int):
    if parts == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _compositions(d - first, parts - 1):
            yield (first,) + rest


def _localization_term(k: int, n: int, w: Fraction, ds) -> RatFun:
    """One fixed-point term of the degree-sum, as a rational function of t.

    Equivariant weights are specialized along u_j = j*t (any injective line
    works; substituting u = 0 directly makes individual factors vanish).
    The Pochhammer step is 1 and the cotangent weight is w.
    """
    term = RatFun(1)
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            dd = ds[i - 1] - ds[j - 1]
            if dd == 0:
                continue
            term = term * pochhammer(RatFun.linear(1, j - i), dd, 1)
            term = term / pochhammer(RatFun.linear(w, j - i), dd, 1)
    for j in range(1, n + 1):
        for i in range(1, k + 1):
            di = ds[i - 1]
            if di == 0:
                continue
            term = term * pochhammer(RatFun.linear(w, j - i), di, 1)
            term = term / pochhammer(RatFun.linear(1, j - i), di, 1)
    return term


def vertex_localization(k: int, n: int, omega, dmax: int) -> VertexSeries:
    """Fixed-point sum route; poles of individual terms cancel in the sum."""
    if n < 2 * k:
        raise ValueError("need n >= 2k")
    omega = OmegaParam.coerce(omega)
    w = omega.fraction
    coeffs = []
    for d in range(dmax + 1):
        acc = RatFun(0)
        for ds in _compositions(d, k):
            acc = acc + _localization_term(k, n, w, ds)
        coeffs.append(acc.eval_at_zero())
    return VertexSeries(tuple(coeffs), k, n, omega, "localization")


# --------------------------------------------------------------------------
# residue route

@lru_cache(maxsize=None)
def _branch_coeff(e: Fraction, m: int) -> Fraction:
    return rational_binomial(e, m) * (-1) ** m


def _residue_coeffs(model, omega: OmegaParam, dmax: int, cap: int) -> list:
    """Coefficient of z^d (d <= dmax) of the constant-in-x term of the branch product.

    On the ranked torus the variable-power prefactor of the superpotential
    is exactly prod x_{i,j}^(-1), so the contour extraction reduces to the
    x-constant coefficient of the product of binomial branch series
    sum_m binom(e, m) (-small/large)^m, each truncated at index cap.
    The unit phases of the reversed branches and the overall normalization
    constant cancel and are both omitted.
    """
    order = eps_order(model)
    pos = {v: i for i, v in enumerate(order)}

    def brank(op):
        if op == Z_TOK:
            return (-1, 0)
        if op == ONE_TOK:
            return (10 ** 9, 0)
        return (model.eps_rank(op), op[0])

    entries = []  # (key_pos, small, large, exponent)
    for f in rational_superpotential_factors(model, omega):
        if f.kind == "monomial":
            continue
        a, b = f.first, f.second
        small, large = (a, b) if brank(a) < brank(b) else (b, a)
        kp = min(pos[op] for op in (a, b) if is_var(op))
        entries.append((kp, small, large, f.exponent))

    states = {(0,) + (0,) * len(order): Fraction(1)}
    for step, v in enumerate(order):
        keyed = [e for e in entries if e[0] == step]
        remaining = [e for e in entries if e[0] > step]

        def slot_of(op, base=step):
            if op == Z_TOK:
                return 0
            if op == ONE_TOK:
                return None
            return 1 + pos[op] - base

        for idx, (_, small, large, e) in enumerate(keyed):
            ssm, slg = slot_of(small), slot_of(large)
            last = idx == len(keyed) - 1
            new = {}
            for key, c in states.items():
                if last:
                    # v's net exponent must vanish; the series index is forced
                    m = -key[1] if (ssm is not None and ssm == 1) else key[1]
                    ms = (m,) if 0 <= m <= cap else ()
                else:
                    ms = range(cap + 1)
                for m in ms:
                    nk = list(key)
                    if ssm is not None:
                        nk[ssm] += m
                    if slg is not None:
                        nk[slg] -= m
                    if nk[0] > dmax:
                        break  # z-degree only grows with m
                    new_key = tuple(nk)
                    val = c * _branch_coeff(e, m)
                    if new_key in new:
                        new[new_key] += val
                    else:
                        new[new_key] = val
            states = new

        # close v and prune slots that can no longer balance to zero
        filtered = {}
        bound_pos = {}
        bound_neg = {}
        for _, small, large, _e in remaining:
            if is_var(small):
                bound_pos[small] = bound_pos.get(small, 0) + cap
            if is_var(large):
                bound_neg[large] = bound_neg.get(large, 0) + cap
        for key, c in states.items():
            if key[1] != 0 or c == 0:
                continue
            ok = True
            for off, w_var in enumerate(order[step + 1:]):
                exp = key[2 + off]
                if exp > bound_neg.get(w_var, 0) or -exp > bound_pos.get(w_var, 0):
                    ok = False
                    break
            if ok:
                nk = (key[0],) + key[2:]
                filtered[nk] = filtered.get(nk, 0) + c
        states = filtered

    out = [Fraction(0)] * (dmax + 1)
    for key, c in states.items():
        out[key[0]] += c
    return out


def vertex_residue(k: int, n: int, omega, dmax: int) -> VertexSeries:
    """Residue-expansion route with empirical cap stabilization.

    Series caps start at 2*(dmax+1)+4 and double until two consecutive runs
    agree on every reported coefficient.
    """
    if n < 2 * k:
        raise ValueError("need n >= 2k")
    omega = OmegaParam.coerce(omega)
    model = build_quiver(k, n)
    cap = 2 * (dmax + 1) + 4
    prev = None
    while True:
        cur = _residue_coeffs(model, omega, dmax, cap)
        if prev is not None and cur == prev:
            return VertexSeries(tuple(cur), k, n, omega, "residue")
        if cap > 4096 * (dmax + 1):
            raise ArithmeticError("residue series caps did not stabilize")
        prev, cap = cur, cap * 2


# --------------------------------------------------------------------------
# p-adic limit route

def vertex_padic_limit(k: int, n: int, omega, p: int, a: int, dmax: int) -> list:
    """Vertex coefficients mod p^a from the truncated infinite product.

    Multiplies the signed approximation factors and the series inverses of
    the (unit constant term) denominator factors mod p^a; factors with
    p^i > dmax are identically 1 up to the cap and are dropped.
    """
    if a < 1:
        raise ValueError("need a >= 1")
    omega = OmegaParam.coerce(omega)
    mod = p ** a
    ta = compute_ts(k, n, omega, p, a).signed.reduce_mod(mod)
    tam1 = compute_ts(k, n, omega, p, a - 1).signed.reduce_mod(mod)
    out = TruncSeries.from_poly(ta, dmax)
    i = 1
    while p ** i <= dmax:
        out = out * TruncSeries.from_poly(ta.substitute_power(p ** i), dmax)
        i += 1
    i = 0
    while p ** (i + 1) <= dmax:
        den = TruncSeries.from_poly(tam1.substitute_power(p ** (i + 1)), dmax)
        out = out * den.inverse()
        i += 1
    return list(out.coeffs)
