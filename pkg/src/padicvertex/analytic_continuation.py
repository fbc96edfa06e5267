"""The p-adic unit domain, successive-ratio values, and the reciprocal identity.

The domain is the union of residue discs where the first approximation
polynomial is a p-adic unit.  On it the ratios of consecutive approximations
form a Cauchy sequence; their limit takes unit values and transforms with
the explicit monomial prefactor under z -> 1/z at Teichmueller points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coeff_engine import compute_ts
from .congruence_suite import TheoremReport
from .padic_core import NonUnitError, OmegaParam, ResidueElem, padic_valuation, teichmuller_lift


@dataclass(frozen=True)
class DomainD:
    """Residues u in F_p whose disc lies in the unit domain of T_1."""

    p: int
    units: tuple
    excluded: tuple

    def __contains__(self, a: int) -> bool:
        return a % self.p in self.units


@dataclass(frozen=True)
class IRatioValue:
    point: ResidueElem
    value: ResidueElem
    unit: bool


def domain_units(k: int, n: int, omega, p: int) -> DomainD:
    """Partition of F_p into unit residues and roots of the reduced T_1."""
    t1 = compute_ts(k, n, omega, p, 1).signed.reduce_mod(p)
    units = tuple(u for u in range(p) if t1(u) != 0)
    excluded = tuple(u for u in range(p) if t1(u) == 0)
    return DomainD(p, units, excluded)


def i_eval(a, k: int, n: int, omega, p: int, s: int) -> IRatioValue:
    """T_{s+1}(a) / T_s(a^p) in Z/p^s; requires the disc of a inside the domain."""
    a = int(a)
    m = p ** s
    num_poly = compute_ts(k, n, omega, p, s + 1).signed.reduce_mod(m)
    den_poly = compute_ts(k, n, omega, p, s).signed.reduce_mod(m)
    den = den_poly(pow(a, p, m))
    if den % p == 0:
        raise NonUnitError(f"a={a} lies outside the unit domain (denominator = {den} mod {m})")
    num = num_poly(a)
    value = ResidueElem(num * pow(den, -1, m), p, s)
    return IRatioValue(ResidueElem(a, p, s), value, value.is_unit())


def convergence_profile(a, k: int, n: int, omega, p: int, s_max: int) -> list:
    """Valuations v_p(I_{s+1}(a) - I_s(a)) for s = 1..s_max-1, exactly.

    The difference is evaluated through the integer cross-difference
    T_{s+2}(a) T_s(a^p) - T_{s+1}(a) T_{s+1}(a^p); its cofactor is a unit on
    the domain, so the valuation is exact.  A zero difference reports inf.
    """
    a = int(a)
    if a not in domain_units(k, n, omega, p):
        raise NonUnitError(f"a={a} lies outside the unit domain")
    ts = [compute_ts(k, n, omega, p, s).signed for s in range(s_max + 2)]
    out = []
    ap = a ** p
    for s in range(1, s_max):
        cross = ts[s + 2](a) * ts[s](ap) - ts[s + 1](a) * ts[s + 1](ap)
        out.append(math.inf if cross == 0 else padic_valuation(cross, p))
    return out


def modular_identity_check(u: int, k: int, n: int, omega, p: int, s: int,
                           params=None) -> TheoremReport:
    """t^((p-1)rk/q) * I_s(1/t) = I_s(t) mod p^s at the Teichmueller lift t of u."""
    omega = OmegaParam.coerce(omega)
    u %= p
    if u == 0:
        raise ValueError("u must be a unit of F_p")
    dom = domain_units(k, n, omega, p)
    uinv = pow(u, -1, p)
    if u not in dom.units or uinv not in dom.units:
        raise NonUnitError(f"u={u} or 1/u={uinv} lies outside the unit domain")
    m = p ** s
    t = teichmuller_lift(u, p, s)
    tinv = teichmuller_lift(uinv, p, s)
    exp = (p - 1) * omega.r * k // omega.q
    prefactor = pow(t.value, exp, m)
    lhs = prefactor * i_eval(tinv.value, k, n, omega, p, s).value.value % m
    rhs = i_eval(t.value, k, n, omega, p, s).value.value
    witness = None if lhs == rhs else {"u": u, "lhs": lhs, "rhs": rhs,
                                       "prefactor": prefactor}
    return TheoremReport("modular_identity",
                         {**(params or {}), "u": u, "p": p, "s": s},
                         m, 0, "pass" if witness is None else "fail", witness)
