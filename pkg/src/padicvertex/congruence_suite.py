"""Verification of the congruence identities satisfied by the approximation polynomials.

Every congruence is checked in division-free cross-multiplied form, so a
failure localizes to a single coefficient, reported as the witness in a
TheoremReport.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .padic_core import reduce_rational_mod
from .polyring import TruncSeries, UniPoly


@dataclass(frozen=True)
class TheoremReport:
    """Machine-checkable verdict record for one identity instance."""

    identity: str
    params: dict
    modulus: int
    degree_checked: int
    verdict: str  # "pass" | "fail"
    witness: dict = None

    @property
    def ok(self) -> bool:
        return self.verdict == "pass"

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "params": {k: str(v) if not isinstance(v, (int, str)) else v
                       for k, v in self.params.items()},
            "modulus": self.modulus,
            "degree_checked": self.degree_checked,
            "verdict": self.verdict,
            "witness": self.witness,
        }


def _report(identity, params, modulus, lhs: UniPoly, rhs: UniPoly) -> TheoremReport:
    """Compare two integer polynomials coefficient-by-coefficient mod modulus."""
    la = lhs if lhs.modulus == modulus else lhs.reduce_mod(modulus)
    rb = rhs if rhs.modulus == modulus else rhs.reduce_mod(modulus)
    deg = max(len(la.coeffs), len(rb.coeffs)) - 1
    witness = None
    for i in range(deg + 1):
        if la.coeff(i) != rb.coeff(i):
            witness = {"degree": i, "lhs": la.coeff(i), "rhs": rb.coeff(i)}
            break
    return TheoremReport(identity, dict(params), modulus, deg,
                         "pass" if witness is None else "fail", witness)


def dwork_check(ts, p: int, s: int, params=None) -> TheoremReport:
    """T_{s+1}(z) * T_{s-1}(z^p) = T_s(z) * T_s(z^p) mod p^s.

    ts is the list [T_0, ..., T_{s+1}] of integer polynomials in one sign
    convention (either convention passes: both sides rescale identically).
    """
    if len(ts) < s + 2:
        raise ValueError(f"need T_0..T_{s + 1}, got {len(ts)} polynomials")
    if ts[0] != UniPoly([1]):
        raise ValueError("T_0 must be the constant polynomial 1")
    m = p ** s
    red = [t.reduce_mod(m) for t in ts[:s + 2]]
    lhs = red[s + 1] * red[s - 1].substitute_power(p)
    rhs = red[s] * red[s].substitute_power(p)
    return _report("dwork", {**(params or {}), "p": p, "s": s}, m, lhs, rhs)


@dataclass(frozen=True)
class GhostSequence:
    """Ghost polynomials G_1..G_s of the unsigned approximation sequence.

    G_1 equals the unsigned first approximation and every coefficient of
    G_m is divisible by p^(m-1).
    """

    polys: tuple
    p: int

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]


def ghost_sequence(unsigned_ts, p: int) -> GhostSequence:
    """Triangular inversion of the ghost expansion.

    unsigned_ts is [T_1, ..., T_s] in the unsigned convention; the ghosts
    satisfy T_s(z) = sum_{m=1}^{s} G_m(z) * T_{s-m}(z^{p^m}) with T_0 = 1,
    an exact identity over the integers.
    """
    ts = [UniPoly([1])] + list(unsigned_ts)
    gs = []
    for m in range(1, len(ts)):
        g = ts[m]
        for j in range(1, m):
            g = g - gs[j - 1] * ts[m - j].substitute_power(p ** j)
        gs.append(g)
    return GhostSequence(tuple(gs), p)


def ghost_vanishing_check(ghosts: GhostSequence, p: int, params=None) -> TheoremReport:
    """p^(m-1) divides every coefficient of G_m."""
    witness = None
    deg = 0
    for m, g in enumerate(ghosts.polys, start=1):
        mod = p ** (m - 1)
        deg = max(deg, len(g.coeffs) - 1)
        for i, c in enumerate(g.coeffs):
            if c % mod:
                witness = {"ghost_index": m, "degree": i, "coefficient_mod": c % mod}
                break
        if witness:
            break
    return TheoremReport("ghost_vanishing", {**(params or {}), "p": p, "s": len(ghosts)},
                         p ** (len(ghosts) - 1), deg,
                         "pass" if witness is None else "fail", witness)


def ghost_reconstruction_check(ghosts: GhostSequence, unsigned_ts, p: int,
                               params=None) -> TheoremReport:
    """Exact integer identity T_s = sum_m G_m(z) * T_{s-m}(z^{p^m}), every s."""
    ts = [UniPoly([1])] + list(unsigned_ts)
    witness = None
    deg = 0
    for s in range(1, len(ts)):
        acc = UniPoly([])
        for m in range(1, s + 1):
            acc = acc + ghosts[m - 1] * ts[s - m].substitute_power(p ** m)
        deg = max(deg, len(ts[s].coeffs) - 1)
        if acc != ts[s]:
            diff = acc - ts[s]
            i = next(i for i, c in enumerate(diff.coeffs) if c)
            witness = {"s": s, "degree": i, "difference": diff.coeff(i)}
            break
    return TheoremReport("ghost_reconstruction", {**(params or {}), "p": p, "s": len(ghosts)},
                         0, deg, "pass" if witness is None else "fail", witness)


def telescoping_check(ts, p: int, s: int, m: int, params=None) -> TheoremReport:
    """T_s(z) * prod_{i=1..m} T_{s-m-1}(z^{p^i}) = prod_{i=0..m} T_{s-m}(z^{p^i}) mod p^(s-m)."""
    if not 0 <= m <= s - 1:
        raise ValueError(f"need 0 <= m <= s-1, got m={m}, s={s}")
    if len(ts) < s + 1:
        raise ValueError(f"need T_0..T_{s}")
    mod = p ** (s - m)
    red = [t.reduce_mod(mod) for t in ts[:s + 1]]
    lhs = red[s]
    for i in range(1, m + 1):
        lhs = lhs * red[s - m - 1].substitute_power(p ** i)
    rhs = red[s - m]
    for i in range(1, m + 1):
        rhs = rhs * red[s - m].substitute_power(p ** i)
    return _report("telescoping", {**(params or {}), "p": p, "s": s, "m": m}, mod, lhs, rhs)


def infinite_product_check(p: int, a: int, dmax: int, vertex_coeffs, ts,
                           params=None) -> TheoremReport:
    """V(z) = prod_{i>=0} T_a(z^{p^i}) / T_{a-1}(z^{p^{i+1}}) mod p^a, up to degree dmax.

    vertex_coeffs are the exact rational (or already reduced) vertex series
    coefficients c_0..c_dmax; ts is [T_0, ..., T_a] in the signed convention
    (constant terms 1).  Factors with p^i > dmax contribute 1 + O(z^{>dmax})
    and are dropped; the remaining identity is verified cross-multiplied.
    """
    if len(ts) < a + 1:
        raise ValueError(f"need T_0..T_{a}")
    if len(vertex_coeffs) < dmax + 1:
        raise ValueError("vertex series too short for requested degree")
    mod = p ** a
    reduced = [c if isinstance(c, int) else reduce_rational_mod(c, p, a)
               for c in vertex_coeffs[:dmax + 1]]
    lhs = TruncSeries(reduced, dmax, mod)
    ta = ts[a].reduce_mod(mod)
    tam1 = ts[a - 1].reduce_mod(mod)
    i = 0
    while p ** (i + 1) <= dmax:
        lhs = lhs * TruncSeries.from_poly(tam1.substitute_power(p ** (i + 1)), dmax)
        i += 1
    rhs = TruncSeries([1], dmax, mod)
    i = 0
    while p ** i <= dmax:
        rhs = rhs * TruncSeries.from_poly(ta.substitute_power(p ** i), dmax)
        i += 1
    witness = None
    for d in range(dmax + 1):
        if lhs.coeffs[d] != rhs.coeffs[d]:
            witness = {"degree": d, "lhs": lhs.coeffs[d], "rhs": rhs.coeffs[d]}
            break
    return TheoremReport("infinite_product", {**(params or {}), "p": p, "a": a},
                         mod, dmax, "pass" if witness is None else "fail", witness)
