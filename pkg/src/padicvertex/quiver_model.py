"""Mirror-quiver combinatorics for the Grassmannian family.

For a pair (k, n) with n >= 2k the mirror is a framed A_{n-1} quiver with
one-dimensional framings at vertices k and n-k (both at vertex k when
n = 2k) and dimension vector v_i = min(i, k, n-i).  This module builds the
variable set x_{i,j}, the modulus ranking that fixes series branches and
elimination order, and the symbolic factor lists of the superpotential:
the product of binomial powers whose target-monomial coefficients are the
object of study downstream.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .padic_core import OmegaParam, PrimeData

# operand tokens in binomial factors: a variable (i, j), the framing
# parameter Z_TOK (|z| below every variable) or ONE_TOK (above every one)
Z_TOK = "z"
ONE_TOK = "one"


def is_var(op) -> bool:
    return isinstance(op, tuple)


@dataclass(frozen=True)
class QuiverModel:
    k: int
    n: int
    dims: tuple
    variables: tuple

    @property
    def framing_vertices(self) -> tuple:
        return (self.k, self.n - self.k)

    def eps_rank(self, var) -> int:
        """Modulus rank |i-k| + 2j - 1 of variable (i, j); minimum 1 at (k, 1)."""
        i, j = var
        return abs(i - self.k) + 2 * j - 1

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "dims": list(self.dims),
            "framing_vertices": list(self.framing_vertices),
            "variables": [list(v) for v in self.variables],
            "eps_ranks": {f"{i},{j}": self.eps_rank((i, j)) for i, j in self.variables},
        }


def build_quiver(k: int, n: int) -> QuiverModel:
    """Dimension vector and variable set of the mirror quiver of (k, n)."""
    if k < 1 or n < 2 * k:
        raise ValueError(f"need n >= 2k >= 2, got k={k}, n={n}")
    dims = tuple(min(i, k, n - i) for i in range(1, n))
    variables = tuple((i, j) for i in range(1, n) for j in range(1, dims[i - 1] + 1))
    assert len(variables) == k * (n - k)
    return QuiverModel(k, n, dims, variables)


def eps_order(model: QuiverModel) -> list:
    """Variables sorted by modulus rank; rank ties broken by smaller vertex index."""
    return sorted(model.variables, key=lambda v: (model.eps_rank(v), v))


@dataclass(frozen=True)
class Factor:
    """One power factor of a superpotential product.

    Binomial kinds are stored as written in the product, first - second:
    vandermonde (x_{m,j} - x_{m,i}) with i < j, chain (x_{i,a} - x_{i+1,b}),
    framing (z - x_{k,i}) and (1 - x_{n-k,i}); monomial kind has no second
    operand.  For branch (rational-exponent) lists, ``reversed_branch``
    marks factors whose subtracted operand has the larger modulus, i.e.
    whose single-valued branch is the (small/large - 1) series.
    """

    kind: str
    first: object
    second: object
    exponent: object
    reversed_branch: bool = False

    def operands(self):
        return (self.first,) if self.second is None else (self.first, self.second)

    def to_json(self) -> dict:
        def enc(op):
            return list(op) if is_var(op) else op
        d = {"kind": self.kind, "first": enc(self.first), "exponent": str(self.exponent)}
        if self.second is not None:
            d["second"] = enc(self.second)
        if self.kind != "monomial":
            d["reversed_branch"] = self.reversed_branch
        return d


@dataclass(frozen=True)
class FactorList:
    factors: tuple
    kind: str  # "polynomial" (integer exponents) or "branch" (rational exponents)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def to_json(self) -> list:
        return [f.to_json() for f in self.factors]


def _binomial_skeleton(model: QuiverModel):
    """All binomial factors (kind, first, second) in a fixed canonical order."""
    out = []
    for m in range(1, model.n):
        vm = model.dims[m - 1]
        for i in range(1, vm + 1):
            for j in range(i + 1, vm + 1):
                out.append(("vandermonde", (m, j), (m, i)))
    for i in range(1, model.n - 1):
        for a in range(1, model.dims[i - 1] + 1):
            for b in range(1, model.dims[i] + 1):
                out.append(("chain", (i, a), (i + 1, b)))
    k, nk = model.framing_vertices
    for i in range(1, model.k + 1):
        out.append(("framing_z", Z_TOK, (k, i)))
    for i in range(1, model.k + 1):
        out.append(("framing_one", ONE_TOK, (nk, i)))
    return out


def _branch_rank(model: QuiverModel, op) -> float:
    if op == Z_TOK:
        return 0  # |z| below every variable on the chosen torus
    if op == ONE_TOK:
        return float("inf")  # |1| above every variable
    return model.eps_rank(op)


def superpotential_factors(model: QuiverModel, omega, prime: PrimeData) -> FactorList:
    """Integer-exponent factor list of the polynomial superpotential at precision s.

    Exponents: A = (p^s-1)(q-r)/q on each variable monomial, B+1 with
    B = (p^s-1)(q-2r)/q on each same-vertex vandermonde binomial (the +1
    absorbs the discriminant prefactor), C = (p^s-1)r/q on each chain and
    framing binomial.  All are nonnegative integers, and B is even, exactly
    when p = 1 mod q.
    """
    omega = OmegaParam.coerce(omega)
    if (prime.p - 1) % omega.q != 0:
        raise ValueError(f"p must satisfy p = 1 mod q, got p={prime.p}, q={omega.q}")
    e = prime.p ** prime.s - 1
    r, q = omega.r, omega.q
    A = e * (q - r) // q
    B = e * (q - 2 * r) // q
    C = e * r // q
    factors = [Factor("monomial", v, None, A) for v in model.variables]
    for kind, first, second in _binomial_skeleton(model):
        exp = B + 1 if kind == "vandermonde" else C
        factors.append(Factor(kind, first, second, exp))
    return FactorList(tuple(factors), "polynomial")


def rational_superpotential_factors(model: QuiverModel, omega) -> FactorList:
    """Rational-exponent factor list of the superpotential, with branch forms.

    Exponents: omega - 1 on monomials, 2*omega on vandermonde binomials,
    -omega on chain and framing binomials.  Each binomial is annotated with
    the branch of its single-valued series on the ranked torus: direct
    (1 - small/large)^e when the larger-modulus operand comes first,
    reversed (small/large - 1)^e when it is subtracted.
    """
    omega = OmegaParam.coerce(omega)
    w = omega.fraction
    factors = [Factor("monomial", v, None, w - 1) for v in model.variables]
    for kind, first, second in _binomial_skeleton(model):
        exp = 2 * w if kind == "vandermonde" else -w
        rev = _branch_rank(model, second) > _branch_rank(model, first)
        factors.append(Factor(kind, first, second, exp, reversed_branch=rev))
    return FactorList(tuple(factors), "branch")


def target_monomial(model: QuiverModel, prime: PrimeData) -> dict:
    """Exponent map (i,j) -> j*p^s - 1 of the extracted monomial."""
    ps = prime.p ** prime.s
    return {(i, j): j * ps - 1 for (i, j) in model.variables}


def z_degree_bound(model: QuiverModel, omega, prime: PrimeData) -> int:
    """Total z-degree available from the framing factors: k*(p^s-1)*r/q."""
    omega = OmegaParam.coerce(omega)
    return model.k * (prime.p ** prime.s - 1) * omega.r // omega.q
