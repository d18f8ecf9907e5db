"""Independent oracles used by the tests.

These deliberately take different routes from the code under test: the Hall
pairing and basis expansions go through explicit monomial expansions in
finitely many variables, and Littlewood-Richardson numbers come from a
dominance peel of Schur products.
"""

from __future__ import annotations

from kpeterson.grothendieck import stable_groth_vars
from kpeterson.partitions import Partition
from kpeterson.polynomials import Poly
from kpeterson.scalars import Rational
from kpeterson.symfunc import SymFunc, schur


def random_rational(rng, allow_zero=True):
    num = rng.randint(-9, 9)
    if not allow_zero:
        while num == 0:
            num = rng.randint(-9, 9)
    return Rational(num, rng.randint(1, 9))


def random_symfunc(rng, max_index=4, max_terms=4, max_exp=2) -> SymFunc:
    total = SymFunc.zero()
    for _ in range(rng.randint(1, max_terms)):
        exps = [rng.randint(0, max_exp) for _ in range(rng.randint(1, max_index))]
        total = total + SymFunc.monomial(exps, random_rational(rng, allow_zero=False))
    return total


def hall_pair(f: SymFunc, g: SymFunc):
    """Hall inner product via monomial expansion: <f, h_lambda> is the
    coefficient of x^lambda in f, extended over g's h-monomials."""
    deg = max(f.degree(), g.degree(), 1)
    expansion = f.expand_in_vars(deg)
    total = Rational(0)
    for exps, coeff in g.terms.items():
        indices = []
        for i in range(len(exps), 0, -1):
            indices.extend([i] * exps[i - 1])
        key = tuple(indices) + (0,) * (deg - len(indices))
        total += coeff * expansion.terms.get(key, Rational(0))
    return total


def schur_expansion(f: SymFunc) -> dict:
    """Expand f over Schur functions by the dominance peel on a monomial
    expansion (enough variables to be faithful)."""
    if f.is_zero():
        return {}
    num_vars = max(f.degree(), 1)
    poly = f.expand_in_vars(num_vars)
    out = {}
    while not poly.is_zero():
        exps = max(poly.terms, key=lambda e: e)
        coeff = poly.terms[exps]
        parts = [e for e in exps if e]
        if list(exps[: len(parts)]) != sorted(parts, reverse=True) or any(
            exps[len(parts):]
        ):
            raise ValueError(f"not symmetric: leading exponent {exps}")
        lam = Partition(parts)
        out[lam] = coeff
        poly = poly - schur(lam).expand_in_vars(num_vars) * coeff
    return out


def classical_lr(lam: Partition, mu: Partition, nu: Partition):
    """LR coefficient from a Schur-product peel."""
    product = schur(lam) * schur(mu)
    return schur_expansion(product).get(nu, Rational(0))


def stable_product_expansion(lam: Partition, mu: Partition, num_vars: int) -> dict:
    """Expand G_lam * G_mu over the stable basis in num_vars variables by
    peeling minimal-degree dominant monomials."""
    poly = stable_groth_vars(lam, num_vars).with_vars(
        tuple(f"x{i}" for i in range(1, num_vars + 1))
    ) * stable_groth_vars(mu, num_vars).with_vars(
        tuple(f"x{i}" for i in range(1, num_vars + 1))
    )
    out = {}
    while not poly.is_zero():
        min_deg = min(sum(e) for e in poly.terms)
        exps = max((e for e in poly.terms if sum(e) == min_deg))
        coeff = poly.terms[exps]
        parts = [e for e in exps if e]
        if list(exps[: len(parts)]) != sorted(parts, reverse=True) or any(
            exps[len(parts):]
        ):
            raise ValueError(f"unexpected leading exponent {exps}")
        nu = Partition(parts)
        out[nu] = coeff
        poly = poly - stable_groth_vars(nu, num_vars).with_vars(poly.vars) * coeff
    return out


def lift_to_symfunc(poly: Poly, num_vars: int) -> SymFunc:
    """Invert the monomial expansion of a symmetric polynomial of degree at
    most num_vars, degree by degree through the Schur peel."""
    total = SymFunc.zero()
    remaining = poly
    while not remaining.is_zero():
        exps = max(remaining.terms, key=lambda e: e)
        coeff = remaining.terms[exps]
        parts = [e for e in exps if e]
        lam = Partition(parts)
        total = total + schur(lam) * coeff
        remaining = remaining - schur(lam).expand_in_vars(num_vars).with_vars(
            remaining.vars
        ) * coeff
    return total
