"""Grothendieck polynomials, the quantization map, and the lambda-map.

Grothendieck polynomials are built by isobaric divided differences from the
staircase monomial; the quantization map rewrites a polynomial over the
f-monomial basis (products of elementary symmetric polynomials in 1-x_1,
..., 1-x_j) and replaces each basis element by its Q-deformation F^(j)_i.
The images under the Peterson map are computed through the same basis:
phi(G^Q_w) is the coefficient vector of G_w against cached images of the
F-monomials, which keeps the n=5 sweeps fast and exact.

The lambda-map factors w (normalized to w(1)=1 by the long cycle) into
cyclic permutations c_1^{m_1} ... c_{n-2}^{m_{n-2}}, applied right to left;
the k-conjugate goes through the (k+1)-core bijection.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .matrices import RingMatrix
from .partitions import Partition, conjugate
from .peterson import LocFrac, phi_context, tau_sigma
from .polynomials import Poly, xq_vars, zq_vars
from .scalars import Rational
from .symfunc import SymFrac, SymFunc

__all__ = [
    "groth_poly",
    "pi_op",
    "fq_poly",
    "quantize",
    "quantum_groth",
    "s_q_poly",
    "grassmannian_perm",
    "KBoundedPartition",
    "lambda_map",
    "k_conjugate",
    "g_tilde",
    "phi_groth_image",
    "NotInSpanError",
    "NonPolynomialImageError",
]


class NotInSpanError(ValueError):
    """The polynomial does not lie in the f-monomial span L_n."""


class NonPolynomialImageError(ValueError):
    """phi(G^Q_w) times the descent tau-product failed to be polynomial."""


# -- Grothendieck polynomials ------------------------------------------------------


def pi_op(f: Poly, i: int) -> Poly:
    """Isobaric divided difference pi_i f = ((1-x_{i+1})f - (1-x_i)s_i f)
    / (x_i - x_{i+1})."""
    xi = Poly.variable(f.vars, f"x{i}")
    xi1 = Poly.variable(f.vars, f"x{i + 1}")
    swapped = f.swap_vars(f"x{i}", f"x{i + 1}")
    numerator = (1 - xi1) * f - (1 - xi) * swapped
    quotient = numerator.exact_div(xi - xi1)
    assert quotient is not None, "isobaric divided difference must divide"
    return quotient


@lru_cache(maxsize=None)
def groth_poly(w) -> Poly:
    """The Grothendieck polynomial of w, over x1..xn.

    Computed from the staircase monomial for the longest element by applying
    pi down any reduced path (the result is word-independent); the canonical
    path takes the smallest ascent at each step.
    """
    n = w.n
    variables = tuple(f"x{i}" for i in range(1, n + 1))
    if w == w.longest(n):
        exps = tuple(n - i for i in range(1, n + 1))
        return Poly.monomial(variables, exps)
    for i in range(1, n):
        if w(i) < w(i + 1):
            return pi_op(groth_poly(w.times_s(i)), i)
    raise AssertionError("unreachable: only the longest element has no ascent")


# -- quantization -------------------------------------------------------------------


@lru_cache(maxsize=None)
def fq_poly(n: int, m: int, i: int) -> Poly:
    """F^(m)_i over x1..xn, Q1..Q_{n-1}: sum over i-subsets I of {1..m} of
    prod_{j in I} (1-x_j) prod_{j in I, j+1 not in I} (1-Q_j), Q_n = 0."""
    if not (1 <= m <= n and 0 <= i):
        raise ValueError("need 1 <= m <= n and i >= 0")
    variables = xq_vars(n)
    total = Poly.zero(variables)
    if i > m:
        return total
    for subset in combinations(range(1, m + 1), i):
        chosen = set(subset)
        term = Poly.const(variables, 1)
        for j in subset:
            term = term * (1 - Poly.variable(variables, f"x{j}"))
            if j + 1 not in chosen and j != n:
                term = term * (1 - Poly.variable(variables, f"Q{j}"))
        total = total + term
    return total


@lru_cache(maxsize=None)
def fq_poly_z(n: int, m: int, i: int) -> Poly:
    """F^(m)_i written in the z/Q variables (z_j = 1 - x_j); this form is a
    sum of plain monomials, which the Peterson map evaluates fastest."""
    variables = zq_vars(n)
    total = Poly.zero(variables)
    if i > m:
        return total
    for subset in combinations(range(1, m + 1), i):
        chosen = set(subset)
        term = Poly.const(variables, 1)
        for j in subset:
            term = term * Poly.variable(variables, f"z{j}")
            if j + 1 not in chosen and j != n:
                term = term * (1 - Poly.variable(variables, f"Q{j}"))
        total = total + term
    return total


def _elem_one_minus_x(n: int, j: int):
    """e_0..e_j of (1-x_1, ..., 1-x_j) over x1..xn."""
    variables = tuple(f"x{i}" for i in range(1, n + 1))
    table = [Poly.const(variables, 1)]
    for t in range(1, j + 1):
        y = 1 - Poly.variable(variables, f"x{t}")
        new = []
        for i in range(t + 1):
            entry = table[i] if i < len(table) else Poly.zero(variables)
            if i > 0:
                entry = entry + y * table[i - 1]
            new.append(entry)
        table = new
    return table


class QuantizeContext:
    """The f-monomial basis of the staircase span and its inverse."""

    def __init__(self, n: int):
        self.n = n
        self.xvars = tuple(f"x{i}" for i in range(1, n + 1))
        self.basis = list(product(*[range(j + 1) for j in range(1, n)]))
        self.staircase = [
            e + (0,)
            for e in product(*[range(n - j + 1) for j in range(1, n)])
        ]
        self.stair_index = {e: i for i, e in enumerate(self.staircase)}
        elem = [None] + [_elem_one_minus_x(n, j) for j in range(1, n)]
        self._f_factors = elem
        columns = []
        for exps in self.basis:
            poly = Poly.const(self.xvars, 1)
            for j, i in enumerate(exps, start=1):
                if i:
                    poly = poly * elem[j][i]
            columns.append(self._coords(poly))
        size = len(self.staircase)
        assert size == len(self.basis)
        matrix = RingMatrix(
            [[columns[c][r] for c in range(size)] for r in range(size)]
        )
        self.inverse = matrix.inverse()
        self._f_q_cache: dict = {}

    def _coords(self, p: Poly):
        vec = [Rational(0)] * len(self.staircase)
        for e, c in p.terms.items():
            idx = self.stair_index.get(e)
            if idx is None:
                raise NotInSpanError(
                    f"monomial with exponents {e} is outside the staircase span"
                )
            vec[idx] = c
        return vec

    def expand(self, p: Poly):
        """Coefficients of p over the f-monomial basis (same order as
        self.basis)."""
        for v in p.vars:
            if p.degree_in(v) > 0 and not v.startswith("x"):
                raise NotInSpanError(f"variable {v} is not allowed in L_n")
        vec = self._coords(p.with_vars(self.xvars))
        coords = []
        for row in self.inverse.rows:
            total = Rational(0)
            for a, b in zip(row, vec):
                if a and b:
                    total += a * b
            coords.append(total)
        return coords

    def f_q_monomial(self, exps) -> Poly:
        """The F-monomial prod_j F^(j)_{i_j} as a polynomial in x, Q."""
        exps = tuple(exps)
        if exps not in self._f_q_cache:
            poly = Poly.const(xq_vars(self.n), 1)
            for j, i in enumerate(exps, start=1):
                if i:
                    poly = poly * fq_poly(self.n, j, i)
            self._f_q_cache[exps] = poly
        return self._f_q_cache[exps]


@lru_cache(maxsize=None)
def quantize_context(n: int) -> QuantizeContext:
    return QuantizeContext(n)


def quantize(p: Poly, n: int) -> Poly:
    """The quantization map: expand p over the f-monomial basis and replace
    each basis monomial by the matching F-monomial.

    Raises NotInSpanError when p is not in the staircase span L_n.
    """
    ctx = quantize_context(n)
    coords = ctx.expand(p)
    total = Poly.zero(xq_vars(n))
    for coeff, exps in zip(coords, ctx.basis):
        if coeff:
            total = total + ctx.f_q_monomial(exps) * coeff
    return total


@lru_cache(maxsize=None)
def quantum_groth(w) -> Poly:
    """The quantum Grothendieck polynomial: quantized G_w.  Specializing
    every Q_i to 0 recovers G_w."""
    return quantize(groth_poly(w), w.n)


def s_q_poly(lam: Partition, d: int, n: int) -> Poly:
    """The quantized Schur determinant det(F^(d+j-1)_{lambda'_i - i + j})."""
    if not lam.fits_in(d, n - d):
        raise ValueError("lambda must fit in the d x (n-d) rectangle")
    lam_c = conjugate(lam)
    s = len(lam_c)
    if s == 0:
        return Poly.const(xq_vars(n), 1)
    rows = []
    for i in range(1, s + 1):
        rows.append(
            [
                fq_poly(n, d + j - 1, lam_c.part(i) - i + j)
                if lam_c.part(i) - i + j >= 0
                else Poly.zero(xq_vars(n))
                for j in range(1, s + 1)
            ]
        )
    return RingMatrix(rows).det()


# -- Grassmannian permutations and the lambda-map -------------------------------------


def grassmannian_perm(lam: Partition, d: int, n: int):
    """w_{lambda,d}: w(a) = lambda_{d+1-a} + a on 1..d, the complementary
    values in increasing order afterwards; descent set within {d}."""
    from .partitions import Permutation

    if not lam.fits_in(d, n - d):
        raise ValueError("lambda must fit in the d x (n-d) rectangle")
    head = [lam.part(d + 1 - a) + a for a in range(1, d + 1)]
    tail = [v for v in range(1, n + 1) if v not in set(head)]
    return Permutation(head + tail)


@dataclass(frozen=True)
class KBoundedPartition:
    """A partition with parts at most k, with its part multiplicities."""

    partition: Partition
    k: int

    def __post_init__(self):
        if self.partition.parts and self.partition.parts[0] > self.k:
            raise ValueError("parts must be at most k")

    def multiplicities(self) -> tuple:
        m = [0] * self.k
        for p in self.partition.parts:
            m[p - 1] += 1
        return tuple(m)

    def is_irreducible(self) -> bool:
        return all(m <= self.k - i for i, m in enumerate(self.multiplicities(), 1))


def lambda_map(w) -> KBoundedPartition:
    """Factor the w(1)=1 coset representative as c_1^{m_1}...c_{n-2}^{m_{n-2}}
    (composition right to left) and read off the partition
    (1^{m_1} 2^{m_2} ...)."""
    from .partitions import Permutation

    n = w.n
    k = n - 1
    c0 = Permutation.cycle(n, 0)
    t = (1 - w(1)) % n
    cur = (c0 ** t) * w
    assert cur(1) == 1
    parts = []
    for i in range(1, n - 1):
        m = cur(i + 1) - (i + 1)
        if not 0 <= m <= k - i:
            raise ValueError(f"no cyclic factorization at step {i}")
        cur = (Permutation.cycle(n, i) ** (-m)) * cur
        parts.extend([i] * m)
    if not cur.is_identity():
        raise ValueError("cyclic factorization did not terminate")
    parts.sort(reverse=True)
    return KBoundedPartition(Partition(parts), k)


# -- k-conjugation through (k+1)-cores --------------------------------------------------


def bounded_to_core(mu: Partition, k: int) -> Partition:
    """The (k+1)-core of a k-bounded partition: rows are placed bottom-up,
    each shifted right just enough that its rightmost mu_i cells have hooks
    at most k and the cells left of them have hooks at least k+2."""
    if mu.parts and mu.parts[0] > k:
        raise ValueError("not k-bounded")
    rows: list = []  # lengths, bottom row first

    def leg(j):
        return sum(1 for r in rows if r >= j)

    for part in reversed(mu.parts):
        shift = max(0, (rows[-1] if rows else 0) - part)
        while True:
            length = part + shift
            if (length - (shift + 1)) + leg(shift + 1) + 1 <= k and (
                shift == 0 or (length - shift) + leg(shift) + 1 >= k + 2
            ):
                break
            shift += 1
        rows.append(length)
    return Partition(reversed(rows))


def core_to_bounded(core: Partition, k: int) -> Partition:
    """Inverse direction: count the cells of hook length at most k per row."""
    parts = []
    ell = len(core)
    for i in range(1, ell + 1):
        count = 0
        for j in range(1, core.part(i) + 1):
            below = sum(1 for r in range(i + 1, ell + 1) if core.part(r) >= j)
            if (core.part(i) - j) + below + 1 <= k:
                count += 1
        parts.append(count)
    return Partition(parts)


def k_conjugate(mu: Partition, k: int) -> Partition:
    """The k-conjugate: transpose the (k+1)-core and come back.  An
    involution; the ordinary conjugate on partitions inside a rectangle R_d.
    """
    core = bounded_to_core(mu, k)
    assert core_to_bounded(core, k) == mu, "core bijection failed"
    return core_to_bounded(conjugate(core), k)


def k_conjugate_bounded(mu: KBoundedPartition) -> KBoundedPartition:
    return KBoundedPartition(k_conjugate(mu.partition, mu.k), mu.k)


# -- images under the Peterson map -------------------------------------------------------


@lru_cache(maxsize=None)
def phi_f_image(n: int, m: int, i: int) -> LocFrac:
    """phi(F^(m)_i), reduced."""
    return phi_context(n).apply_frac(fq_poly_z(n, m, i))


@lru_cache(maxsize=None)
def _phi_f_monomial(n: int, exps: tuple) -> LocFrac:
    ctx = phi_context(n)
    total = ctx.one
    for j, i in enumerate(exps, start=1):
        if i:
            total = total * phi_f_image(n, j, i)
    return total


@lru_cache(maxsize=None)
def phi_groth_image(w) -> LocFrac:
    """phi(G^Q_w) computed through the f-monomial expansion of G_w."""
    n = w.n
    coords = quantize_context(n).expand(groth_poly(w))
    ctx = phi_context(n)
    total = ctx.zero
    for coeff, exps in zip(coords, quantize_context(n).basis):
        if coeff:
            total = total + _phi_f_monomial(n, exps) * coeff
    return total


@lru_cache(maxsize=None)
def g_tilde(w) -> SymFunc:
    """The numerator of phi(G^Q_w) after clearing the descent-indexed tau
    denominators; certifies polynomiality by exact division.

    Raises NonPolynomialImageError if the image times prod_{i in Des(w)}
    tau_i is not a polynomial in Lambda_(n).
    """
    n = w.n
    ctx = phi_context(n)
    table = tau_sigma(n)
    image = phi_groth_image(w)
    for i in sorted(w.descents):
        image = image * ctx.from_symfunc(table.tau[i])
    if not image.is_polynomial():
        raise NonPolynomialImageError(
            f"phi(G^Q_{w.to_text()}) * tau(Des) has residual denominator"
        )
    return image.symfunc()


def phi_quantum_groth(w) -> SymFrac:
    """phi(G^Q_w) as an explicit fraction of symmetric functions."""
    return phi_groth_image(w).to_symfrac()


def phi_s_q_image(lam: Partition, d: int, n: int) -> LocFrac:
    """phi(S^Q_{lam,d}) computed as the determinant of the entrywise images
    of the quantized Schur matrix (phi is a ring homomorphism)."""
    if not lam.fits_in(d, n - d):
        raise ValueError("lambda must fit in the d x (n-d) rectangle")
    ctx = phi_context(n)
    lam_c = conjugate(lam)
    s = len(lam_c)
    if s == 0:
        return ctx.one
    rows = []
    for i in range(1, s + 1):
        row = []
        for j in range(1, s + 1):
            k = lam_c.part(i) - i + j
            row.append(phi_f_image(n, d + j - 1, k) if k >= 0 else ctx.zero)
        rows.append(row)
    return RingMatrix(rows).det()
