"""The symmetric-function side of the Peterson map.

tau_i = g_{R_i} and sigma_i = sum of g_mu over mu inside R_i are the
denominators of the substitution homomorphism

    z_i |-> tau_i sigma_{i-1} / (sigma_i tau_{i-1}),
    Q_i |-> tau_{i-1} tau_{i+1} / tau_i^2,

with x_i = 1 - z_i.  Images are carried as localized fractions: a numerator
polynomial in h_1..h_{n-1} and a denominator kept in factored form as a
monomial in {tau_i, sigma_i}, reduced eagerly by exact division.  The
D-determinant family (truncated-series minors), its recursions, the kappa_d
involution, and the skew-operator identities complete the toolkit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .grothendieck import dual_groth
from .matrices import RingMatrix
from .partitions import Partition, partitions_in_rectangle
from .polynomials import Poly
from .scalars import Rational
from .symfunc import SymFrac, SymFunc, from_p_dict, p_perp, perp, schur, to_p_dict

__all__ = [
    "TauSigmaTable",
    "DSpec",
    "tau_sigma",
    "d_det",
    "kappa",
    "kappa_p",
    "PhiContext",
    "phi_context",
    "phi_table",
    "phi_apply",
    "d_recursion_check",
    "d_base_check",
    "sigma_identity_check",
    "kernel_det_identity",
    "perp_d_check",
    "skew_rectangle_check",
]


@dataclass(frozen=True)
class TauSigmaTable:
    n: int
    tau: tuple  # tau_0 .. tau_n
    sigma: tuple  # sigma_0 .. sigma_n


@lru_cache(maxsize=None)
def tau_sigma(n: int) -> TauSigmaTable:
    """tau_i = g_{R_i}, sigma_i = sum_{mu in R_i} g_mu, boundary values 1."""
    if n < 2:
        raise ValueError("need n >= 2")
    tau = [SymFunc.one()]
    sigma = [SymFunc.one()]
    for i in range(1, n):
        tau.append(dual_groth(Partition.rectangle(i, n - i)))
        total = SymFunc.zero()
        for mu in partitions_in_rectangle(i, n - i):
            total = total + dual_groth(mu)
        sigma.append(total)
    tau.append(SymFunc.one())
    sigma.append(SymFunc.one())
    return TauSigmaTable(n, tuple(tau), tuple(sigma))


# -- the D-determinant family ---------------------------------------------------


@dataclass(frozen=True)
class DSpec:
    """Column data for D[theta_1..theta_d; a_1..a_d] at level n."""

    theta: tuple
    a: tuple
    n: int

    def __post_init__(self):
        if len(self.theta) != len(self.a):
            raise ValueError("theta and a must have equal length")
        if len(self.theta) > self.n:
            raise ValueError("d must be at most n")
        if any(ai < 0 for ai in self.a):
            raise ValueError("a_i must be non-negative")

    @property
    def d(self) -> int:
        return len(self.theta)

    def replace_theta(self, j: int, value: int) -> "DSpec":
        theta = list(self.theta)
        theta[j] = value
        return DSpec(tuple(theta), self.a, self.n)

    def replace_a(self, j: int, value: int) -> "DSpec":
        a = list(self.a)
        a[j] = value
        return DSpec(self.theta, tuple(a), self.n)

    def swap_columns(self, i: int, j: int) -> "DSpec":
        theta, a = list(self.theta), list(self.a)
        theta[i], theta[j] = theta[j], theta[i]
        a[i], a[j] = a[j], a[i]
        return DSpec(tuple(theta), tuple(a), self.n)


def _geom_series_coeffs(theta: int, n: int):
    """Coefficients of (1-v)^{-theta} up to v^{n-1} (integer list)."""
    if theta == 0:
        return [1] + [0] * (n - 1)
    if theta > 0:
        return [comb(theta + l - 1, l) for l in range(n)]
    m = -theta
    return [((-1) ** l) * comb(m, l) if l <= m else 0 for l in range(n)]


@lru_cache(maxsize=None)
def _d_det_cached(theta: tuple, a: tuple, n: int) -> SymFunc:
    d = len(theta)
    if d == 0:
        return SymFunc.one()
    phi = [SymFunc.h(i) for i in range(n)]
    columns = []
    for theta_j, a_j in zip(theta, a):
        series = _geom_series_coeffs(theta_j, n)
        col = []
        for m in range(n):
            entry = SymFunc.zero()
            for i in range(max(0, m - a_j) + 1):
                l = m - a_j - i
                if l >= 0 and series[l]:
                    entry = entry + phi[i] * series[l]
            col.append(entry)
        columns.append(col)
    rows = [[columns[j][n - d + i] for j in range(d)] for i in range(d)]
    det = RingMatrix(rows).det()
    sign = (-1) ** (d * (d - 1) // 2)
    return det * sign if sign < 0 else det


def d_det(spec: DSpec) -> SymFunc:
    """D[theta; a]: the bracket of the column functions
    (1-zeta)^{a_j} zeta^{-theta_j}, evaluated through the truncated-series
    expansion in u = 1 - zeta (zeta^{-m} = sum C(m+l-1, l) u^l).

    Always lands in Lambda_(n): only h_0..h_{n-1} can appear.
    """
    return _d_det_cached(spec.theta, spec.a, spec.n)


def d_plain(theta_vec, n: int) -> SymFunc:
    """D(theta_1, ..., theta_d) with all a_i = 0."""
    theta_vec = tuple(theta_vec)
    return d_det(DSpec(theta_vec, (0,) * len(theta_vec), n))


# -- the kappa involution ----------------------------------------------------------


def kappa_p(d: int, i: int) -> dict:
    """kappa_d(p_i) as a p-dict: d - C(i,1)p_1 + C(i,2)p_2 - ... +/- p_i."""
    out = {(): Rational(d)} if d else {}
    for j in range(1, i + 1):
        out[(0,) * (j - 1) + (1,)] = Rational((-1) ** j * comb(i, j))
    return out


def kappa(d: int, f: SymFunc) -> SymFunc:
    """The ring endomorphism with kappa_d(p_i) as above; an involution."""
    total: dict = {}
    for exps, coeff in to_p_dict(f).items():
        term = {(): Rational(1)}
        for i, e in enumerate(exps, start=1):
            if e:
                image = kappa_p(d, i)
                for _ in range(e):
                    term = _pdict_mul(term, image)
        for key, value in term.items():
            s = total.get(key, 0) + coeff * value
            if s:
                total[key] = s
            else:
                total.pop(key, None)
    return from_p_dict(total)


def _pdict_mul(d1, d2):
    acc: dict = {}
    for e1, c1 in d1.items():
        for e2, c2 in d2.items():
            if len(e1) >= len(e2):
                e = tuple(a + b for a, b in zip(e1, e2)) + e1[len(e2):]
            else:
                e = tuple(a + b for a, b in zip(e1, e2)) + e2[len(e1):]
            s = acc.get(e, 0) + c1 * c2
            if s:
                acc[e] = s
            else:
                del acc[e]
    return acc


# -- localized fractions and the Phi_n homomorphism ----------------------------------


class LocFrac:
    """num / prod(factors^den) with eager exact-division reduction."""

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx, num: Poly, den: tuple, reduce: bool = True):
        if num.is_zero():
            den = (0,) * len(den)
        elif reduce:
            num, den = ctx._reduce(num, den)
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("LocFrac is immutable")

    def __mul__(self, other):
        ctx = self.ctx
        if isinstance(other, (int, Rational)):
            return LocFrac(ctx, self.num * other, self.den, reduce=False)
        return LocFrac(
            ctx,
            self.num * other.num,
            tuple(a + b for a, b in zip(self.den, other.den)),
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = self.ctx.one
        base = self
        for _ in range(k):
            result = result * base
        return result

    def __neg__(self):
        return LocFrac(self.ctx, -self.num, self.den, reduce=False)

    def __add__(self, other):
        ctx = self.ctx
        if isinstance(other, (int, Rational)):
            other = ctx.const(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        common = tuple(max(a, b) for a, b in zip(self.den, other.den))
        left = self.num * ctx.factor_product(
            tuple(c - a for c, a in zip(common, self.den))
        )
        right = other.num * ctx.factor_product(
            tuple(c - b for c, b in zip(common, other.den))
        )
        return LocFrac(ctx, left + right, common)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Rational)):
            other = self.ctx.const(other)
        return self + (-other)

    def __eq__(self, other):
        ctx = self.ctx
        if isinstance(other, (int, Rational)):
            other = ctx.const(other)
        if self.den == other.den:
            return self.num == other.num
        left = self.num * ctx.factor_product(other.den)
        right = other.num * ctx.factor_product(self.den)
        return left == right

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not any(self.den)

    def to_symfrac(self) -> SymFrac:
        return SymFrac(
            SymFunc.from_poly(self.num),
            SymFunc.from_poly(self.ctx.factor_product(self.den)),
        )

    def symfunc(self) -> SymFunc:
        if not self.is_polynomial():
            raise ValueError("denominator is non-trivial")
        return SymFunc.from_poly(self.num)

    def __repr__(self):
        den = "*".join(
            f"{name}^{e}" if e > 1 else name
            for name, e in zip(self.ctx.factor_names, self.den)
            if e
        )
        return f"LocFrac({self.num.to_str()} / {den or '1'})"


class PhiContext:
    """Everything needed to apply Phi_n: the tau/sigma factor basis as
    h-polynomials and the generator images as localized fractions."""

    def __init__(self, n: int):
        self.n = n
        table = tau_sigma(n)
        self.table = table
        names, factors = [], []
        for i in range(1, n):
            names.append(f"tau{i}")
            factors.append(table.tau[i].to_poly(n))
        for i in range(1, n):
            names.append(f"sigma{i}")
            factors.append(table.sigma[i].to_poly(n))
        self.factor_names = tuple(names)
        self.factors = tuple(factors)
        self.hvars = tuple(f"h{i}" for i in range(1, n))
        self._power_cache: dict = {}
        self._product_cache: dict = {}
        k = len(self.factors)
        self.one = LocFrac(self, Poly.const(self.hvars, 1), (0,) * k, reduce=False)
        self.zero = LocFrac(self, Poly.zero(self.hvars), (0,) * k, reduce=False)
        self._images = self._build_images()
        self._image_powers: dict = {}
        self._zq_contrib = self._build_contrib()

    # factor index helpers: tau_i at i-1, sigma_i at n-2+i (units skipped)
    def _den_unit(self):
        return (0,) * len(self.factors)

    def _den(self, taus=(), sigmas=()):
        den = [0] * len(self.factors)
        for i in taus:
            if 1 <= i <= self.n - 1:
                den[i - 1] += 1
        for i in sigmas:
            if 1 <= i <= self.n - 1:
                den[self.n - 2 + i] += 1
        return tuple(den)

    def _sym(self, f: SymFunc) -> Poly:
        return f.to_poly(self.n)

    def const(self, value) -> LocFrac:
        return LocFrac(
            self, Poly.const(self.hvars, value), self._den_unit(), reduce=False
        )

    def from_symfunc(self, f: SymFunc) -> LocFrac:
        return LocFrac(self, self._sym(f), self._den_unit(), reduce=False)

    def _build_images(self) -> dict:
        n, table = self.n, self.table
        images = {}
        for i in range(1, n + 1):
            num = self._sym(table.tau[i] * table.sigma[i - 1])
            den = self._den(
                taus=[i - 1] if i - 1 >= 1 else [], sigmas=[i] if i <= n - 1 else []
            )
            images[f"z{i}"] = LocFrac(self, num, den)
        for i in range(1, n):
            num = self._sym(table.tau[i - 1] * table.tau[i + 1])
            images[f"Q{i}"] = LocFrac(self, num, self._den(taus=[i, i]))
        for i in range(1, n + 1):
            images[f"x{i}"] = self.one - images[f"z{i}"]
        return images

    def _build_contrib(self) -> dict:
        """Factor-exponent contributions of z_i and Q_i (their images are
        monomials in the tau/sigma factors, units dropped)."""
        n = self.n
        contrib = {}

        def tau_idx(i):
            return i - 1 if 1 <= i <= n - 1 else None

        def sigma_idx(i):
            return n - 2 + i if 1 <= i <= n - 1 else None

        for i in range(1, n + 1):
            entries = []
            for idx, mult in (
                (tau_idx(i), 1),
                (sigma_idx(i - 1), 1),
                (sigma_idx(i), -1),
                (tau_idx(i - 1), -1),
            ):
                if idx is not None:
                    entries.append((idx, mult))
            contrib[f"z{i}"] = tuple(entries)
        for i in range(1, n):
            entries = []
            for idx, mult in (
                (tau_idx(i - 1), 1),
                (tau_idx(i + 1), 1),
                (tau_idx(i), -2),
            ):
                if idx is not None:
                    entries.append((idx, mult))
            contrib[f"Q{i}"] = tuple(entries)
        return contrib

    def image(self, name: str) -> LocFrac:
        try:
            return self._images[name]
        except KeyError:
            raise ValueError(f"Phi_{self.n} has no image for variable {name!r}")

    def image_power(self, name: str, e: int) -> LocFrac:
        key = (name, e)
        if key not in self._image_powers:
            if e == 1:
                self._image_powers[key] = self.image(name)
            else:
                self._image_powers[key] = self.image_power(name, e - 1) * self.image(
                    name
                )
        return self._image_powers[key]

    def factor_power(self, idx: int, e: int) -> Poly:
        key = (idx, e)
        if key not in self._power_cache:
            if e == 0:
                self._power_cache[key] = Poly.const(self.hvars, 1)
            else:
                self._power_cache[key] = (
                    self.factor_power(idx, e - 1) * self.factors[idx]
                )
        return self._power_cache[key]

    def factor_product(self, exps: tuple) -> Poly:
        exps = tuple(exps)
        if exps not in self._product_cache:
            result = Poly.const(self.hvars, 1)
            for idx, e in enumerate(exps):
                if e:
                    result = result * self.factor_power(idx, e)
            self._product_cache[exps] = result
        return self._product_cache[exps]

    def _reduce(self, num: Poly, den: tuple):
        den = list(den)
        for idx in range(len(den)):
            while den[idx] > 0:
                q = num.exact_div(self.factors[idx])
                if q is None:
                    break
                num = q
                den[idx] -= 1
        return num, tuple(den)

    def apply_frac(self, p: Poly, reduce_result: bool = True) -> LocFrac:
        """Image of a polynomial in z_i / x_i / Q_i under Phi_n."""
        used = [v for v in p.vars if p.degree_in(v) > 0]
        for v in used:
            if v not in self._images:
                raise ValueError(f"variable {v!r} not in the domain of Phi_{self.n}")
        if all(v[0] in "zQ" for v in used):
            return self._apply_monomial(p, reduce_result)
        total = self.zero
        for exps, coeff in p.sorted_terms():
            term = None
            for v, e in zip(p.vars, exps):
                if not e:
                    continue
                factor = self.image_power(v, e)
                term = factor if term is None else term * factor
            term = self.const(coeff) if term is None else term * coeff
            total = total + term
        if reduce_result and not total.num.is_zero():
            num, den = self._reduce(total.num, total.den)
            total = LocFrac(self, num, den, reduce=False)
        return total

    def _apply_monomial(self, p: Poly, reduce_result: bool) -> LocFrac:
        """Fast path: every z^a Q^b monomial maps to a monomial in the
        tau/sigma factors, so the image is assembled over one common
        factored denominator with no division at all."""
        k = len(self.factors)
        contrib = self._zq_contrib
        gmap: dict = {}
        for exps, coeff in p.terms.items():
            g = [0] * k
            for v, e in zip(p.vars, exps):
                if e:
                    for idx, mult in contrib[v]:
                        g[idx] += mult * e
            key = tuple(g)
            s = gmap.get(key, 0) + coeff
            if s:
                gmap[key] = s
            else:
                del gmap[key]
        if not gmap:
            return self.zero
        common = [0] * k
        for g in gmap:
            for j in range(k):
                if -g[j] > common[j]:
                    common[j] = -g[j]
        common = tuple(common)
        num = Poly.zero(self.hvars)
        for g, coeff in sorted(gmap.items()):
            term = Poly.const(self.hvars, coeff)
            for idx, e in enumerate(tuple(a + b for a, b in zip(g, common))):
                for _ in range(e):
                    term = term * self.factors[idx]
            num = num + term
        return LocFrac(self, num, common, reduce=reduce_result)

    def apply(self, p: Poly) -> SymFrac:
        return self.apply_frac(p).to_symfrac()


@lru_cache(maxsize=None)
def phi_context(n: int) -> PhiContext:
    return PhiContext(n)


def phi_table(n: int) -> dict:
    """Generator images {z_i: SymFrac, Q_i: SymFrac} of Phi_n."""
    ctx = phi_context(n)
    out = {}
    for i in range(1, n + 1):
        out[f"z{i}"] = ctx.image(f"z{i}").to_symfrac()
    for i in range(1, n):
        out[f"Q{i}"] = ctx.image(f"Q{i}").to_symfrac()
    return out


def phi_apply(p: Poly, n: int) -> SymFrac:
    """Apply the substitution homomorphism Phi_n to a polynomial in the
    z/x/Q variables; exact, denominators are tau/sigma monomials."""
    return phi_context(n).apply(p)


# -- identity checks -----------------------------------------------------------------


def d_recursion_check(spec: DSpec) -> bool:
    """Column antisymmetry, the theta/a exchange recursion, and the a_i = n
    vanishing rule, all against direct evaluation."""
    value = d_det(spec)
    d, n = spec.d, spec.n
    for j in range(d - 1):
        if d_det(spec.swap_columns(j, j + 1)) != -value:
            return False
    for j in range(d):
        lowered = d_det(spec.replace_theta(j, spec.theta[j] - 1))
        raised = d_det(spec.replace_a(j, spec.a[j] + 1))
        if lowered + raised != value:
            return False
    for j in range(d):
        if not d_det(spec.replace_a(j, n)).is_zero():
            return False
    if any(ai >= n for ai in spec.a) and not value.is_zero():
        return False
    return True


def d_base_check(lam: Partition, d: int, n: int) -> bool:
    """D[0..0; n-lambda_d-1, ..., n-lambda_1-d] equals the Schur function."""
    if not lam.fits_in(d, n - d):
        raise ValueError("lambda must fit in the d x (n-d) rectangle")
    a = tuple(n - j - lam.part(d + 1 - j) for j in range(1, d + 1))
    return d_det(DSpec((0,) * d, a, n)) == schur(lam)


def kernel_value(theta: int, a: int, i: int) -> int:
    """Binomial path count K^theta_{a,i} = C(i-a+theta-1, theta-1); for
    theta = 0 the empty path exists only when a = i."""
    if theta == 0:
        return 1 if a == i else 0
    m, k = i - a + theta - 1, theta - 1
    if m < 0 or k < 0 or m < k:
        return 0
    return comb(m, k)


def kernel_det_identity(n: int, d: int, i_vec: tuple) -> bool:
    """det(K^{d-l+1}_{d-l, i_m}) = sum over n > a_1 > ... > a_d >= 0 of
    det(K^{d-l}_{a_l, i_m}), for a fixed decreasing index vector."""
    lhs = RingMatrix(
        [
            [Rational(kernel_value(d - l + 1, d - l, i_vec[m - 1])) for m in range(1, d + 1)]
            for l in range(1, d + 1)
        ]
    ).det()
    rhs = Rational(0)
    for a_vec in combinations(range(n - 1, -1, -1), d):
        rhs += RingMatrix(
            [
                [
                    Rational(kernel_value(d - l, a_vec[l - 1], i_vec[m - 1]))
                    for m in range(1, d + 1)
                ]
                for l in range(1, d + 1)
            ]
        ).det()
    return lhs == rhs


def sigma_identity_check(n: int, d: int) -> bool:
    """The lattice-path identity pair: D[d..1; d-1..0] equals the sum of
    D[d-1..0; a] over strictly decreasing a, and the binomial-kernel
    determinant identity over every decreasing index vector in [0, n)."""
    if not 1 <= d <= n - 1:
        raise ValueError("need 1 <= d <= n-1")
    lhs = d_det(
        DSpec(tuple(range(d, 0, -1)), tuple(range(d - 1, -1, -1)), n)
    )
    rhs = SymFunc.zero()
    theta = tuple(range(d - 1, -1, -1))
    for a_vec in combinations(range(n - 1, -1, -1), d):
        rhs = rhs + d_det(DSpec(theta, a_vec, n))
    if lhs != rhs:
        return False
    return all(
        kernel_det_identity(n, d, i_vec)
        for i_vec in combinations(range(n - 1, -1, -1), d)
    )


def perp_d_check(i: int, d: int, spec: DSpec) -> bool:
    """p_i-perp shifts one a_j by i; kappa_d(p_i)-perp lowers one theta_j by
    i.  Both checked against direct evaluation."""
    if spec.d != d:
        raise ValueError("spec size differs from d")
    value = d_det(spec)
    lhs_p = p_perp(i, value)
    rhs_p = SymFunc.zero()
    for j in range(d):
        rhs_p = rhs_p + d_det(spec.replace_a(j, spec.a[j] + i))
    if lhs_p != rhs_p:
        return False
    lhs_k = perp(from_p_dict(kappa_p(d, i)), value)
    rhs_k = SymFunc.zero()
    for j in range(d):
        rhs_k = rhs_k + d_det(spec.replace_theta(j, spec.theta[j] - i))
    return lhs_k == rhs_k


def skew_rectangle_check(lam: Partition, d: int, n: int) -> bool:
    """kappa_d(s_lambda)-perp applied to g_{R_d} equals
    D(d-i_1, ..., d-i_d) with i_a = lambda_{d+1-a} + a."""
    if not lam.fits_in(d, n - d):
        raise ValueError("lambda must fit in the d x (n-d) rectangle")
    lhs = perp(kappa(d, schur(lam)), tau_sigma(n).tau[d])
    theta = tuple(d - (lam.part(d + 1 - a) + a) for a in range(1, d + 1))
    return lhs == d_det(DSpec(theta, (0,) * d, n))
