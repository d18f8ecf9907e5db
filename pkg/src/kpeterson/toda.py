"""Relativistic Toda Lax matrices and the alpha/beta correspondence.

A point of the phase space is (z, Q) with z_1...z_n = 1; its Lax matrix is
L = A B^{-1} with A upper bidiagonal (z_i diagonal, -1 superdiagonal) and B
unipotent lower bidiagonal (-Q_i z_i subdiagonal).  The spectral invariants
F_i, the companion matrix of the common characteristic polynomial, the T/S
determinant functions, and the Gauss and RU decompositions that realize the
correspondence between Lax matrices and polynomial classes phi all live
here, over exact rationals at concrete points and over polynomial or
symmetric-function coefficients symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .matrices import RingMatrix
from .polynomials import Poly, zq_vars
from .scalars import Rational, rat, rational_from_text, rational_to_text
from .symfunc import SymFunc

__all__ = [
    "TodaPoint",
    "SpectralParams",
    "TruncSeriesPhi",
    "DecompositionError",
    "YConditionError",
    "f_invariant",
    "lax_matrix",
    "lax_to_point",
    "char_minor_phi",
    "companion_matrix",
    "phi_of_companion",
    "ts_functions",
    "gauss_decompose",
    "ru_decompose",
    "alpha",
    "beta",
    "beta_full",
    "minor_formulas",
    "random_z_point",
    "random_unipotent_point",
    "gamma_of_point",
]


class DecompositionError(ValueError):
    """A required minor vanished; .index names the failing condition."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class YConditionError(ValueError):
    """A (Y_0)..(Y_3) condition failed; .condition names it."""

    def __init__(self, condition: str):
        super().__init__(f"condition {condition} fails")
        self.condition = condition


@dataclass(frozen=True)
class TodaPoint:
    n: int
    z: tuple
    Q: tuple

    def __post_init__(self):
        if len(self.z) != self.n or len(self.Q) != self.n - 1:
            raise ValueError("wrong component counts")
        prod = Rational(1)
        for zi in self.z:
            prod = prod * zi
        if prod != 1:
            raise ValueError("z_1...z_n must equal 1")

    def in_open_part(self) -> bool:
        """True on Z-degree-zero locus: all Q_i non-zero."""
        return all(self.Q)

    def to_json(self):
        return {
            "n": self.n,
            "z": [rational_to_text(v) for v in self.z],
            "Q": [rational_to_text(v) for v in self.Q],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["n"],
            tuple(rational_from_text(v) for v in data["z"]),
            tuple(rational_from_text(v) for v in data["Q"]),
        )


@dataclass(frozen=True)
class SpectralParams:
    gamma: tuple  # (gamma_1, ..., gamma_n), gamma_n = 1

    def __post_init__(self):
        if not self.gamma or self.gamma[-1] != 1:
            raise ValueError("gamma_n must be 1")

    @property
    def n(self) -> int:
        return len(self.gamma)

    @classmethod
    def unipotent(cls, n: int) -> "SpectralParams":
        return cls(tuple(Rational(comb(n, i)) for i in range(1, n + 1)))

    def is_unipotent(self) -> bool:
        n = self.n
        return all(self.gamma[i - 1] == comb(n, i) for i in range(1, n + 1))

    def char_poly_coeffs(self):
        """Ascending coefficients of zeta^n + sum (-1)^i gamma_i zeta^{n-i}."""
        n = self.n
        coeffs = [Rational(0)] * (n + 1)
        coeffs[n] = Rational(1)
        for i in range(1, n + 1):
            coeffs[n - i] = rat(self.gamma[i - 1]) * (-1) ** i
        return coeffs


class TruncSeriesPhi:
    """A polynomial class of degree <= n-1, stored through the coordinates
    c_0..c_{n-1} with phi = sum (-1)^i c_i (zeta-1)^i.  Coefficients are
    Rational or SymFunc."""

    __slots__ = ("n", "c")

    def __init__(self, n: int, c):
        c = tuple(c)
        if len(c) != n:
            raise ValueError("need exactly n coordinates")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeriesPhi is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, TruncSeriesPhi)
            and self.n == other.n
            and all(a == b for a, b in zip(self.c, other.c))
        )

    def __repr__(self):
        return f"TruncSeriesPhi(n={self.n}, c={list(self.c)})"

    @classmethod
    def from_zeta_coeffs(cls, n: int, coeffs) -> "TruncSeriesPhi":
        """From ascending coefficients of phi(zeta), degree <= n-1."""
        coeffs = list(coeffs) + [0] * (n - len(list(coeffs)))
        coeffs = (list(coeffs))[:n]
        c = []
        for i in range(n):
            total = None
            for j in range(i, n):
                term = coeffs[j] * comb(j, i)
                total = term if total is None else total + term
            c.append(total * (-1) ** i if i % 2 else total)
        return cls(n, c)

    def to_zeta_coeffs(self):
        """Ascending coefficients of phi(zeta)."""
        n = self.n
        out = []
        for j in range(n):
            total = None
            for i in range(j, n):
                term = self.c[i] * comb(i, j)
                total = term if total is None else total + term
            out.append(total * (-1) ** j if j % 2 else total)
        return out

    @classmethod
    def symbolic_unipotent(cls, n: int) -> "TruncSeriesPhi":
        """The symmetric-function specialization c_i/c_0 = h_i with c_0 = 1."""
        return cls(n, [SymFunc.h(i) for i in range(n)])

    def scaled(self, factor) -> "TruncSeriesPhi":
        return TruncSeriesPhi(self.n, [ci * factor for ci in self.c])

    def normalized(self) -> "TruncSeriesPhi":
        """Monic representative (top zeta-coefficient 1); rational only."""
        top = self.to_zeta_coeffs()[-1]
        if not top:
            raise YConditionError("Y1")
        return self.scaled(Rational(1) / top)

    def is_symbolic(self) -> bool:
        return any(isinstance(ci, SymFunc) for ci in self.c)


# -- spectral invariants -------------------------------------------------------


@lru_cache(maxsize=None)
def f_invariant(n: int, i: int) -> Poly:
    """F_i(z, Q) = sum over i-subsets I of prod_{j in I} z_j
    prod_{j in I, j+1 not in I} (1 - Q_j), with Q_n = 0."""
    if not 1 <= i <= n:
        raise ValueError("need 1 <= i <= n")
    variables = zq_vars(n)
    total = Poly.zero(variables)
    for subset in combinations(range(1, n + 1), i):
        chosen = set(subset)
        term = Poly.const(variables, 1)
        for j in subset:
            term = term * Poly.variable(variables, f"z{j}")
            if j + 1 not in chosen and j != n:
                term = term * (1 - Poly.variable(variables, f"Q{j}"))
        total = total + term
    return total


def gamma_of_point(pt: TodaPoint) -> SpectralParams:
    point = _point_values(pt)
    return SpectralParams(
        tuple(f_invariant(pt.n, i).evaluate(point) for i in range(1, pt.n + 1))
    )


def _point_values(pt: TodaPoint) -> dict:
    vals = {f"z{i}": pt.z[i - 1] for i in range(1, pt.n + 1)}
    vals.update({f"Q{i}": pt.Q[i - 1] for i in range(1, pt.n)})
    return vals


# -- Lax matrices ---------------------------------------------------------------


def lax_ab(pt: TodaPoint):
    n = pt.n
    A = [[Rational(0)] * n for _ in range(n)]
    B = [[Rational(0)] * n for _ in range(n)]
    for i in range(n):
        A[i][i] = rat(pt.z[i])
        if i + 1 < n:
            A[i][i + 1] = Rational(-1)
        B[i][i] = Rational(1)
    for i in range(n - 1):
        B[i + 1][i] = -rat(pt.Q[i]) * rat(pt.z[i])
    return RingMatrix(A), RingMatrix(B)


def lax_matrix(pt: TodaPoint) -> RingMatrix:
    """L = A B^{-1}; B is unipotent lower bidiagonal so B^{-1} is exact."""
    n = pt.n
    A, _ = lax_ab(pt)
    binv = [[Rational(0)] * n for _ in range(n)]
    for j in range(n):
        binv[j][j] = Rational(1)
        prod = Rational(1)
        for i in range(j + 1, n):
            prod = prod * rat(pt.Q[i - 1]) * rat(pt.z[i - 1])
            binv[i][j] = prod
    return A * RingMatrix(binv)


def lax_to_point(L: RingMatrix) -> TodaPoint:
    """Recover (z, Q) from a Lax matrix via M = L^{-1}: Q_i = -M_{i+1,i}
    and z_i = M_{1,i-1}/M_{1,i} (first row of M telescopes 1/(z_1..z_i))."""
    n = L.nrows
    M = L.inverse()
    z = []
    prev = Rational(1)
    for i in range(1, n + 1):
        cur = M[1, i]
        if not cur:
            raise ValueError("Lax matrix outside the parametrized locus")
        z.append(prev / cur)
        prev = cur
    Q = tuple(-M[i + 1, i] for i in range(1, n))
    return TodaPoint(n, tuple(z), Q)


def char_minor_phi(pt: TodaPoint) -> Poly:
    """The (1,1) minor Delta_{1,1} of zeta*B - A, a monic polynomial of
    degree n-1 in zeta."""
    n = pt.n
    A, B = lax_ab(pt)
    variables = ("zeta",)
    zeta = Poly.variable(variables, "zeta")
    rows = []
    for i in range(2, n + 1):
        rows.append(
            [zeta * B[i, j] - A[i, j] for j in range(2, n + 1)]
        )
    if not rows:
        return Poly.const(variables, 1)
    return RingMatrix(rows).det()


def char_minor_phi_symbolic(n: int) -> Poly:
    """Delta_{1,1} over the symbolic z/Q polynomial ring with zeta."""
    variables = ("zeta",) + zq_vars(n)
    zeta = Poly.variable(variables, "zeta")
    one = Poly.const(variables, 1)
    rows = []
    for i in range(2, n + 1):
        row = []
        for j in range(2, n + 1):
            b = one if i == j else Poly.zero(variables)
            if i == j + 1:
                b = -Poly.variable(variables, f"Q{j}") * Poly.variable(
                    variables, f"z{j}"
                )
            a = Poly.zero(variables)
            if i == j:
                a = Poly.variable(variables, f"z{i}")
            elif j == i + 1:
                a = -one
            row.append(zeta * b - a)
        rows.append(row)
    if not rows:
        return one
    return RingMatrix(rows).det()


def lax_matrix_symbolic(n: int) -> RingMatrix:
    """L = A B^{-1} over the z/Q polynomial ring (B^{-1} is polynomial)."""
    variables = zq_vars(n)
    zero = Poly.zero(variables)
    one = Poly.const(variables, 1)

    def z(i):
        return Poly.variable(variables, f"z{i}")

    def q(i):
        return Poly.variable(variables, f"Q{i}")

    A = [[zero] * n for _ in range(n)]
    for i in range(1, n + 1):
        A[i - 1][i - 1] = z(i)
        if i < n:
            A[i - 1][i] = -one
    binv = [[zero] * n for _ in range(n)]
    for j in range(1, n + 1):
        binv[j - 1][j - 1] = one
        prod = one
        for i in range(j + 1, n + 1):
            prod = prod * q(i - 1) * z(i - 1)
            binv[i - 1][j - 1] = prod
    return RingMatrix(A) * RingMatrix(binv)


# -- companion matrix and T/S determinants ----------------------------------------


def companion_matrix(params: SpectralParams) -> RingMatrix:
    """C_gamma = J + sum (-1)^{i-1} gamma_i E_{n, n-i+1}."""
    n = params.n
    rows = [[Rational(0)] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i][i + 1] = Rational(1)
    for i in range(1, n + 1):
        rows[n - 1][n - i] = rat(params.gamma[i - 1]) * (-1) ** (i - 1)
    return RingMatrix(rows)


def phi_of_companion(phi: TruncSeriesPhi, params: SpectralParams) -> RingMatrix:
    """phi(C_gamma), over the coefficient ring of phi."""
    n = phi.n
    if params.n != n:
        raise ValueError("size mismatch")
    coeffs = phi.to_zeta_coeffs()
    C = companion_matrix(params)
    power = RingMatrix.identity(n, Rational(1), Rational(0))
    rows = [[coeffs[0] * (1 if i == j else 0) for j in range(n)] for i in range(n)]
    for k in range(1, n):
        power = power * C
        for i in range(n):
            for j in range(n):
                if power.rows[i][j]:
                    rows[i][j] = rows[i][j] + coeffs[k] * power.rows[i][j]
    return RingMatrix(rows)


def _poly_mod(coeffs, modulus):
    """Reduce an ascending coefficient list modulo a monic modulus list."""
    coeffs = list(coeffs)
    deg_m = len(modulus) - 1
    while len(coeffs) > deg_m:
        lead = coeffs[-1]
        if lead:
            shift = len(coeffs) - 1 - deg_m
            for k in range(deg_m + 1):
                coeffs[shift + k] = coeffs[shift + k] - lead * modulus[k]
        coeffs.pop()
    return coeffs


def ts_functions(phi: TruncSeriesPhi, params: SpectralParams, cmap: str = "auto"):
    """The tau-function determinants T_1..T_n, S_1..S_n of phi.

    Columns are the coordinates of phi*zeta^j (j < i) padded with the
    coordinates of basis powers; the coordinate map is admissible (basis
    determinant 1): the remainder map for any gamma, or the (zeta-1)-power
    map (with its sign normalization) in the unipotent case.  Both maps give
    identical values; rescaling phi by a constant c multiplies T_i and S_i
    by c^i.
    """
    n = phi.n
    if params.n != n:
        raise ValueError("size mismatch")
    if cmap == "auto":
        cmap = "zeta1" if params.is_unipotent() else "remainder"
    symbolic = phi.is_symbolic()
    zero = SymFunc.zero() if symbolic else Rational(0)
    one = SymFunc.one() if symbolic else Rational(1)

    def pad(lst):
        return list(lst) + [zero] * (n - len(lst))

    if cmap == "remainder":
        modulus = params.char_poly_coeffs()
        cur = pad(phi.to_zeta_coeffs())
        b = []
        for _ in range(n):
            b.append(list(cur))
            cur = _poly_mod([zero] + cur, modulus)
            cur = pad(cur)
        a = [[one if k == j else zero for k in range(n)] for j in range(n)]
        sign = 1
    elif cmap == "zeta1":
        if not params.is_unipotent():
            raise ValueError("the (zeta-1) coordinate map needs unipotent gamma")
        # work in u = zeta - 1; the class lives in coefficients mod u^n
        cur = [ci * ((-1) ** i if i % 2 else 1) for i, ci in enumerate(pad(phi.c))]
        b = []
        for j in range(n):
            coords = [ci * ((-1) ** i if i % 2 else 1) for i, ci in enumerate(cur)]
            b.append(coords)
            # multiply by zeta = 1 + u, truncated at u^n
            cur = [
                cur[k] + (cur[k - 1] if k else zero) for k in range(n)
            ]
        a = [
            [((-1) ** k) * comb(j, k) * one for k in range(n)] for j in range(n)
        ]
        sign = (-1) ** (n * (n - 1) // 2)
    else:
        raise ValueError(f"unknown coordinate map {cmap!r}")

    def det_of(columns):
        rows = [[col[k] for col in columns] for k in range(n)]
        d = RingMatrix(rows).det()
        return d * sign if sign < 0 else d

    T = [det_of(b[:i] + a[i - 1 : n - 1]) for i in range(1, n + 1)]
    S = [det_of(b[:i] + a[i : n]) for i in range(1, n + 1)]
    return T, S


# -- decompositions ----------------------------------------------------------------


def gauss_decompose(X: RingMatrix):
    """X = X_plus * X_minus with X_plus upper triangular and X_minus
    unipotent lower triangular; needs the trailing principal minors
    xi_{i+1..n}(X) non-zero (the failing index is reported)."""
    n = X.nrows
    if not X.det():
        raise DecompositionError("det(X) = 0", 0)
    w = [[Rational(1) if i == j else Rational(0) for j in range(n)] for i in range(n)]
    for j in range(n - 1):
        block = X.submatrix(range(j + 2, n + 1), range(j + 2, n + 1))
        rhs = [-rat(X.rows[i][j]) for i in range(j + 1, n)]
        try:
            sol = block.solve(rhs)
        except ZeroDivisionError:
            raise DecompositionError(
                f"trailing minor xi_{{{j + 2}..{n}}} vanishes", j + 1
            ) from None
        for i, v in zip(range(j + 1, n), sol):
            w[i][j] = v
    W = RingMatrix(w)
    return X * W, W.inverse()


def ru_decompose(X: RingMatrix):
    """X = U^{-1} R with R in B*sigma (upper triangular shifted one column
    left, only the (1,n) corner surviving in the last column) and U in
    N_- epsilon (alternating-sign diagonal, lower triangular)."""
    n = X.nrows
    if not X[1, n]:
        raise DecompositionError("x_{1,n} = 0", 1)
    urows = [[Rational(0)] * n for _ in range(n)]
    urows[0][0] = Rational(1)
    for i in range(2, n + 1):
        cols = list(range(1, i - 1)) + [n]
        diag = Rational((-1) ** (i - 1))
        system = RingMatrix(
            [[rat(X.rows[k - 1][j - 1]) for k in range(1, i)] for j in cols]
        )
        rhs = [-diag * rat(X.rows[i - 1][j - 1]) for j in cols]
        try:
            sol = system.solve(rhs)
        except ZeroDivisionError:
            raise DecompositionError(
                f"minor xi^{{1..{i - 2},n}}_{{1..{i - 1}}} vanishes", i - 1
            ) from None
        for k, v in enumerate(sol):
            urows[i - 1][k] = v
        urows[i - 1][i - 1] = diag
    U = RingMatrix(urows)
    R = U * X
    for i in range(2, n + 1):
        assert not R[i, n], "RU decomposition produced a bad corner"
        for j in range(1, i - 1):
            assert not R[i, j], "RU decomposition left a nonzero below"
    return R, U


def ru_ratio_formula(X: RingMatrix, i: int):
    """(-1)^{i+1} xi^{1..i,n}_{1..i,i+1}(X) / xi^{1..i-1,n}_{1..i-1,i}(X)."""
    num = X.minor(list(range(1, i + 1)) + [i + 1], list(range(1, i + 1)) + [X.nrows])
    den = X.minor(list(range(1, i)) + [i], list(range(1, i)) + [X.nrows])
    return Rational((-1) ** (i + 1)) * num / den


# -- the alpha / beta correspondence ------------------------------------------------


def alpha(pt: TodaPoint) -> TruncSeriesPhi:
    """The polynomial class [Delta_{1,1}] of a Toda point (monic, degree
    n-1)."""
    poly = char_minor_phi(pt)
    coeffs = poly.coeff_list("zeta")
    assert len(coeffs) == pt.n and coeffs[-1] == 1
    return TruncSeriesPhi.from_zeta_coeffs(pt.n, coeffs)


@dataclass(frozen=True)
class BetaData:
    point: TodaPoint
    L: RingMatrix
    R: RingMatrix
    U: RingMatrix
    T: tuple
    S: tuple


def beta_full(phi: TruncSeriesPhi, params: SpectralParams) -> BetaData:
    n = phi.n
    phi = phi.normalized()  # raises YConditionError("Y1") when impossible
    X = phi_of_companion(phi, params)
    if not X.det():
        raise YConditionError("Y0")
    T, S = ts_functions(phi, params, "remainder")
    for i in range(1, n):
        if not T[i - 1]:
            raise YConditionError(f"Y2[{i}]")
    for i in range(1, n):
        if not S[i - 1]:
            raise YConditionError(f"Y3[{i}]")
    R, U = ru_decompose(X)
    C = companion_matrix(params)
    L = U * C * U.inverse()
    point = lax_to_point(L)
    return BetaData(point, L, R, U, tuple(T), tuple(S))


def beta(phi: TruncSeriesPhi, params: SpectralParams) -> TodaPoint:
    """Inverse of alpha on the open locus; raises YConditionError naming the
    first failing condition."""
    return beta_full(phi, params).point


def minor_formulas(phi: TruncSeriesPhi, params: SpectralParams) -> bool:
    """Check T_i = (-1)^{n-i} xi^{1..i-1,n}_{1..i-1,i}(phi(C)) and
    S_i = xi^{1..i}_{1..i}(phi(C)) for 1 <= i <= n."""
    n = phi.n
    X = phi_of_companion(phi, params)
    T, S = ts_functions(phi, params, "remainder")
    for i in range(1, n + 1):
        rows = list(range(1, i)) + [i]
        cols = list(range(1, i)) + [n]
        expected_t = X.minor(rows, cols) * ((-1) ** (n - i))
        if not T[i - 1] == expected_t:
            return False
        principal = list(range(1, i + 1))
        if not S[i - 1] == X.minor(principal, principal):
            return False
    return True


# -- sampling ------------------------------------------------------------------------


def _random_rational(rng, allow_zero=False):
    num = rng.randint(-9, 9)
    while not allow_zero and num == 0:
        num = rng.randint(-9, 9)
    return Rational(num, rng.randint(1, 9))


def random_unipotent_point(n: int, rng, max_tries: int = 10000) -> TodaPoint:
    """A random rational point whose spectral invariants are the binomial
    coefficients (characteristic polynomial (zeta-1)^n), built through beta
    from a random polynomial class."""
    uni = SpectralParams.unipotent(n)
    for _ in range(max_tries):
        coeffs = [_random_rational(rng, allow_zero=True) for _ in range(n - 1)]
        coeffs.append(Rational(1))
        phi = TruncSeriesPhi(n, coeffs)
        try:
            return beta_full(phi, uni).point
        except (YConditionError, DecompositionError, ValueError, ZeroDivisionError):
            continue
    raise RuntimeError("sampling failed; the locus should be dense")


def random_z_point(n: int, rng, max_tries: int = 10000) -> TodaPoint:
    """A random rational point of the open locus: non-zero z with product 1,
    non-zero Q, and non-vanishing trailing minors of L (condition Z_3).

    The conditions cut out a dense open set, so rejection sampling is
    cheap."""
    for _ in range(max_tries):
        z = [_random_rational(rng) for _ in range(n - 1)]
        prod = Rational(1)
        for v in z:
            prod = prod * v
        z.append(Rational(1) / prod)
        Q = tuple(_random_rational(rng) for _ in range(n - 1))
        pt = TodaPoint(n, tuple(z), Q)
        L = lax_matrix(pt)
        if all(
            L.minor(range(i + 1, n + 1), range(i + 1, n + 1))
            for i in range(1, n)
        ):
            return pt
    raise RuntimeError("sampling failed; the locus should be dense")
