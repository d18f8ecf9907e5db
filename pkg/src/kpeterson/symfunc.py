"""Symmetric functions in the complete homogeneous basis.

A SymFunc is an exact-rational linear combination of monomials in h1, h2,
...; the monomial h2*h1^2 is stored as the exponent vector (2, 1) (exponent
of h_i at slot i-1, trailing zeros trimmed).  Schur functions, the p-basis
conversions (Newton's identities), and the Hall-pairing skew operators
(p_i-perp acts on h_j as h_{j-i}, extended as a derivation) live here.

Serialization format: a JSON list of {"coeff": "p/q", "monomial": [i1, i2,
...]} with the monomial written as its weakly decreasing index multiset and
the list in descending graded-lex order.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .matrices import RingMatrix
from .polynomials import Poly
from .scalars import Rational, rat, rational_from_text, rational_to_text

__all__ = ["SymFunc", "SymFrac", "schur", "to_p_dict", "from_p_dict", "perp"]


def _trim(exps):
    exps = tuple(exps)
    while exps and exps[-1] == 0:
        exps = exps[:-1]
    return exps


def _mono_degree(exps):
    return sum((i + 1) * e for i, e in enumerate(exps))


def _mono_mul(e1, e2):
    if len(e1) < len(e2):
        e1, e2 = e2, e1
    return tuple(a + b for a, b in zip(e1, e2)) + e1[len(e2):]


def _mono_key(exps):
    return (_mono_degree(exps), exps)


class SymFunc:
    __slots__ = ("terms",)

    def __init__(self, terms=()):
        object.__setattr__(self, "terms", dict(terms))

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def const(cls, value):
        value = rat(value)
        return cls({(): value} if value else {})

    @classmethod
    def one(cls):
        return cls.const(1)

    @classmethod
    def h(cls, i: int):
        """The complete homogeneous generator h_i (h_0 = 1, h_{<0} = 0)."""
        if i < 0:
            return cls.zero()
        if i == 0:
            return cls.one()
        return cls({(0,) * (i - 1) + (1,): Rational(1)})

    @classmethod
    def h_monomial(cls, indices, coeff=1):
        """Product h_{i1} h_{i2} ... from a multiset of indices >= 1."""
        exps = [0] * (max(indices) if indices else 0)
        for i in indices:
            exps[i - 1] += 1
        return cls.monomial(exps, coeff)

    @classmethod
    def monomial(cls, exps, coeff=1):
        coeff = rat(coeff)
        if not coeff:
            return cls.zero()
        return cls({_trim(exps): coeff})

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not e for e in self.terms)

    def constant_term(self):
        return self.terms.get((), Rational(0))

    def degree(self) -> int:
        return max((_mono_degree(e) for e in self.terms), default=0)

    def homogeneous_part(self, d: int) -> "SymFunc":
        return SymFunc({e: c for e, c in self.terms.items() if _mono_degree(e) == d})

    def top_part(self) -> "SymFunc":
        return self.homogeneous_part(self.degree())

    def in_lambda_n(self, n: int) -> bool:
        """True iff only h_1..h_{n-1} occur."""
        return all(len(e) <= n - 1 for e in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _mono_key(t[0]), reverse=True)

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            return self.is_constant() and self.constant_term() == rat(other)
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return f"SymFunc({self.to_str()})"

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Rational)):
            return SymFunc.const(other)
        if isinstance(other, SymFunc):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return SymFunc(terms)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            other = rat(other)
            if not other:
                return SymFunc.zero()
            return SymFunc({e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        small, big = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        acc = {}
        for e1, c1 in small.terms.items():
            for e2, c2 in big.terms.items():
                e = _mono_mul(e1, e2)
                s = acc.get(e, 0) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    del acc[e]
        return SymFunc(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = SymFunc.one()
        for _ in range(k):
            result = result * self
        return result

    def exact_div(self, divisor: "SymFunc"):
        """Exact division in the h-polynomial ring, or None if inexact."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero symmetric function")
        dlt_exps, dlt_coeff = max(divisor.terms.items(), key=lambda t: _mono_key(t[0]))
        width = max(
            [len(e) for e in self.terms] + [len(e) for e in divisor.terms] + [0]
        )
        dlt = dlt_exps + (0,) * (width - len(dlt_exps))
        rem = {e + (0,) * (width - len(e)): c for e, c in self.terms.items()}
        quotient = {}
        while rem:
            exps, coeff = max(rem.items(), key=_mono_key_padded)
            q_exps = tuple(a - b for a, b in zip(exps, dlt))
            if any(e < 0 for e in q_exps):
                return None
            q_coeff = coeff / dlt_coeff
            quotient[_trim(q_exps)] = q_coeff
            for e, c in divisor.terms.items():
                target = tuple(
                    a + b for a, b in zip(e + (0,) * (width - len(e)), q_exps)
                )
                s = rem.get(target, 0) - q_coeff * c
                if s:
                    rem[target] = s
                else:
                    rem.pop(target, None)
        return SymFunc(quotient)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (Rational(1) / rat(other))
        q = self.exact_div(other)
        if q is None:
            raise ValueError("inexact division of symmetric functions")
        return q

    # -- conversions ---------------------------------------------------------

    def to_poly(self, n: int) -> Poly:
        """As a polynomial in variables h1..h_{n-1}; requires Lambda_(n)."""
        if not self.in_lambda_n(n):
            raise ValueError(f"not in Lambda_({n})")
        width = n - 1
        variables = tuple(f"h{i}" for i in range(1, n))
        return Poly(
            variables,
            {e + (0,) * (width - len(e)): c for e, c in self.terms.items()},
        )

    @classmethod
    def from_poly(cls, p: Poly) -> "SymFunc":
        for i, v in enumerate(p.vars, start=1):
            if v != f"h{i}":
                raise ValueError(f"unexpected variable {v} for an h-polynomial")
        return cls({_trim(e): c for e, c in p.terms.items()})

    def expand_in_vars(self, num_vars: int) -> Poly:
        """Image in finitely many variables x1..x_N (each h_i expanded)."""
        variables = tuple(f"x{i}" for i in range(1, num_vars + 1))
        out = Poly.zero(variables)
        for e, c in self.sorted_terms():
            term = Poly.const(variables, c)
            for i, exp in enumerate(e, start=1):
                for _ in range(exp):
                    term = term * _h_expansion(i, num_vars)
            out = out + term
        return out

    # -- serialization ---------------------------------------------------------

    def to_json(self):
        out = []
        for e, c in self.sorted_terms():
            indices = []
            for i in range(len(e), 0, -1):
                indices.extend([i] * e[i - 1])
            out.append({"coeff": rational_to_text(c), "monomial": indices})
        return out

    @classmethod
    def from_json(cls, data) -> "SymFunc":
        total = cls.zero()
        for item in data:
            coeff = rational_from_text(item["coeff"])
            total = total + cls.h_monomial(list(item["monomial"]), coeff)
        return total

    def to_str(self):
        if not self.terms:
            return "0"
        chunks = []
        for e, c in self.sorted_terms():
            factors = []
            for i in range(len(e), 0, -1):
                if e[i - 1] == 1:
                    factors.append(f"h{i}")
                elif e[i - 1] > 1:
                    factors.append(f"h{i}^{e[i - 1]}")
            body = "*".join(factors)
            if not body:
                chunk = rational_to_text(c)
            elif c == 1:
                chunk = body
            elif c == -1:
                chunk = "-" + body
            else:
                chunk = rational_to_text(c) + "*" + body
            chunks.append(chunk)
        out = chunks[0]
        for chunk in chunks[1:]:
            out += " - " + chunk[1:] if chunk.startswith("-") else " + " + chunk
        return out


def _mono_key_padded(item):
    exps = item[0]
    return (_mono_degree(exps), exps)


_H_EXPANSIONS: dict = {}


def _h_expansion(i: int, num_vars: int) -> Poly:
    key = (i, num_vars)
    if key not in _H_EXPANSIONS:
        variables = tuple(f"x{j}" for j in range(1, num_vars + 1))
        terms = {}
        for combo in combinations_with_replacement(range(num_vars), i):
            exps = [0] * num_vars
            for j in combo:
                exps[j] += 1
            terms[tuple(exps)] = Rational(1)
        _H_EXPANSIONS[key] = Poly(variables, terms)
    return _H_EXPANSIONS[key]


# -- Schur functions -----------------------------------------------------------


def schur(lam) -> SymFunc:
    """Jacobi-Trudi determinant det(h_{lambda_i + j - i}).

    >>> schur(Partition([1, 1])).to_str()
    'h1^2 - h2'
    """
    parts = tuple(lam)
    ell = len(parts)
    if ell == 0:
        return SymFunc.one()
    rows = [
        [SymFunc.h(parts[i] + j - i) for j in range(ell)] for i in range(ell)
    ]
    return RingMatrix(rows).det()


# -- power-sum basis ------------------------------------------------------------

# h_m written in the p's and p_m written in the h's, by Newton's identities:
# m*h_m = sum_{i=1}^{m} p_i h_{m-i}.
_H_IN_P: list = [ {(): Rational(1)} ]
_P_IN_H: list = [ SymFunc.one() ]


def _pdict_scale(d, c):
    return {e: v * c for e, v in d.items()} if c else {}


def _pdict_add(d1, d2):
    out = dict(d1)
    for e, c in d2.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _pdict_mul(d1, d2):
    acc = {}
    for e1, c1 in d1.items():
        for e2, c2 in d2.items():
            e = _mono_mul(e1, e2)
            s = acc.get(e, 0) + c1 * c2
            if s:
                acc[e] = s
            else:
                del acc[e]
    return acc


def _p_gen(i: int):
    return {(0,) * (i - 1) + (1,): Rational(1)}


def _ensure_newton(m: int):
    while len(_H_IN_P) <= m:
        k = len(_H_IN_P)
        acc: dict = {}
        for i in range(1, k + 1):
            acc = _pdict_add(acc, _pdict_mul(_p_gen(i), _H_IN_P[k - i]))
        _H_IN_P.append(_pdict_scale(acc, Rational(1, k)))
    while len(_P_IN_H) <= m:
        k = len(_P_IN_H)
        total = SymFunc.h(k) * k
        for i in range(1, k):
            total = total - SymFunc.h(k - i) * _P_IN_H[i]
        _P_IN_H.append(total)


def to_p_dict(f: SymFunc) -> dict:
    """Expand f over monomials in p_1, p_2, ... (exponent-vector keys)."""
    out: dict = {}
    for e, c in f.terms.items():
        term = {(): c}
        for i, exp in enumerate(e, start=1):
            if exp:
                _ensure_newton(i)
                for _ in range(exp):
                    term = _pdict_mul(term, _H_IN_P[i])
        out = _pdict_add(out, term)
    return out


def from_p_dict(d: dict) -> SymFunc:
    """Inverse of to_p_dict."""
    total = SymFunc.zero()
    for e, c in sorted(d.items(), key=_mono_key_padded, reverse=True):
        term = SymFunc.const(c)
        for i, exp in enumerate(e, start=1):
            if exp:
                _ensure_newton(i)
                for _ in range(exp):
                    term = term * _P_IN_H[i]
        total = total + term
    return total


def p_perp(i: int, g: SymFunc) -> SymFunc:
    """Apply p_i-perp: the derivation with p_i-perp h_j = h_{j-i}."""
    acc: dict = {}
    for e, c in g.terms.items():
        for j in range(len(e)):
            if not e[j]:
                continue
            # remove one factor h_{j+1}, append h_{j+1-i}
            coeff = c * e[j]
            new = list(e)
            new[j] -= 1
            target = j + 1 - i
            if target < 0:
                continue
            if target > 0:
                if len(new) < target:
                    new.extend([0] * (target - len(new)))
                new[target - 1] += 1
            key = _trim(new)
            s = acc.get(key, 0) + coeff
            if s:
                acc[key] = s
            else:
                del acc[key]
    return SymFunc(acc)


def perp(f: SymFunc, g: SymFunc) -> SymFunc:
    """The skew operator f-perp applied to g (Hall-pairing adjoint of
    multiplication by f)."""
    total = SymFunc.zero()
    for e, c in sorted(to_p_dict(f).items(), key=_mono_key_padded, reverse=True):
        image = g
        for i, exp in enumerate(e, start=1):
            for _ in range(exp):
                if image.is_zero():
                    break
                image = p_perp(i, image)
        total = total + image * c
    return total


# -- fractions -------------------------------------------------------------------


class SymFrac:
    """A quotient of symmetric functions; equality by cross-multiplication.

    Not reduced by any gcd; the Peterson-map layer keeps denominators in
    factored form and only expands them here at the output boundary.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: SymFunc, den: SymFunc | None = None):
        if den is None:
            den = SymFunc.one()
        if isinstance(num, (int, Rational)):
            num = SymFunc.const(num)
        if isinstance(den, (int, Rational)):
            den = SymFunc.const(den)
        if den.is_zero():
            raise ZeroDivisionError("SymFrac with zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("SymFrac is immutable")

    def _coerce(self, other):
        if isinstance(other, (int, Rational, SymFunc)):
            return SymFrac(other if isinstance(other, SymFunc) else SymFunc.const(other))
        if isinstance(other, SymFrac):
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SymFrac(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return SymFrac(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SymFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero SymFrac")
        return SymFrac(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __repr__(self):
        return f"SymFrac({self.num.to_str()} / {self.den.to_str()})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(SymFunc.from_json(data["num"]), SymFunc.from_json(data["den"]))
