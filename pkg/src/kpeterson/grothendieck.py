"""Dual and stable Grothendieck polynomials and K-theoretic LR coefficients.

The dual basis elements g_lambda come from an explicit determinant in the
h's whose top-degree part is the Schur function.  Stable Grothendieck
polynomials in finitely many variables and the LR coefficients are computed
by enumerating set-valued tableaux; the LR rule counts tableaux whose column
word builds nu on lambda.

Sign convention: G_lambda(x_1..x_d) = sum_T (-1)^{|T| - |lambda|} x^T.
"""

from __future__ import annotations

from math import comb

from .matrices import RingMatrix
from .partitions import Partition
from .polynomials import Poly
from .scalars import Rational
from .symfunc import SymFunc

__all__ = [
    "dual_groth",
    "SetValuedTableau",
    "column_word",
    "builds",
    "klr_coeff",
    "stable_groth_vars",
]


def dual_groth(lam: Partition) -> SymFunc:
    """The dual stable Grothendieck polynomial g_lambda in the h-basis.

    Determinant with (i, j) entry sum_m (-1)^m C(1-i, m) h_{lambda_i+j-i-m};
    the top-degree component is the Schur function s_lambda.

    >>> dual_groth(Partition([1, 1])).to_str()
    'h1^2 - h2 + h1'
    """
    parts = tuple(lam)
    ell = len(parts)
    if ell == 0:
        return SymFunc.one()
    rows = []
    for i in range(1, ell + 1):
        row = []
        for j in range(1, ell + 1):
            top = parts[i - 1] + j - i
            entry = SymFunc.zero()
            for m in range(top + 1):
                # (-1)^m * C(1-i, m) = C(m+i-2, m), a non-negative integer
                c = 1 if i == 1 and m == 0 else (0 if i == 1 else comb(m + i - 2, m))
                if c:
                    entry = entry + SymFunc.h(top - m) * c
            row.append(entry)
        rows.append(row)
    return RingMatrix(rows).det()


class SetValuedTableau:
    """A filling of a Young diagram with non-empty finite sets of positive
    integers, rows weakly increasing and columns strictly increasing in the
    max/min sense."""

    __slots__ = ("shape", "cells")

    def __init__(self, shape: Partition, cells: dict):
        cells = {rc: frozenset(s) for rc, s in cells.items()}
        expected = {
            (r, c)
            for r in range(1, len(shape) + 1)
            for c in range(1, shape.part(r) + 1)
        }
        if set(cells) != expected:
            raise ValueError("cells do not match the shape")
        for rc, s in cells.items():
            if not s or any(v < 1 for v in s):
                raise ValueError(f"bad cell set at {rc}: {set(s)}")
        for (r, c), s in cells.items():
            left = cells.get((r, c - 1))
            if left is not None and max(left) > min(s):
                raise ValueError(f"row condition fails at {(r, c)}")
            up = cells.get((r - 1, c))
            if up is not None and max(up) >= min(s):
                raise ValueError(f"column condition fails at {(r, c)}")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "cells", cells)

    def __setattr__(self, name, value):
        raise AttributeError("SetValuedTableau is immutable")

    def size(self) -> int:
        """Total number of letters |T|."""
        return sum(len(s) for s in self.cells.values())

    def __repr__(self):
        rows = []
        for r in range(1, len(self.shape) + 1):
            rows.append(
                [sorted(self.cells[(r, c)]) for c in range(1, self.shape.part(r) + 1)]
            )
        return f"SetValuedTableau({rows})"


def column_word(tab: SetValuedTableau) -> tuple:
    """Read columns right to left, each top to bottom, cell sets in
    decreasing order.

    >>> t = SetValuedTableau(Partition([2, 1]),
    ...     {(1, 1): {1}, (1, 2): {2}, (2, 1): {2}})
    >>> column_word(t)
    (2, 1, 2)
    """
    shape = tab.shape
    word = []
    width = shape.part(1)
    for c in range(width, 0, -1):
        for r in range(1, len(shape) + 1):
            if shape.part(r) >= c:
                word.extend(sorted(tab.cells[(r, c)], reverse=True))
    return tuple(word)


def builds(word, lam: Partition, nu: Partition) -> bool:
    """True iff adding a box to row w for each letter w keeps a partition
    shape at every step, starting from lam and ending exactly at nu."""
    current = list(lam)
    for r in word:
        if r == len(current) + 1:
            current.append(1)
        elif 1 <= r <= len(current):
            current[r - 1] += 1
            if r > 1 and current[r - 1] > current[r - 2]:
                return False
        else:
            return False
    return current == list(nu)


def _enumerate_svt(shape: Partition, max_entry: int, letters: int | None):
    """Yield cell dicts of set-valued tableaux of the given shape with
    entries in {1..max_entry}; if letters is given, with exactly that many
    letters in total.  Cells are filled column by column, left to right, top
    to bottom, backtracking on the semistandard condition."""
    order = []
    for c in range(1, shape.part(1) + 1):
        for r in range(1, len(shape) + 1):
            if shape.part(r) >= c:
                order.append((r, c))
    ncells = len(order)
    if max_entry < 1 or (letters is not None and letters < ncells):
        if ncells == 0 and (letters is None or letters == 0):
            yield {}
        return
    cells: dict = {}

    def fill(k: int, used: int):
        if k == ncells:
            if letters is None or used == letters:
                yield dict(cells)
            return
        r, c = order[k]
        lo = 1
        left = cells.get((r, c - 1))
        if left is not None:
            lo = max(lo, max(left))
        up = cells.get((r - 1, c))
        if up is not None:
            lo = max(lo, max(up) + 1)
        if lo > max_entry:
            return
        remaining_cells = ncells - k - 1
        max_size = max_entry - lo + 1
        if letters is not None:
            max_size = min(max_size, letters - used - remaining_cells)
        pool = range(lo, max_entry + 1)
        for size in range(1, max_size + 1):
            for subset in _subsets_of_size(pool, size):
                cells[(r, c)] = subset
                yield from fill(k + 1, used + size)
        cells.pop((r, c), None)

    yield from fill(0, 0)


def _subsets_of_size(pool, size):
    from itertools import combinations

    return [frozenset(s) for s in combinations(pool, size)]


def klr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """K-theoretic Littlewood-Richardson coefficient c_{lam,mu}^{nu}: counts
    set-valued tableaux of shape mu whose column word builds nu on lam.

    >>> klr_coeff(Partition([1]), Partition([1]), Partition([2, 1]))
    1
    """
    if not nu.contains(lam):
        return 0
    letters = nu.weight - lam.weight
    if letters < mu.weight:
        return 0
    max_entry = len(nu)
    if len(mu) > max_entry:
        return 0
    count = 0
    for cells in _enumerate_svt(mu, max_entry, letters):
        tab = SetValuedTableau(mu, cells)
        if builds(column_word(tab), lam, nu):
            count += 1
    return count


def stable_groth_vars(lam: Partition, d: int) -> Poly:
    """The stable Grothendieck polynomial G_lambda(x_1, ..., x_d).

    >>> stable_groth_vars(Partition([1]), 2).to_str()
    '-x1*x2 + x1 + x2'
    """
    variables = tuple(f"x{i}" for i in range(1, d + 1))
    if len(lam) > d:
        return Poly.zero(variables)
    total = Poly.zero(variables)
    for cells in _enumerate_svt(lam, d, None):
        exps = [0] * d
        size = 0
        for s in cells.values():
            size += len(s)
            for v in s:
                exps[v - 1] += 1
        coeff = Rational(1) if (size - lam.weight) % 2 == 0 else Rational(-1)
        total = total + Poly.monomial(variables, exps, coeff)
    return total
