import random

import pytest

from kpeterson.matrices import RingMatrix
from kpeterson.polynomials import Poly
from kpeterson.scalars import Rational


def test_minor_examples():
    eye = RingMatrix.identity(4, Rational(1), Rational(0))
    assert eye.minor([1, 2], [1, 2]) == 1
    variables = ("a", "b", "c", "d")
    a, b, c, d = (Poly.variable(variables, v) for v in variables)
    m = RingMatrix([[a, b], [c, d]])
    assert m.minor([1, 2], [1, 2]) == a * d - b * c
    m3 = RingMatrix([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert m3.det() == -3


def test_minor_rejects_non_square_selection():
    m = RingMatrix([[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        m.minor([1], [1, 2])


def test_bareiss_matches_cofactor():
    rng = random.Random(11)
    for size in (2, 3, 4, 5):
        rows = [
            [Rational(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(size)]
            for _ in range(size)
        ]
        m = RingMatrix(rows)
        assert m.det(method="bareiss") == m.det(method="cofactor")


def test_determinant_commutes_with_evaluation():
    variables = ("x1", "x2")
    rng = random.Random(5)
    for _ in range(10):
        rows = [
            [
                Poly(
                    variables,
                    {
                        (rng.randint(0, 2), rng.randint(0, 2)): Rational(
                            rng.randint(-4, 4) or 1
                        )
                        for _ in range(3)
                    },
                )
                for _ in range(3)
            ]
            for _ in range(3)
        ]
        m = RingMatrix(rows)
        point = {"x1": Rational(rng.randint(-5, 5), 3), "x2": Rational(2, 7)}
        det_then_eval = m.det().evaluate(point)
        eval_then_det = RingMatrix(
            [[entry.evaluate(point) for entry in row] for row in rows]
        ).det()
        assert det_then_eval == eval_then_det


def test_singular_det_zero_and_inverse_raises():
    m = RingMatrix([[1, 2], [2, 4]])
    assert m.det() == 0
    with pytest.raises(ZeroDivisionError):
        m.inverse()


def test_inverse_and_solve():
    rng = random.Random(2)
    m = RingMatrix(
        [[Rational(rng.randint(1, 9), rng.randint(1, 4)) + (3 if i == j else 0) for j in range(4)] for i in range(4)]
    )
    eye = m * m.inverse()
    assert eye == RingMatrix.identity(4, Rational(1), Rational(0))
    rhs = [Rational(i + 1) for i in range(4)]
    x = m.solve(rhs)
    got = [sum((m[i + 1, j + 1] * x[j] for j in range(4)), Rational(0)) for i in range(4)]
    assert got == rhs
