"""Exact rational scalars.

Everything in this package computes over the rationals, exactly.  The scalar
type is gmpy2's ``mpq`` when available (a C implementation, much faster for
the large symbolic sweeps), with ``fractions.Fraction`` as a drop-in
fallback.  Both keep the denominator positive and the fraction reduced after
every operation.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Rational

__all__ = ["Rational", "QQ", "rat", "rational_from_text", "rational_to_text"]


def QQ(numerator=0, denominator=1):
    """Build a Rational; denominator must be non-zero."""
    return Rational(numerator, denominator)


def rat(value):
    """Coerce an int or Rational to Rational."""
    if isinstance(value, int):
        return Rational(value)
    return value


def rational_from_text(text: str):
    """Parse ``"p/q"`` or ``"p"`` into a Rational.

    >>> rational_from_text("-3/6")
    mpq(-1,2)
    """
    body = text.strip()
    if "/" in body:
        p, q = body.split("/", 1)
        return Rational(int(p), int(q))
    return Rational(int(body))


def rational_to_text(value) -> str:
    """Format a Rational as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(rat(value))
