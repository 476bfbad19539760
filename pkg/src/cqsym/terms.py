"""Sparse term maps with exact coefficients.

Every algebra element in this package is a dict from a hashable basis
key to a nonzero coefficient.  Coefficients are Python ints wherever
possible and fractions.Fraction otherwise; the two mix freely in
arithmetic.  Zero coefficients are deleted eagerly so that equality of
elements is plain dict equality.

These helpers mutate their first argument; the element classes wrap
them behind a value-style interface.
"""

from fractions import Fraction


def iadd(terms, key, c):
    """terms[key] += c, dropping the entry if it cancels."""
    if not c:
        return
    new = terms.get(key, 0) + c
    if new:
        terms[key] = new
    else:
        del terms[key]


def iadd_scaled(terms, other, c=1):
    """terms += c * other (other: key -> coeff)."""
    if not c:
        return
    for key, v in other.items():
        iadd(terms, key, c * v)


def scaled(terms, c):
    """A fresh map c * terms."""
    if not c:
        return {}
    return {key: c * v for key, v in terms.items()}


def negated(terms):
    return {key: -v for key, v in terms.items()}


def coeff_to_json(c):
    """ints stay ints; anything else becomes a 'p/q' string."""
    if isinstance(c, int):
        return c
    c = Fraction(c)
    if c.denominator == 1:
        return int(c)
    return "%d/%d" % (c.numerator, c.denominator)


def coeff_from_json(obj):
    if isinstance(obj, bool):
        raise ValueError("coefficient must be an integer or 'p/q' string")
    if isinstance(obj, int):
        return obj
    if isinstance(obj, str):
        f = Fraction(obj)
        return int(f) if f.denominator == 1 else f
    raise ValueError("coefficient must be an integer or 'p/q' string")
