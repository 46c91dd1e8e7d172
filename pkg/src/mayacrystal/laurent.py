"""Exact sparse Laurent polynomials in t over pluggable exact coefficient rings.

Coefficients may be any exact ring value supporting +, *, == and truthiness
as a zero test.  Two rings are used throughout the package: ``Fraction``
(arbitrary-precision rationals) and :class:`MultiPoly` (sparse multivariate
polynomials over the rationals, used for symbolic "generic" coefficients).
No floating point ever enters these computations.
"""

from __future__ import annotations

import math
from fractions import Fraction

#: Valuation of the zero polynomial.
INF = math.inf


class MultiPoly:
    """Sparse multivariate polynomial over ``Fraction`` in named indeterminates.

    Terms are stored as ``{monomial: coefficient}`` where a monomial is a
    tuple of ``(name, exponent)`` pairs sorted by name with exponents > 0;
    the empty tuple is the constant monomial.  Zero coefficients are never
    stored, so equality is plain dict equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = dict(terms) if terms else {}

    @classmethod
    def const(cls, value):
        value = Fraction(value)
        return cls({(): value} if value else None)

    @classmethod
    def variable(cls, name):
        return cls({((str(name), 1),): Fraction(1)})

    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = terms.get(mono, 0) + coeff
            if new:
                terms[mono] = new
            else:
                terms.pop(mono, None)
        return MultiPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _merge_monomials(m1, m2)
                new = terms.get(mono, 0) + c1 * c2
                if new:
                    terms[mono] = new
                else:
                    terms.pop(mono, None)
        return MultiPoly(terms)

    __rmul__ = __mul__

    def evaluate(self, assignment):
        """Substitute rationals for the indeterminates; returns a Fraction."""
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            value = coeff
            for name, exp in mono:
                value *= Fraction(assignment[name]) ** exp
            total += value
        return total

    def variables(self):
        return sorted({name for mono in self.terms for name, _ in mono})

    def total_degree(self):
        if not self.terms:
            return -1
        return max((sum(e for _, e in mono) for mono in self.terms), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms):
            coeff = self.terms[mono]
            factors = ["%s^%d" % (n, e) if e > 1 else n for n, e in mono]
            if not factors:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append("*".join(factors))
            else:
                pieces.append("%s*%s" % (coeff, "*".join(factors)))
        return " + ".join(pieces)

    def __repr__(self):
        return "MultiPoly(%s)" % self

    __hash__ = None


def _merge_monomials(m1, m2):
    exps = dict(m1)
    for name, exp in m2:
        exps[name] = exps.get(name, 0) + exp
    return tuple(sorted(exps.items()))


class LaurentPoly:
    """Sparse Laurent polynomial: a finite map exponent -> nonzero coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def term(cls, coeff, exponent=0):
        return cls({exponent: coeff})

    @classmethod
    def one(cls):
        return cls({0: Fraction(1)})

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(other.coeffs[e] == c for e, c in self.coeffs.items())

    def __add__(self, other):
        coeffs = dict(self.coeffs)
        for e, c in other.coeffs.items():
            new = coeffs.get(e, 0) + c
            if new:
                coeffs[e] = new
            else:
                coeffs.pop(e, None)
        return LaurentPoly(coeffs)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        coeffs = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                new = coeffs.get(e, 0) + c1 * c2
                if new:
                    coeffs[e] = new
                else:
                    coeffs.pop(e, None)
        return LaurentPoly(coeffs)

    def scale(self, scalar):
        if not scalar:
            return LaurentPoly()
        return LaurentPoly({e: c * scalar for e, c in self.coeffs.items()})

    def val(self):
        """Minimal exponent with nonzero coefficient; INF for zero."""
        if not self.coeffs:
            return INF
        return min(self.coeffs)

    def map_coeffs(self, fn):
        """Apply ``fn`` to every coefficient (for specializing symbolic ones)."""
        return LaurentPoly({e: fn(c) for e, c in self.coeffs.items()})

    def to_json(self):
        return {str(e): str(self.coeffs[e]) for e in sorted(self.coeffs)}

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            "(%s)*t^%d" % (self.coeffs[e], e) for e in sorted(self.coeffs)
        )

    def __repr__(self):
        return "LaurentPoly(%s)" % self

    __hash__ = None


def lp_add(a, b):
    return a + b


def lp_mul(a, b):
    return a * b


def lp_scale(a, c):
    return a.scale(c)


def lp_val(a):
    return a.val()
