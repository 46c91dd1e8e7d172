"""Fermionic Fock space over Laurent-polynomial coefficients.

The minus side is spanned by left-black Maya diagrams (row vectors), the
plus side by right-black ones (column vectors); the pairing matches a
left-black diagram with its color inversion.  Chevalley operators act by
removing (minus) or adding (plus) a single residue-colored box, and the
one-parameter action is the exponential exp(p * E), which is a finite sum
on every vector because repeated same-residue box moves terminate.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import INF, LaurentPoly
from .maya import (
    LEFT_BLACK,
    RIGHT_BLACK,
    add_box,
    addable_boxes,
    from_partition,
    removable_boxes,
    remove_box,
    to_partition,
)

MINUS = "minus"
PLUS = "plus"


class PlusActionCapExceeded(RuntimeError):
    """The box-count cap bound the exponential series on the plus side."""


class FockVector:
    """Finitely supported map Maya diagram -> nonzero LaurentPoly."""

    __slots__ = ("n", "side", "terms")

    def __init__(self, n, side, terms=None):
        if side not in (MINUS, PLUS):
            raise ValueError("unknown side: %r" % (side,))
        kind = LEFT_BLACK if side == MINUS else RIGHT_BLACK
        self.n = n
        self.side = side
        self.terms = {}
        for diagram, coeff in (terms or {}).items():
            if not coeff:
                continue
            if diagram.kind != kind:
                raise ValueError("%s-side vector requires %s diagrams" % (side, kind))
            self.terms[diagram] = coeff

    @classmethod
    def basis(cls, n, side, diagram, coeff=None):
        return cls(n, side, {diagram: coeff if coeff is not None else LaurentPoly.one()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return (
            self.n == other.n
            and self.side == other.side
            and self.terms.keys() == other.terms.keys()
            and all(other.terms[d] == c for d, c in self.terms.items())
        )

    def __add__(self, other):
        terms = dict(self.terms)
        for diagram, coeff in other.terms.items():
            new = terms.get(diagram, LaurentPoly.zero()) + coeff
            if new:
                terms[diagram] = new
            else:
                terms.pop(diagram, None)
        return FockVector(self.n, self.side, terms)

    def scale(self, scalar):
        if isinstance(scalar, LaurentPoly):
            return FockVector(
                self.n, self.side, {d: c * scalar for d, c in self.terms.items()}
            )
        return FockVector(
            self.n, self.side, {d: c.scale(scalar) for d, c in self.terms.items()}
        )

    def map_coeffs(self, fn):
        return FockVector(
            self.n, self.side, {d: c.map_coeffs(fn) for d, c in self.terms.items()}
        )

    def to_json(self):
        rows = [
            {"diagram": d.to_json(), "coeff": c.to_json()}
            for d, c in self.terms.items()
        ]
        rows.sort(key=lambda r: str(r["diagram"]))
        return {"n": self.n, "side": self.side, "terms": rows}

    def __repr__(self):
        return "FockVector(n=%d, side=%r, %d terms)" % (self.n, self.side, len(self.terms))


def e_act(v, i):
    """Chevalley raising on the minus side: single residue-i box removals."""
    _expect(v, MINUS)
    terms = {}
    for diagram, coeff in v.terms.items():
        p = to_partition(diagram)
        for box in removable_boxes(p, i, v.n):
            _accumulate(terms, from_partition(remove_box(p, box)), coeff)
    return FockVector(v.n, MINUS, terms)


def f_act(v, i):
    """Chevalley lowering on the minus side: single residue-i box additions."""
    _expect(v, MINUS)
    terms = {}
    for diagram, coeff in v.terms.items():
        p = to_partition(diagram)
        for box in addable_boxes(p, i, v.n):
            _accumulate(terms, from_partition(add_box(p, box)), coeff)
    return FockVector(v.n, MINUS, terms)


def e_plus_act(v, i):
    """Adjoint of e_act under the color-inversion pairing: box additions
    on the plus side."""
    _expect(v, PLUS)
    terms = {}
    for diagram, coeff in v.terms.items():
        p = to_partition(diagram)  # upward partition via the inversion pairing
        for box in addable_boxes(p, i, v.n):
            _accumulate(terms, from_partition(add_box(p, box)), coeff)
    return FockVector(v.n, PLUS, terms)


def x_act(v, i, p, cap=None):
    """Apply exp(p * E_i): the one-parameter action with parameter p.

    On the minus side the series terminates because box removal is
    nilpotent.  On the plus side each step adds a box; ``cap`` bounds the
    total number of added boxes and a PlusActionCapExceeded is raised if a
    nonzero term survives past it.
    """
    step = e_act if v.side == MINUS else e_plus_act
    result = v
    term = v
    k = 0
    while True:
        k += 1
        term = step(term, i)
        if not term:
            return result
        if v.side == PLUS and cap is not None and k > cap:
            raise PlusActionCapExceeded(
                "plus-side series still nonzero after %d box additions" % cap
            )
        term = term.scale(p).scale(Fraction(1, k))
        result = result + term


def vec_val(v):
    """Minimum coefficient valuation over the support; INF for zero."""
    if not v.terms:
        return INF
    return min(c.val() for c in v.terms.values())


def pairing(v_minus, w_plus):
    """Nondegenerate pairing: sum over diagrams matched by color inversion."""
    _expect(v_minus, MINUS)
    _expect(w_plus, PLUS)
    total = LaurentPoly.zero()
    for diagram, coeff in v_minus.terms.items():
        other = w_plus.terms.get(diagram.invert())
        if other is not None:
            total = total + coeff * other
    return total


def _expect(v, side):
    if v.side != side:
        raise ValueError("expected a %s-side vector, got %s" % (side, v.side))


def _accumulate(terms, diagram, coeff):
    new = terms.get(diagram, LaurentPoly.zero()) + coeff
    if new:
        terms[diagram] = new
    else:
        terms.pop(diagram, None)
