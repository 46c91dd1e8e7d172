from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from mayacrystal.laurent import INF, LaurentPoly, MultiPoly

coeffs = st.fractions(
    max_denominator=20,
    min_value=Fraction(-30),
    max_value=Fraction(30),
)
laurents = st.dictionaries(st.integers(-6, 6), coeffs, max_size=5).map(LaurentPoly)


def test_zero_and_one():
    assert not LaurentPoly.zero()
    assert LaurentPoly.one()
    assert LaurentPoly.one().val() == 0
    assert LaurentPoly.zero().val() == INF


def test_term_constructor():
    p = LaurentPoly.term(Fraction(3, 2), -4)
    assert p.val() == -4
    assert p.coeffs == {-4: Fraction(3, 2)}
    assert not LaurentPoly.term(Fraction(0), 5)


def test_addition_cancels():
    p = LaurentPoly.term(Fraction(1), 2)
    q = LaurentPoly.term(Fraction(-1), 2)
    assert not (p + q)
    assert (p + q).val() == INF


def test_multiplication_adds_exponents():
    p = LaurentPoly.term(Fraction(2), -1)
    q = LaurentPoly.term(Fraction(3), 4)
    assert (p * q).coeffs == {3: Fraction(6)}


@given(laurents, laurents)
def test_add_commutes(p, q):
    assert p + q == q + p


@given(laurents, laurents, laurents)
def test_mul_distributes(p, q, r):
    assert p * (q + r) == p * q + p * r


@given(laurents, laurents)
def test_val_of_product_when_exact(p, q):
    # Over a domain the valuation is additive; Fraction coefficients never
    # produce zero divisors, so the lowest terms cannot cancel.
    if p and q:
        assert (p * q).val() == p.val() + q.val()
    else:
        assert (p * q).val() == INF


@given(laurents, laurents)
def test_val_of_sum_lower_bound(p, q):
    s = p + q
    assert s.val() >= min(p.val(), q.val())


def test_scale_and_map_coeffs():
    p = LaurentPoly({0: Fraction(1), 2: Fraction(-3)})
    assert p.scale(Fraction(2)).coeffs == {0: Fraction(2), 2: Fraction(-6)}
    assert not p.scale(Fraction(0))
    doubled = p.map_coeffs(lambda c: c * 2)
    assert doubled == p.scale(Fraction(2))


def test_to_json_sorted():
    p = LaurentPoly({3: Fraction(1), -1: Fraction(1, 2)})
    assert p.to_json() == {"-1": "1/2", "3": "1"}


def test_multipoly_basics():
    a = MultiPoly.variable("a")
    b = MultiPoly.variable("b")
    expr = (a + b) * (a - b)
    assert expr == a * a - b * b
    assert expr.variables() == ["a", "b"]
    assert expr.total_degree() == 2
    assert not MultiPoly.const(0)
    assert MultiPoly.const(5).evaluate({}) == 5


def test_multipoly_evaluate():
    a = MultiPoly.variable("a")
    b = MultiPoly.variable("b")
    expr = 3 * a * a * b - 2 * b + 1
    assert expr.evaluate({"a": 2, "b": Fraction(1, 2)}) == 6 - 1 + 1


def test_multipoly_generic_nonzero():
    # a nonzero symbolic coefficient stays nonzero under the ring ops the
    # exponential series performs: scaling by nonzero rationals and adding
    # terms in distinct indeterminates
    a = MultiPoly.variable("a1")
    assert a * Fraction(1, 6)
    assert a + MultiPoly.variable("a2")


def test_laurent_over_multipoly():
    a = MultiPoly.variable("a")
    p = LaurentPoly.term(a, -2)
    q = p * p
    assert q.val() == -4
    assert q.coeffs[-4] == a * a
    specialized = q.map_coeffs(lambda c: c.evaluate({"a": Fraction(3)}))
    assert specialized.coeffs == {-4: Fraction(9)}
