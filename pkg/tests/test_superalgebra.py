from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from superschur.superalgebra import (OddInputRejected, SuperPolynomial, apply_even_adjoint,
                                     apply_substitution_adjoint, basis_monomials, gram_adjoint,
                                     multiplication_operator, one, parse_polynomial, partial_theta,
                                     partial_x, render, scalar_product, theta, x, zero)

coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=4)
monomials = st.tuples(st.lists(st.integers(1, 4), max_size=3, unique=True),
                      st.lists(st.integers(1, 3), max_size=3))


@st.composite
def polys(draw, max_terms=4):
    out = zero()
    for _ in range(draw(st.integers(0, max_terms))):
        th, xs = draw(monomials)
        out = out + SuperPolynomial.monomial(th, xs, draw(coeffs))
    return out


@st.composite
def homogeneous_parity(draw, odd):
    out = zero()
    for _ in range(draw(st.integers(1, 3))):
        k = draw(st.integers(0, 1))
        th = draw(st.lists(st.integers(1, 5), min_size=2 * k + int(odd), max_size=2 * k + int(odd), unique=True))
        xs = draw(st.lists(st.integers(1, 3), max_size=2))
        out = out + SuperPolynomial.monomial(th, xs, draw(coeffs))
    return out


def test_theta_anticommutes_and_squares_to_zero():
    assert theta(1) * theta(2) == -(theta(2) * theta(1))
    assert not theta(3) * theta(3)
    assert SuperPolynomial.monomial([3, 1]) == -SuperPolynomial.monomial([1, 3])


def test_grading():
    f = theta(4) * x(2) + x(1) ** 3
    assert f.bidegrees() == {(5, 1), (3, 0)}
    assert f.component((3, 0)) == x(1) ** 3


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * one() == f


@settings(max_examples=60, deadline=None)
@given(homogeneous_parity(True), homogeneous_parity(True), homogeneous_parity(False))
def test_supercommutativity(a, b, c):
    assert a * b == -(b * a)
    assert a * c == c * a


@settings(max_examples=60, deadline=None)
@given(homogeneous_parity(True), polys(), st.integers(1, 5))
def test_theta_derivative_is_an_odd_derivation(a, g, k):
    assert partial_theta(k, a * g) == partial_theta(k, a) * g - a * partial_theta(k, g)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), st.integers(1, 3))
def test_x_derivative_is_a_derivation(f, g, k):
    assert partial_x(k, f * g) == partial_x(k, f) * g + f * partial_x(k, g)


def test_scalar_product_weights():
    assert scalar_product(x(2), x(2)) == Fraction(1, 2)
    assert scalar_product(x(1) ** 2, x(1) ** 2) == 2
    assert scalar_product(theta(1) * theta(2), theta(1) * theta(2)) == -1
    assert scalar_product(theta(1), theta(2)) == 0


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_scalar_product_is_symmetric(f, g):
    assert scalar_product(f, g) == scalar_product(g, f)


def test_even_adjoint_is_the_adjoint_of_multiplication():
    f = x(1) * x(2) - 3 * x(3)
    for n in range(5):
        for m in range(3):
            for s in basis_monomials(n, m):
                src = SuperPolynomial._raw({s: Fraction(1)})
                for t in basis_monomials(n + 3, m):
                    tgt = SuperPolynomial._raw({t: Fraction(1)})
                    assert scalar_product(f * src, tgt) == scalar_product(src, apply_even_adjoint(f, tgt))


def test_even_adjoint_rejects_theta_content():
    with pytest.raises(OddInputRejected):
        apply_even_adjoint(theta(1), x(1))


def test_gram_adjoint_satisfies_the_defining_relation():
    op = multiplication_operator(theta(2) * x(1) + theta(3))
    adj = gram_adjoint(op)
    for s in basis_monomials(3, 1):
        src = SuperPolynomial._raw({s: Fraction(1)})
        for t in basis_monomials(5, 2):
            tgt = SuperPolynomial._raw({t: Fraction(1)})
            assert scalar_product(op(src), tgt) == scalar_product(src, adj(tgt))


def test_substitution_adjoint_orders_theta_derivatives():
    f = SuperPolynomial.monomial([1, 2])
    # rightmost factor acts first: d_theta1 d_theta2 (theta1 theta2) = -1
    assert apply_substitution_adjoint(f, f) == -one()
    assert apply_substitution_adjoint(x(2), x(2) ** 2) == x(2)


def test_render_and_parse_round_trip():
    f = -theta(4) + theta(1) * x(3) + Fraction(1, 6) * theta(1) * x(1) ** 3
    text = render(f)
    assert text == "-1 t4 | 1 t1*x3 | 1/6 t1*x1^3"
    assert parse_polynomial(text) == f
    assert render(zero()) == "0"
    assert parse_polynomial("2 t3*t1") == -2 * theta(1) * theta(3)


def test_json_round_trip():
    f = theta(2) * theta(5) * x(1) - Fraction(2, 3) * x(4)
    assert SuperPolynomial.from_json(f.to_json()) == f
