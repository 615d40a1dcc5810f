from fractions import Fraction

import pytest

from cuntzboson.common import DomainError, ExprError
from cuntzboson.cuntz import CuntzMonomial, CuntzPolynomial, RepSpec
from cuntzboson.expr import Factor, eval_on_ket, parse_expression, to_cuntz_polynomial
from cuntzboson.scalar import ONE, RadicalScalar, sqrt_nat
from cuntzboson.states import Ket
from cuntzboson.words import EPWord

P1 = RepSpec((1,))


def test_parse_sum_of_products():
    terms = parse_expression("s1 s2* + sqrt(2) s3")
    assert len(terms) == 2
    assert terms[0].coeff == ONE
    assert terms[0].factors == (Factor("s", 1, False), Factor("s", 2, True))
    assert terms[1].coeff == sqrt_nat(2)
    assert terms[1].factors == (Factor("s", 3, False),)


def test_parse_rationals_and_minus():
    terms = parse_expression("3/2 a1* a1 - 2 s1")
    assert terms[0].coeff == RadicalScalar.rational(Fraction(3, 2))
    assert terms[0].factors == (Factor("a", 1, True), Factor("a", 1, False))
    assert terms[1].coeff == RadicalScalar.rational(-2)
    terms = parse_expression("-s1 + s2")
    assert terms[0].coeff == RadicalScalar.rational(-1)


def test_parse_juxtaposed_tokens():
    terms = parse_expression("s1s2*")
    assert terms[0].factors == (Factor("s", 1, False), Factor("s", 2, True))


def test_parse_pure_literal():
    terms = parse_expression("2 sqrt(3)")
    assert terms[0].coeff == 2 * sqrt_nat(3)
    assert terms[0].factors == ()


def test_parse_errors_carry_position():
    with pytest.raises(ExprError) as err:
        parse_expression("s1 + @")
    assert err.value.position == 5
    with pytest.raises(ExprError):
        parse_expression("")
    with pytest.raises(ExprError):
        parse_expression("s1 +")
    with pytest.raises(ExprError):
        parse_expression("s0")


def test_eval_matches_direct_application():
    omega = P1.gp_vector()
    got = eval_on_ket(P1, parse_expression("a2*"), omega)
    assert got == Ket.basis(EPWord((1, 2), (1,)))
    assert eval_on_ket(P1, parse_expression("s1*"), omega) == omega
    spec12 = RepSpec((1, 2))
    assert eval_on_ket(spec12, parse_expression("a1"), spec12.gp_vector()).is_zero()
    mixed = eval_on_ket(P1, parse_expression("a1 a1* - a1* a1"), omega)
    assert mixed == omega


def test_eval_with_finite_alphabet_uses_embedding():
    spec = RepSpec((1,), alphabet=2)
    omega = spec.gp_vector()
    # a1* on the embedded vacuum lands on |2 . 1^inf> over the binary alphabet
    got = eval_on_ket(spec, parse_expression("a1*"), omega)
    assert got == Ket.basis(EPWord((2,), (1,)))


def test_to_cuntz_polynomial_normalizes():
    poly = to_cuntz_polynomial(parse_expression("s1* s1"))
    assert poly == CuntzPolynomial.identity()
    assert to_cuntz_polynomial(parse_expression("s2* s1")).is_zero()
    poly = to_cuntz_polynomial(parse_expression("s1 s2* + sqrt(2) s3"))
    assert poly == CuntzPolynomial([
        CuntzMonomial(ONE, (1,), (2,)),
        CuntzMonomial(sqrt_nat(2), (3,), ()),
    ])
    poly = to_cuntz_polynomial(parse_expression("s1* s1 s2 s2*"))
    assert poly == CuntzPolynomial([CuntzMonomial(ONE, (2,), (2,))])
    with pytest.raises(DomainError):
        to_cuntz_polynomial(parse_expression("a1"))
