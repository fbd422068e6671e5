import pytest
from hypothesis import given, settings, strategies as st

from qav.scalars import QRat, ZERO, ONE, Q, qint, qfact, bar


def qq(k):
    return QRat.q_power(k)


class TestQint:
    def test_zero_is_empty_sum(self):
        assert qint(0) == ZERO

    def test_two(self):
        assert qint(2) == Q + qq(-1)

    def test_three(self):
        assert qint(3) == qq(2) + ONE + qq(-2)

    def test_agrees_with_defining_quotient(self):
        # independent route: (q^n - q^-n) / (q - q^-1) by field division
        for n in range(11):
            quotient = (qq(n) - qq(-n)) / (Q - qq(-1))
            assert qint(n) == quotient

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            qint(-1)


class TestQfact:
    def test_empty_product(self):
        assert qfact(0) == ONE
        assert qfact(1) == ONE

    def test_two(self):
        assert qfact(2) == Q + qq(-1)

    def test_three_product_oracle(self):
        assert qfact(3) == (Q + qq(-1)) * (qq(2) + ONE + qq(-2))

    def test_matches_iterated_qint(self):
        acc = ONE
        for n in range(1, 9):
            acc = acc * qint(n)
            assert qfact(n) == acc

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            qfact(-2)


class TestBar:
    def test_monomial(self):
        assert bar(qq(2)) == qq(-2)

    def test_symmetric_value(self):
        x = Q + qq(-1)
        assert bar(x) == x

    def test_inverts_q_minus_qinv_denominator(self):
        x = (Q - qq(-1)).inverse()
        assert bar(x) == -x

    def test_involution(self):
        samples = [qint(5), qfact(4), (qq(3) - 2) / (qq(2) + 1), ZERO, ONE]
        for x in samples:
            assert bar(bar(x)) == x

    def test_fixes_q_symmetric_families(self):
        for n in range(11):
            assert bar(qint(n)) == qint(n)
            assert bar(qfact(n)) == qfact(n)


# random rational functions built from small Laurent polynomials
def _laurent(draw):
    coeffs = draw(st.lists(st.integers(-4, 4), min_size=1, max_size=4))
    shift = draw(st.integers(-3, 3))
    return QRat.fraction(tuple(coeffs), (1,), shift)


@st.composite
def qrats(draw):
    num = _laurent(draw)
    den = _laurent(draw)
    if not den:
        den = ONE
    return num / den


class TestFieldAxioms:
    @given(qrats(), qrats(), qrats())
    @settings(max_examples=150, deadline=None)
    def test_add_mul_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a

    @given(qrats())
    @settings(max_examples=100, deadline=None)
    def test_units_and_inverse(self, a):
        assert a + ZERO == a
        assert a * ONE == a
        assert a - a == ZERO
        if a:
            assert a * a.inverse() == ONE

    @given(qrats())
    @settings(max_examples=100, deadline=None)
    def test_canonical_form_is_stable(self, a):
        # re-canonicalizing the stored representation must be a no-op
        again = QRat(a.shift, a.num, a.den)
        assert again == a
        assert hash(again) == hash(a)

    @given(qrats(), qrats())
    @settings(max_examples=100, deadline=None)
    def test_bar_is_a_field_automorphism(self, a, b):
        assert bar(a + b) == bar(a) + bar(b)
        assert bar(a * b) == bar(a) * bar(b)


class TestPow:
    def test_integer_powers(self):
        x = Q + ONE
        assert x ** 0 == ONE
        assert x ** 3 == x * x * x
        assert x ** -2 == (x * x).inverse()

    def test_q_power_shortcut(self):
        assert Q ** -5 == qq(-5)


class TestText:
    def test_zero_and_one(self):
        assert str(ZERO) == "0"
        assert str(ONE) == "1"

    def test_laurent(self):
        assert str(qq(2) + ONE + qq(-2)) == "q^2 + 1 + q^-2"
        assert str(-Q) == "-q"

    def test_fraction(self):
        x = (Q - qq(-1)).inverse()
        assert str(x) == "q/(q^2 - 1)"
