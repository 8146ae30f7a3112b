import math
import random
from fractions import Fraction

import pytest

from dualcheeger.exceptions import (
    BackendMismatchError,
    DivisionByZeroError,
    DomainError,
    NotRepresentableError,
    ValidationError,
)
from dualcheeger.fields import (
    Backend,
    LeviCivitaField,
    LeviCivitaNumber,
    Ordering,
    RationalField,
    RealField,
    make_field,
    rational_sqrt,
)

def test_backend_from_string():
    assert Backend.from_string('lc-rational') is Backend.LC_RATIONAL
    with pytest.raises(ValidationError):
        Backend.from_string('complex')

def test_ordering_equalish():
    assert Ordering.EQUAL.is_equalish
    assert Ordering.INDISTINGUISHABLE.is_equalish
    assert not Ordering.LESS.is_equalish

def test_make_field():
    assert isinstance(make_field('rational'), RationalField)
    assert isinstance(make_field(Backend.FLOAT), RealField)
    field = make_field('lc-float', budget=4)
    assert isinstance(field, LeviCivitaField)
    assert not field.exact
    assert field.budget == 4

class TestRationalField:
    def test_arith(self, rational):
        a, b = Fraction(1, 3), Fraction(1, 6)
        assert rational.arith(a, b, '+') == Fraction(1, 2)
        assert rational.arith(a, b, '-') == Fraction(1, 6)
        assert rational.arith(a, b, '*') == Fraction(1, 18)
        assert rational.arith(a, b, '/') == 2

    def test_unknown_operation(self, rational):
        with pytest.raises(ValidationError):
            rational.arith(Fraction(1), Fraction(2), '%')

    def test_division_by_zero(self, rational):
        with pytest.raises(DivisionByZeroError):
            rational.div(Fraction(1), Fraction(0))
        # Also usable as the builtin error
        with pytest.raises(ZeroDivisionError):
            rational.inverse(Fraction(0))

    def test_canonical_form(self, rational):
        value = rational.div(Fraction(4), Fraction(-6))
        assert value.numerator == -2 and value.denominator == 3

    def test_compare(self, rational):
        assert rational.compare(Fraction(1, 2), Fraction(2, 3)) is Ordering.LESS
        assert rational.compare(Fraction(2, 4), Fraction(1, 2)) is Ordering.EQUAL
        assert rational.sign(Fraction(-1, 7)) is Ordering.LESS

    def test_absolute_max_min(self, rational):
        assert rational.absolute(Fraction(-3, 4)) == Fraction(3, 4)
        assert rational.absolute(Fraction(3, 4)) == Fraction(3, 4)
        assert rational.max(Fraction(1), Fraction(2)) == 2
        assert rational.min(Fraction(1), Fraction(2)) == 1

    def test_sqrt_exact(self, rational):
        assert rational.sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert rational.sqrt(Fraction(0)) == 0

    def test_sqrt_not_representable_carries_fallback(self, rational):
        with pytest.raises(NotRepresentableError) as info:
            rational.sqrt(Fraction(2))
        assert info.value.fallback == pytest.approx(math.sqrt(2))

    def test_sqrt_negative(self):
        with pytest.raises(DomainError):
            rational_sqrt(Fraction(-1))

    def test_backend_mismatch(self, rational):
        with pytest.raises(BackendMismatchError):
            rational.compare(1.5, Fraction(1))
        with pytest.raises(BackendMismatchError):
            rational.check(LeviCivitaNumber.one())

    def test_format_and_parse(self, rational):
        assert rational.format(Fraction(-5, 3)) == '-5/3'
        assert rational.parse('-5/3') == Fraction(-5, 3)

class TestRealField:
    def test_tolerant_equality(self, real):
        assert real.compare(0.1 + 0.2, 0.3) is Ordering.EQUAL
        assert real.compare(1.0, 1.0 + 1e-6) is Ordering.LESS

    def test_sqrt(self, real):
        assert real.sqrt(2.0) == pytest.approx(math.sqrt(2))
        assert real.sqrt(-1e-15) == 0.0
        with pytest.raises(DomainError):
            real.sqrt(-1.0)

    def test_division_by_near_zero(self, real):
        with pytest.raises(DivisionByZeroError):
            real.div(1.0, 1e-13)

    def test_fallback_is_self(self, real):
        assert real.fallback() is real
        assert real.to_fallback(2.5) == 2.5

    def test_rational_fallback(self, rational):
        fallback = rational.fallback()
        assert isinstance(fallback, RealField)
        assert rational.to_fallback(Fraction(1, 4)) == 0.25

def _random_rational(rng):
    return Fraction(rng.randint(-20, 20), rng.randint(1, 12))

def _random_series(rng):
    exponents = rng.sample(range(-2, 5), rng.randint(1, 3))
    return LeviCivitaNumber([(q, _random_rational(rng)) for q in exponents])

@pytest.mark.parametrize('fixture, sample', [('rational', _random_rational), ('lc', _random_series)])
def test_field_axioms(request, fixture, sample):
    field = request.getfixturevalue(fixture)
    rng = random.Random(97)
    for _ in range(1000):
        a, b, c = sample(rng), sample(rng), sample(rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + field.zero == a
        assert a * field.one == a
        assert field.compare(a - a, field.zero) is Ordering.EQUAL
