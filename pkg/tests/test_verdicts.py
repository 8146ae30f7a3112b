import math
from fractions import Fraction

import pytest

from dualcheeger.cheeger import InequalityVerdict, Verdict, check_relation, overall
from dualcheeger.cheeger.verdicts import check_equivalence, common_field, render_side, skipped
from dualcheeger.exceptions import ValidationError
from dualcheeger.fields import LeviCivitaNumber, RealField, epsilon
from dualcheeger.fields.levi_civita import INFINITY

def test_verdict_from_string():
    assert Verdict.from_string('indistinguishable') is Verdict.INDISTINGUISHABLE
    with pytest.raises(ValueError):
        Verdict.from_string('unknown')

class TestCheckRelation:
    @pytest.mark.parametrize('left, relation, right, verdict', [
        (Fraction(1, 2), '<', 1, Verdict.HOLDS),
        (1, '<', 1, Verdict.FAILS),
        (1, '<=', 1, Verdict.HOLDS),
        (2, '<=', 1, Verdict.FAILS),
        (2, '>', 1, Verdict.HOLDS),
        (Fraction(2, 3), '>=', Fraction(4, 6), Verdict.HOLDS),
        (Fraction(2, 3), '=', Fraction(3, 4), Verdict.FAILS),
    ])
    def test_rational(self, rational, left, relation, right, verdict):
        assert check_relation(rational, 'check', left, relation, right).verdict is verdict

    def test_equality_flag(self, rational):
        assert check_relation(rational, 'check', 1, '<=', 1).equality
        assert not check_relation(rational, 'check', 0, '<=', 1).equality

    def test_unknown_relation(self, rational):
        with pytest.raises(ValidationError):
            check_relation(rational, 'check', 1, '!=', 2)
        with pytest.raises(ValidationError):
            check_relation(rational, 'check', 1, 'iff', 2)

    def test_float_fallback(self, rational):
        verdict = check_relation(rational, 'check', 1 + math.sqrt(2), '>=', Fraction(2))
        assert verdict.verdict is Verdict.HOLDS
        assert verdict.note == 'compared in the float backend'

    def test_infinitesimals(self, lc):
        eps = epsilon()
        assert check_relation(lc, 'check', eps, '>', 0).verdict is Verdict.HOLDS
        assert check_relation(lc, 'check', eps, '<', Fraction(1, 1000)).verdict is Verdict.HOLDS
        assert check_relation(lc, 'check', 1 + eps, '<=', 1).verdict is Verdict.FAILS

    def test_indistinguishable_sides(self, lc):
        blurred = LeviCivitaNumber([(0, 1)], truncation=3)
        for relation in ('<=', '>=', '='):
            verdict = check_relation(lc, 'check', blurred, relation, 1)
            assert verdict.verdict is Verdict.HOLDS
            assert verdict.equality
        for relation in ('<', '>'):
            assert check_relation(lc, 'check', blurred, relation, 1).verdict is Verdict.INDISTINGUISHABLE

    def test_to_dict(self, lc):
        data = check_relation(lc, 'h > 1/2', 1 + epsilon(), '>', Fraction(1, 2)).to_dict()
        assert data == {
            'name': 'h > 1/2',
            'relation': '>',
            'left': '1 + e^1',
            'right': '1/2',
            'verdict': 'holds',
            'equality': False,
            'note': '',
        }

class TestCommonField:
    def test_embeds_rationals(self, lc):
        field, values = common_field(lc, [Fraction(1, 2), epsilon()])
        assert field is lc
        assert values[0] == LeviCivitaNumber.constant(Fraction(1, 2))

    def test_moves_to_float_coefficients(self, lc):
        floating = epsilon(exact=False)
        field, values = common_field(lc, [epsilon(), floating])
        assert not field.exact
        assert all(isinstance(v, LeviCivitaNumber) and not v.exact for v in values)

    def test_plain_floats(self, lc):
        field, values = common_field(lc, [1 + epsilon(), 0.5])
        assert isinstance(field, RealField)
        assert values == [1.0, 0.5]

class TestEquivalence:
    def test_agreement(self):
        assert check_equivalence('iff', True, True).verdict is Verdict.HOLDS
        assert check_equivalence('iff', False, False).verdict is Verdict.HOLDS

    def test_disagreement(self):
        assert check_equivalence('iff', True, False).verdict is Verdict.FAILS
        assert check_equivalence('iff', True, False, left_certain=False).verdict is Verdict.INDISTINGUISHABLE

def test_overall():
    holds = InequalityVerdict('a', '<=', 0, 1, Verdict.HOLDS)
    blurred = InequalityVerdict('b', '<', 1, 1, Verdict.INDISTINGUISHABLE)
    fails = InequalityVerdict('c', '<', 2, 1, Verdict.FAILS)
    assert overall([holds, skipped('d', 'iff', 'graph is not connected')]) is Verdict.HOLDS
    assert overall([holds, blurred]) is Verdict.INDISTINGUISHABLE
    assert overall([blurred, fails, holds]) is Verdict.FAILS
    assert overall([]) is Verdict.HOLDS

def test_render_side():
    assert render_side(None) is None
    assert render_side(True) is True
    assert render_side(Fraction(3, 4)) == '3/4'
    assert render_side(LeviCivitaNumber([(0, 1)], truncation=INFINITY)) == '1'
