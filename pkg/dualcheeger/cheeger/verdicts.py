"""
Verdicts for inequalities between field elements.

Both sides are compared in the graph's field when possible.  When one
side only exists in a fallback backend (an irrational square root over
the rationals, a float-coefficient Levi-Civita root), both sides move to
that fallback; eigenvalues known only as floats force a float comparison.

Non-strict relations hold when the sides cannot be told apart, and the
verdict records the equality.  A strict relation between sides that agree
up to the truncation order is reported as indistinguishable.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from dualcheeger.exceptions import ValidationError
from dualcheeger.fields import OrderedField, Ordering, RealField

class Verdict(Enum):
    """Outcome of checking one relation."""
    HOLDS = "holds"
    FAILS = "fails"
    INDISTINGUISHABLE = "indistinguishable"
    SKIPPED = "skipped"

    @classmethod
    def from_string(cls, value: str) -> 'Verdict':
        """Convert string to Verdict."""
        for member in cls:
            if member.value == value:
                return member
        raise ValueError(f"Unknown verdict: {value}")

RELATIONS = ('<=', '<', '>=', '>', '=', 'iff')

@dataclass(frozen=True)
class InequalityVerdict:
    """One checked relation with both of its sides."""

    name: str
    relation: str
    left: Any
    right: Any
    verdict: Verdict
    equality: bool = False
    note: str = ''

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'relation': self.relation,
            'left': render_side(self.left),
            'right': render_side(self.right),
            'verdict': self.verdict.value,
            'equality': self.equality,
            'note': self.note,
        }

def render_side(value: Any) -> Any:
    """Booleans and None stay as they are; field elements use weight-expression syntax."""
    if value is None or isinstance(value, bool):
        return value
    from dualcheeger.parsing.weight_parser import format_element
    return format_element(value)

def _is_rational(value: Any) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)

def common_field(field: OrderedField, values: Sequence[Any]) -> Tuple[OrderedField, List[Any]]:
    """
    Move values into one backend.

    Rational constants are embedded into ``field``.  If some value is not
    an element of ``field``, everything goes to ``field.fallback()``, and
    to plain floats if that is still not enough.
    """
    values = [field.from_fraction(Fraction(v)) if _is_rational(v) else v for v in values]
    if all(field.contains(v) for v in values):
        return field, values
    fallback = field.fallback()
    moved = [field.to_fallback(v) if field.contains(v) else v for v in values]
    if all(fallback.contains(v) for v in moved):
        return fallback, moved
    real = RealField()
    floats = []
    for v in values:
        if isinstance(v, float):
            floats.append(v)
        elif field.contains(v):
            floats.append(field.to_float(v))
        else:
            floats.append(fallback.to_float(v))
    return real, floats

def check_relation(field: OrderedField, name: str, left: Any, relation: str, right: Any,
                   note: str = '') -> InequalityVerdict:
    """
    Check ``left relation right``.

    Raises:
        ValidationError: If the relation is unknown
    """
    if relation not in RELATIONS or relation == 'iff':
        raise ValidationError(f"Unknown relation: {relation}")
    target, (a, b) = common_field(field, [left, right])
    ordering = target.compare(a, b)
    equality = ordering.is_equalish
    if relation in ('>=', '>'):
        ordering = {Ordering.LESS: Ordering.GREATER, Ordering.GREATER: Ordering.LESS}.get(ordering, ordering)
        relation_kind = relation.replace('>', '<')
    else:
        relation_kind = relation

    if relation_kind == '=':
        verdict = Verdict.HOLDS if equality else Verdict.FAILS
    elif relation_kind == '<=':
        verdict = Verdict.FAILS if ordering is Ordering.GREATER else Verdict.HOLDS
    elif ordering is Ordering.LESS:
        verdict = Verdict.HOLDS
    elif ordering is Ordering.INDISTINGUISHABLE:
        verdict = Verdict.INDISTINGUISHABLE
    else:
        verdict = Verdict.FAILS
    if target is not field and not note:
        note = f"compared in the {target.name} backend"
    return InequalityVerdict(name, relation, left, right, verdict, equality, note)

def check_equivalence(name: str, left: bool, right: bool, left_certain: bool = True,
                      note: str = '') -> InequalityVerdict:
    """
    Check ``left`` if and only if ``right``.

    ``left_certain`` is False when ``left`` was decided by an
    indistinguishable comparison; a disagreement is then indeterminate.
    """
    if left == right:
        verdict = Verdict.HOLDS
    elif left_certain:
        verdict = Verdict.FAILS
    else:
        verdict = Verdict.INDISTINGUISHABLE
    return InequalityVerdict(name, 'iff', left, right, verdict, left and right, note)

def skipped(name: str, relation: str, note: str) -> InequalityVerdict:
    return InequalityVerdict(name, relation, None, None, Verdict.SKIPPED, False, note)

def overall(verdicts: Iterable[InequalityVerdict]) -> Verdict:
    """FAILS if anything fails, else INDISTINGUISHABLE if anything is, else HOLDS."""
    outcomes = {v.verdict for v in verdicts}
    if Verdict.FAILS in outcomes:
        return Verdict.FAILS
    if Verdict.INDISTINGUISHABLE in outcomes:
        return Verdict.INDISTINGUISHABLE
    return Verdict.HOLDS
