"""
Weight-expression syntax for field elements.

Grammar (whitespace is insignificant, ``e`` denotes the infinitesimal)::

    expr    := [sign] term (sign term)* [ '+' order ] | order
    term    := coeff ['*' epspart] | epspart
    epspart := 'e' ['^' expo]
    coeff   := int | int '/' posint
    expo    := int | int '/' posint | '(' ['-'] expo ')'
    order   := 'O' '(' epspart ')'

The optional ``O(e^T)`` term records a finite truncation order and is only
meaningful for Levi-Civita backends.  Repeated exponents are merged by
adding coefficients.
"""
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

from dualcheeger.config import MAX_EXPONENT_NESTING
from dualcheeger.exceptions import WeightSyntaxError
from dualcheeger.fields.base import Backend, FieldElement, OrderedField
from dualcheeger.fields.levi_civita import INFINITY, LeviCivitaNumber

class Token(NamedTuple):
    kind: str
    text: str
    position: int

_SINGLE = {'+': 'PLUS', '-': 'MINUS', '*': 'STAR', '/': 'SLASH', '^': 'CARET',
           '(': 'LPAREN', ')': 'RPAREN', 'e': 'EPS', 'O': 'ORDER'}

_DESCRIPTIONS = {
    'INT': 'integer', 'PLUS': "'+'", 'MINUS': "'-'", 'STAR': "'*'", 'SLASH': "'/'",
    'CARET': "'^'", 'LPAREN': "'('", 'RPAREN': "')'", 'EPS': "'e'", 'ORDER': "'O'",
    'END': 'end of input',
}

def _is_digit(char: str) -> bool:
    return '0' <= char <= '9'

def tokenize(text: str) -> List[Token]:
    """
    Split a weight expression into tokens.

    Raises:
        WeightSyntaxError: On a character outside the grammar
    """
    tokens = []
    i = 0
    while i < len(text):
        char = text[i]
        if char.isspace():
            i += 1
        elif _is_digit(char):
            start = i
            while i < len(text) and _is_digit(text[i]):
                i += 1
            tokens.append(Token('INT', text[start:i], start))
        elif char in _SINGLE:
            tokens.append(Token(_SINGLE[char], char, i))
            i += 1
        else:
            raise WeightSyntaxError(f"Unexpected character {char!r}", text, i,
                                    ['integer', "'e'", "'+'", "'-'"])
    tokens.append(Token('END', '', len(text)))
    return tokens

class ParsedExpression(NamedTuple):
    terms: Dict[Fraction, Fraction]
    truncation: Union[Fraction, float]
    epsilon_position: Optional[int]

class _WeightParser:
    """Recursive-descent parser over the token list."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.depth = 0
        self.epsilon_position = None

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _fail(self, message: str, *expected: str):
        raise WeightSyntaxError(message, self.text, self.current.position,
                                [_DESCRIPTIONS.get(kind, kind) for kind in expected])

    def _expect(self, kind: str) -> Token:
        token = self.current
        if token.kind != kind:
            self._fail(f"Unexpected {_DESCRIPTIONS[token.kind]}", kind)
        self.index += 1
        return token

    def _accept(self, kind: str) -> Optional[Token]:
        if self.current.kind == kind:
            token = self.current
            self.index += 1
            return token
        return None

    def parse(self) -> ParsedExpression:
        terms: Dict[Fraction, Fraction] = {}
        truncation = INFINITY
        if self.current.kind == 'ORDER':
            truncation = self._order()
        else:
            sign = -1 if self._accept('MINUS') else 1
            if sign == 1:
                self._accept('PLUS')
            while True:
                exponent, coefficient = self._term()
                terms[exponent] = terms.get(exponent, Fraction(0)) + sign * coefficient
                if self._accept('PLUS'):
                    if self.current.kind == 'ORDER':
                        truncation = self._order()
                        break
                    sign = 1
                elif self._accept('MINUS'):
                    sign = -1
                else:
                    break
        if self.current.kind != 'END':
            self._fail(f"Unexpected {_DESCRIPTIONS[self.current.kind]}", 'PLUS', 'MINUS', 'END')
        return ParsedExpression(terms, truncation, self.epsilon_position)

    def _term(self) -> Tuple[Fraction, Fraction]:
        if self.current.kind == 'EPS':
            return self._epspart(), Fraction(1)
        if self.current.kind != 'INT':
            self._fail(f"Unexpected {_DESCRIPTIONS[self.current.kind]}", 'INT', 'EPS')
        coefficient = self._ratio()
        if self._accept('STAR'):
            return self._epspart(), coefficient
        return Fraction(0), coefficient

    def _integer(self) -> Tuple[int, Token]:
        token = self._expect('INT')
        try:
            return int(token.text), token
        except ValueError as e:
            raise WeightSyntaxError(f"Integer literal too long ({len(token.text)} digits)",
                                    self.text, token.position, ['shorter integer']) from e

    def _ratio(self) -> Fraction:
        numerator, _ = self._integer()
        if self._accept('SLASH'):
            denominator, denominator_token = self._integer()
            if denominator == 0:
                raise WeightSyntaxError("Zero denominator", self.text, denominator_token.position,
                                        ['positive integer'])
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def _epspart(self) -> Fraction:
        token = self._expect('EPS')
        if self.epsilon_position is None:
            self.epsilon_position = token.position
        if self._accept('CARET'):
            return self._exponent()
        return Fraction(1)

    def _exponent(self) -> Fraction:
        opening = self.current
        if self._accept('LPAREN'):
            if self.depth >= MAX_EXPONENT_NESTING:
                raise WeightSyntaxError(f"Exponent nested deeper than {MAX_EXPONENT_NESTING} parentheses",
                                        self.text, opening.position, ['integer'])
            self.depth += 1
            negative = self._accept('MINUS') is not None
            value = self._exponent()
            self._expect('RPAREN')
            self.depth -= 1
            return -value if negative else value
        if self.current.kind != 'INT':
            self._fail(f"Unexpected {_DESCRIPTIONS[self.current.kind]}", 'INT', 'LPAREN')
        return self._ratio()

    def _order(self) -> Fraction:
        self._expect('ORDER')
        self._expect('LPAREN')
        order = self._epspart()
        self._expect('RPAREN')
        return order

def parse_expression(text: str) -> ParsedExpression:
    """Parse a weight expression into exponent -> coefficient form."""
    return _WeightParser(text).parse()

def _resolve_backend(backend: Union[str, Backend, OrderedField]) -> Backend:
    if isinstance(backend, OrderedField):
        return backend.backend
    if isinstance(backend, Backend):
        return backend
    return Backend.from_string(backend)

def parse_element(text: str, backend: Union[str, Backend, OrderedField]) -> FieldElement:
    """
    Parse a field-element literal.

    Args:
        text: Weight expression
        backend: Backend tag, ``Backend`` member or field instance

    Returns:
        The canonical element of the backend

    Raises:
        WeightSyntaxError: On syntax errors, zero denominators, or
            e-terms in a non-Levi-Civita backend
    """
    tag = _resolve_backend(backend)
    parsed = parse_expression(text)
    if tag in (Backend.RATIONAL, Backend.FLOAT):
        if parsed.epsilon_position is not None or parsed.truncation != INFINITY:
            position = parsed.epsilon_position if parsed.epsilon_position is not None else 0
            raise WeightSyntaxError(f"Infinitesimal terms are not allowed in the {tag.value} backend",
                                    text, position, ['integer', 'fraction'])
        value = parsed.terms.get(Fraction(0), Fraction(0))
        return value if tag is Backend.RATIONAL else float(value)
    return LeviCivitaNumber(parsed.terms.items(), parsed.truncation, exact=tag is Backend.LC_RATIONAL)

def _format_rational(value: Fraction) -> str:
    return str(Fraction(value))

def _format_exponent(exponent: Fraction) -> str:
    exponent = Fraction(exponent)
    if exponent.denominator == 1 and exponent >= 0:
        return str(exponent.numerator)
    return f"({exponent})"

def format_element(x: FieldElement) -> str:
    """
    Render an element in canonical weight-expression form.

    Exponents are strictly increasing, zero coefficients are absent, and
    a finite truncation order is written as a trailing ``O(e^T)`` term.
    """
    if isinstance(x, LeviCivitaNumber):
        return _format_series(x)
    return _format_rational(Fraction(x))

def _format_series(x: LeviCivitaNumber) -> str:
    parts = []
    for exponent, coefficient in x.terms:
        coefficient = Fraction(coefficient)
        magnitude = abs(coefficient)
        if exponent == 0:
            body = _format_rational(magnitude)
        elif magnitude == 1:
            body = f"e^{_format_exponent(exponent)}"
        else:
            body = f"{_format_rational(magnitude)}*e^{_format_exponent(exponent)}"
        if not parts:
            parts.append(f"-{body}" if coefficient < 0 else body)
        else:
            parts.append(f"- {body}" if coefficient < 0 else f"+ {body}")
    if x.truncation != INFINITY:
        order = f"O(e^{_format_exponent(x.truncation)})"
        parts.append(f"+ {order}" if parts else order)
    return ' '.join(parts) if parts else '0'
