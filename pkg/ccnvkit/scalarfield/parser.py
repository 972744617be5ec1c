# -*- coding: utf-8 -*-
# @Time   : 2026/9/15
# @Author : ccnvkit developers

"""
ccnvkit.scalarfield.parser
##########################

Grammar of the field DSL::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom (('^' | '**') unary)?
    atom   := NUMBER | NAME | NAME '(' expr ')' | '(' expr ')'

``NAME`` is a chart label (``u``, ``v``, ``x3``, ...) or one of the functions ``exp``, ``log``, ``sin``, ``cos``,
``sqrt``. Power is right associative and binds tighter than unary minus, so ``-x3^2`` is ``-(x3^2)``.
Decimal literals are read as exact rationals.
"""

import re
from fractions import Fraction

import sympy
from sympy.printing.str import StrPrinter

from ccnvkit.scalarfield.field import symbolic
from ccnvkit.utils.exceptions import ParseError

functions = {
    'exp': sympy.exp,
    'log': sympy.log,
    'sin': sympy.sin,
    'cos': sympy.cos,
    'sqrt': sympy.sqrt,
}

_token_spec = [
    ('NUMBER', r'(?:\d+\.\d*|\.\d+|\d+)(?:[eE][-+]?\d+)?'),
    ('NAME', r'[A-Za-z_][A-Za-z_0-9]*'),
    ('POW', r'\*\*|\^'),
    ('OP', r'[-+*/(),]'),
    ('SKIP', r'\s+'),
    ('MISMATCH', r'.'),
]
_token_re = re.compile('|'.join('(?P<{}>{})'.format(name, pattern) for name, pattern in _token_spec))


def tokenize(text):
    r"""Split ``text`` into ``(kind, value, position)`` tokens, ending with an ``END`` token.

    Raises:
        ParseError: on a character that starts no token.
    """
    tokens = []
    for match in _token_re.finditer(text):
        kind, value, position = match.lastgroup, match.group(), match.start()
        if kind == 'SKIP':
            continue
        if kind == 'MISMATCH':
            raise ParseError('unexpected character [{}]'.format(value), position, text)
        tokens.append((kind, value, position))
    tokens.append(('END', '', len(text)))
    return tokens


class Parser(object):
    r"""Recursive descent parser producing a sympy expression over the chart symbols.

    Args:
        text (str): the expression.
        chart (Chart): the chart whose labels are the admissible identifiers.
    """

    def __init__(self, text, chart):
        self.text = text
        self.chart = chart
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def _advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _accept(self, *values):
        kind, value, _ = self.current
        if kind in ('OP', 'POW') and value in values:
            return self._advance()
        return None

    def _expect(self, value):
        if self._accept(value) is None:
            _, found, position = self.current
            raise ParseError('expected [{}] but found [{}]'.format(value, found or 'end of input'), position, self.text)

    def _error(self, message):
        raise ParseError(message, self.current[2], self.text)

    def parse(self):
        if self.current[0] == 'END':
            self._error('empty expression')
        expr = self.expr()
        if self.current[0] != 'END':
            self._error('unexpected [{}]'.format(self.current[1]))
        return expr

    def expr(self):
        result = self.term()
        while True:
            token = self._accept('+', '-')
            if token is None:
                return result
            rhs = self.term()
            result = result + rhs if token[1] == '+' else result - rhs

    def term(self):
        result = self.unary()
        while True:
            token = self._accept('*', '/')
            if token is None:
                return result
            rhs = self.unary()
            result = result * rhs if token[1] == '*' else result / rhs

    def unary(self):
        token = self._accept('+', '-')
        if token is None:
            return self.power()
        operand = self.unary()
        return -operand if token[1] == '-' else operand

    def power(self):
        base = self.atom()
        if self.current[0] == 'POW':
            self._advance()
            return base**self.unary()
        return base

    def atom(self):
        kind, value, position = self.current
        if kind == 'NUMBER':
            self._advance()
            fraction = Fraction(value)
            return sympy.Rational(fraction.numerator, fraction.denominator)
        if kind == 'NAME':
            self._advance()
            if value in functions:
                if self._accept('(') is None:
                    raise ParseError('function [{}] must be called with one argument'.format(value), position,
                                     self.text)
                argument = self.expr()
                if self.current[1] == ',':
                    raise ParseError('function [{}] takes exactly one argument'.format(value), self.current[2],
                                     self.text)
                self._expect(')')
                return functions[value](argument)
            if value in self.chart.labels:
                if self.current[1] == '(':
                    raise ParseError('coordinate [{}] is not a function'.format(value), self.current[2], self.text)
                return self.chart.symbol(value)
            raise ParseError('unknown identifier [{}]'.format(value), position, self.text)
        if self._accept('(') is not None:
            result = self.expr()
            self._expect(')')
            return result
        self._error('unexpected [{}]'.format(value or 'end of input'))


class FieldPrinter(StrPrinter):
    r"""Canonical printer whose output :func:`parse_field` reads back."""

    def _print_Exp1(self, expr):
        return 'exp(1)'

    def _print_Float(self, expr):
        return repr(float(expr))


def parse_expr(text, chart):
    r"""Parse ``text`` into a sympy expression over ``chart.symbols``."""
    if not isinstance(text, str):
        text = str(text)
    return Parser(text, chart).parse()


def parse_field(text, chart):
    r"""Parse a DSL expression into a field.

    Args:
        text (str): the expression, e.g. ``"2*u + x3^2"``.
        chart (Chart): the chart.

    Returns:
        ScalarField: a :class:`SymbolicTree`, or a :class:`Constant` when no coordinate survives.

    Note:
        sympy simplifies the expression while it is built, and the dependency mask is read afterwards from
        its free symbols. Masks are therefore semantic: ``x4 - x4`` is the constant ``0`` with an empty mask,
        and ``x3 + x4 - x4`` depends on ``x3`` only.

    Raises:
        ParseError: syntax error, unknown identifier or arity mismatch.
    """
    return symbolic(chart, parse_expr(text, chart))


def print_field(field):
    r"""Canonical text of a symbolic field."""
    return FieldPrinter().doprint(field.expr)
