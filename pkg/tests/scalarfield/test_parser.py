# -*- coding: utf-8 -*-
# @Time   : 2026/9/22
# @Author : ccnvkit developers

import math

import pytest
import sympy

from ccnvkit.scalarfield import parse_expr, parse_field, print_field, Constant, SymbolicTree
from ccnvkit.utils.exceptions import ParseError


class TestGrammar:

    def test_polynomial(self, chart):
        """Sums, products and powers evaluate like the python expression."""
        field = parse_field('2*u + x3^2 - x4/2', chart)
        assert isinstance(field, SymbolicTree)
        assert field.evaluate([1.5, 0.0, 0.3, -0.8]) == pytest.approx(2 * 1.5 + 0.3**2 + 0.4)

    def test_both_power_operators(self, chart):
        assert parse_expr('x3**3', chart) == parse_expr('x3^3', chart)

    def test_power_is_right_associative(self, chart):
        x3 = chart.symbol('x3')
        assert parse_expr('x3^2^3', chart) == x3**8

    def test_power_binds_tighter_than_minus(self, chart):
        x3 = chart.symbol('x3')
        assert parse_expr('-x3^2', chart) == -x3**2

    def test_decimals_are_exact(self, chart):
        """``0.1`` is read as 1/10, not as a float."""
        assert parse_expr('0.1', chart) == sympy.Rational(1, 10)
        assert parse_expr('2.5e-1*u', chart) == chart.symbol('u') / 4

    def test_constant_expression(self, chart):
        field = parse_field('(1 + 2) / 4', chart)
        assert isinstance(field, Constant)
        assert field.value == 0.75

    def test_functions(self, chart):
        field = parse_field('exp(u) + log(x3) + sin(x4) + cos(v) + sqrt(u)', chart)
        p = [1.2, 0.4, 0.7, -0.3]
        expected = math.exp(1.2) + math.log(0.7) + math.sin(-0.3) + math.cos(0.4) + math.sqrt(1.2)
        assert field.evaluate(p) == pytest.approx(expected)

    def test_mask_is_read_after_simplification(self, chart):
        assert parse_field('u*x4 + 1', chart).mask == frozenset({'u', 'x4'})
        assert parse_field('x3 + x4 - x4', chart).mask == frozenset({'x3'})
        cancelled = parse_field('x4 - x4', chart)
        assert isinstance(cancelled, Constant)
        assert cancelled.mask == frozenset()

    def test_numbers_pass_through(self, chart):
        assert parse_field(3, chart).value == 3.0

    def test_printed_form_reads_back(self, chart):
        field = parse_field('exp(1)*x3^2 - u/3', chart)
        assert parse_field(print_field(field), chart).expr == field.expr


class TestErrors:

    def test_dangling_operator(self, chart):
        """The error points at the offending token."""
        with pytest.raises(ParseError) as info:
            parse_field('u + * x3', chart)
        assert info.value.position == 4
        assert 'column 5' in str(info.value)

    def test_unknown_identifier(self, chart):
        with pytest.raises(ParseError) as info:
            parse_field('u + y', chart)
        assert info.value.position == 4
        assert 'unknown identifier [y]' in info.value.message

    def test_coordinate_outside_the_chart(self, chart, chart5):
        assert parse_field('x5', chart5).mask == frozenset({'x5'})
        with pytest.raises(ParseError):
            parse_field('x5', chart)

    def test_function_arity(self, chart):
        with pytest.raises(ParseError) as info:
            parse_field('sin(u, v)', chart)
        assert 'exactly one argument' in info.value.message
        with pytest.raises(ParseError):
            parse_field('exp + 1', chart)

    def test_coordinate_is_not_callable(self, chart):
        with pytest.raises(ParseError):
            parse_field('u(x3)', chart)

    def test_unbalanced_parenthesis(self, chart):
        with pytest.raises(ParseError) as info:
            parse_field('(u + v', chart)
        assert info.value.position == 6

    def test_empty_and_stray_characters(self, chart):
        with pytest.raises(ParseError):
            parse_field('   ', chart)
        with pytest.raises(ParseError) as info:
            parse_field('u $ v', chart)
        assert info.value.position == 2

    def test_parse_error_is_a_value_error(self, chart):
        with pytest.raises(ValueError):
            parse_field('u +', chart)
