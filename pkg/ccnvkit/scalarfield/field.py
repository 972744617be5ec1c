# -*- coding: utf-8 -*-
# @Time   : 2026/9/15
# @Author : ccnvkit developers

"""
ccnvkit.scalarfield.field
#########################

Real valued functions of chart coordinates with exact partial derivatives.

Symbolic operands stay a single sympy expression. As soon as a shifted or quadrature field takes part,
the result is a :class:`Compound` whose expression refers to the non-symbolic operands through placeholder
symbols and is differentiated by the chain rule.
"""

import itertools
import numbers

import numpy as np
import sympy
from scipy import integrate

from ccnvkit.utils import FieldType
from ccnvkit.utils.exceptions import FieldEvaluationError, MaskError, QuadratureError

_placeholder_ids = itertools.count()


def _new_placeholder(kind):
    return sympy.Symbol('_{}{}'.format(kind, next(_placeholder_ids)), real=True)


def exact_number(value):
    r"""Turn a python number into an exact sympy number (``0.1`` becomes ``1/10``)."""
    if isinstance(value, sympy.Basic):
        return value
    if isinstance(value, numbers.Integral):
        return sympy.Integer(int(value))
    return sympy.nsimplify(float(value), rational=True)


def _real_value(value, expr, p):
    if isinstance(value, complex):
        raise FieldEvaluationError('[{}] is not real at {}'.format(expr, list(p)))
    value = float(value)
    if not np.isfinite(value):
        raise FieldEvaluationError('[{}] is not finite at {}'.format(expr, list(p)))
    return value


class ScalarField(object):
    r"""Base class of every scalar field.

    A field is immutable once built; the only state written after construction is the cache of its
    partial derivatives.

    Args:
        chart (Chart): the coordinate chart.
        mask (iterable of str): labels of the coordinates the field may depend on.
    """
    type = None

    def __init__(self, chart, mask):
        self.chart = chart
        self.mask = frozenset(mask)
        self._derivatives = dict()
        self.placeholder = None

    def evaluate(self, point):
        r"""Value of the field at ``point``.

        Args:
            point (array-like): one finite value per chart coordinate.

        Returns:
            float: the value
        """
        return self._evaluate(self.chart.point(point))

    def _evaluate(self, p):
        raise NotImplementedError

    def evaluate_many(self, points):
        r"""Values of the field at every row of ``points``.

        Args:
            points (numpy.ndarray): shape ``[N, D]``

        Returns:
            numpy.ndarray: shape ``[N]``
        """
        points = np.atleast_2d(np.asarray(points, dtype=float))
        return np.array([self._evaluate(p) for p in points], dtype=float)

    def differentiate(self, coord):
        r"""Exact partial derivative with respect to ``coord``.

        Args:
            coord (str or int): coordinate label or index

        Returns:
            ScalarField: the derivative, ``Constant(0)`` when the coordinate is outside the mask
        """
        label = self.chart.label(coord)
        if label not in self.mask:
            return Constant(self.chart, 0)
        if label not in self._derivatives:
            self._derivatives[label] = self._differentiate(label)
        return self._derivatives[label]

    def _differentiate(self, label):
        raise NotImplementedError

    def depends_on(self, coord):
        return self.chart.label(coord) in self.mask

    def uses_quadrature(self):
        return False

    def is_zero(self):
        return False

    def _placeholder(self):
        if self.placeholder is None:
            self.placeholder = _new_placeholder(self.type.name.lower())
        return self.placeholder

    def __add__(self, other):
        return combine(sympy.Add, self, other)

    def __radd__(self, other):
        return combine(sympy.Add, other, self)

    def __sub__(self, other):
        return combine(lambda a, b: a - b, self, other)

    def __rsub__(self, other):
        return combine(lambda a, b: a - b, other, self)

    def __mul__(self, other):
        return combine(sympy.Mul, self, other)

    def __rmul__(self, other):
        return combine(sympy.Mul, other, self)

    def __truediv__(self, other):
        return combine(lambda a, b: a / b, self, other)

    def __rtruediv__(self, other):
        return combine(lambda a, b: a / b, other, self)

    def __pow__(self, other):
        return combine(sympy.Pow, self, other)

    def __rpow__(self, other):
        return combine(sympy.Pow, other, self)

    def __neg__(self):
        return combine(sympy.Mul, -1, self)

    def __pos__(self):
        return self


class SymbolicTree(ScalarField):
    r"""A sympy expression over the chart symbols.

    Args:
        chart (Chart): the coordinate chart.
        expr (sympy.Expr): expression over ``chart.symbols``.
        mask (iterable of str, optional): declared mask; defaults to the coordinates present in ``expr``.
    """
    type = FieldType.SYMBOLIC

    def __init__(self, chart, expr, mask=None):
        expr = sympy.sympify(expr)
        unknown = expr.free_symbols - set(chart.symbols)
        if unknown:
            raise ValueError('expression [{}] uses symbols {} outside the chart'.format(
                expr, sorted(map(str, unknown))))
        present = {symbol.name for symbol in expr.free_symbols}
        if mask is not None and not present <= set(mask):
            raise ValueError('expression [{}] is not covered by the mask {}'.format(expr, sorted(mask)))
        super(SymbolicTree, self).__init__(chart, present if mask is None else mask)
        self.expr = expr
        self._scalar = sympy.lambdify(chart.symbols, expr, modules='math')
        self._vector = None

    def _evaluate(self, p):
        try:
            value = self._scalar(*map(float, p))
        except (ZeroDivisionError, ValueError, OverflowError) as e:
            raise FieldEvaluationError('[{}] cannot be evaluated at {}: {}'.format(self.expr, list(p), e))
        return _real_value(value, self.expr, p)

    def evaluate_many(self, points):
        points = np.atleast_2d(np.asarray(points, dtype=float))
        if self._vector is None:
            self._vector = sympy.lambdify(self.chart.symbols, self.expr, modules='numpy')
        with np.errstate(all='ignore'):
            values = self._vector(*points.T)
        try:
            values = np.broadcast_to(np.asarray(values, dtype=float), (points.shape[0], )).copy()
        except TypeError:
            raise FieldEvaluationError('[{}] is not real on the given points'.format(self.expr))
        if not np.all(np.isfinite(values)):
            bad = points[~np.isfinite(values)][0]
            raise FieldEvaluationError('[{}] cannot be evaluated at {}'.format(self.expr, bad.tolist()))
        return values

    def _differentiate(self, label):
        return symbolic(self.chart, sympy.diff(self.expr, self.chart.symbol(label)))

    def is_zero(self):
        return self.expr == 0

    def __repr__(self):
        return 'SymbolicTree({})'.format(self.expr)

    def __str__(self):
        return str(self.expr)


class Constant(SymbolicTree):
    r"""A literal value with an empty dependency mask."""
    type = FieldType.CONSTANT

    def __init__(self, chart, value):
        value = exact_number(value)
        if value.free_symbols:
            raise ValueError('[{}] is not a constant'.format(value))
        ScalarField.__init__(self, chart, ())
        self.expr = value
        try:
            self.value = float(value)
        except TypeError:
            raise FieldEvaluationError('[{}] is not a finite real constant'.format(value))
        if not np.isfinite(self.value):
            raise FieldEvaluationError('[{}] is not a finite real constant'.format(value))

    def _evaluate(self, p):
        return self.value

    def evaluate_many(self, points):
        points = np.atleast_2d(np.asarray(points, dtype=float))
        return np.full(points.shape[0], self.value)

    def _differentiate(self, label):
        return Constant(self.chart, 0)

    def is_zero(self):
        return self.value == 0

    def __repr__(self):
        return 'Constant({})'.format(self.expr)


class Compound(ScalarField):
    r"""Arithmetic over fields that are not all symbolic.

    Args:
        chart (Chart): the coordinate chart.
        expr (sympy.Expr): expression over chart symbols and the placeholders in ``children``.
        children (dict): placeholder symbol to the non-symbolic field it stands for.
    """
    type = FieldType.COMPOUND

    def __init__(self, chart, expr, children):
        mask = {symbol.name for symbol in expr.free_symbols if symbol in chart.symbols}
        for child in children.values():
            mask |= child.mask
        super(Compound, self).__init__(chart, mask)
        self.expr = expr
        self.children = dict(children)
        self._order = list(self.children)
        self._function = sympy.lambdify(tuple(chart.symbols) + tuple(self._order), expr, modules='math')

    def _evaluate(self, p):
        values = [self.children[placeholder]._evaluate(p) for placeholder in self._order]
        try:
            value = self._function(*map(float, p), *values)
        except (ZeroDivisionError, ValueError, OverflowError) as e:
            raise FieldEvaluationError('[{}] cannot be evaluated at {}: {}'.format(self.expr, list(p), e))
        return _real_value(value, self.expr, p)

    def _differentiate(self, label):
        result = _build(self.chart, sympy.diff(self.expr, self.chart.symbol(label)), self.children)
        for placeholder, child in self.children.items():
            if not child.depends_on(label):
                continue
            partial = sympy.diff(self.expr, placeholder)
            if partial == 0:
                continue
            result = result + _build(self.chart, partial, self.children) * child.differentiate(label)
        return result

    def uses_quadrature(self):
        return any(child.uses_quadrature() for child in self.children.values())

    def __repr__(self):
        return 'Compound({}; {})'.format(self.expr, ', '.join('{}={!r}'.format(k, v) for k, v in self.children.items()))


class ShiftedComposite(ScalarField):
    r"""``base`` evaluated with ``x3`` replaced by ``x3 - eps * u``.

    Args:
        base (ScalarField): the field being shifted.
        eps (float): the shift rate along ``u``.
    """
    type = FieldType.SHIFTED

    def __init__(self, base, eps):
        mask = set(base.mask)
        if 'x3' in mask:
            mask.add('u')
        super(ShiftedComposite, self).__init__(base.chart, mask)
        self.base = base
        self.eps = float(eps)
        self._iu = base.chart.index('u')
        self._i3 = base.chart.index('x3')

    def _evaluate(self, p):
        q = p.copy()
        q[self._i3] = p[self._i3] - self.eps * p[self._iu]
        return self.base._evaluate(q)

    def _differentiate(self, label):
        derivative = _shifted(self.base.differentiate(label), self.eps)
        if label == 'u':
            derivative = derivative - self.eps * _shifted(self.base.differentiate('x3'), self.eps)
        return derivative

    def uses_quadrature(self):
        return self.base.uses_quadrature()

    def __repr__(self):
        return 'ShiftedComposite({!r}, eps={})'.format(self.base, self.eps)


class QuadratureField(ScalarField):
    r"""Definite integral of ``integrand`` along ``coord`` from ``lower`` to the point's ``coord`` value.

    With a nonzero ``drift`` the integration path is the characteristic
    ``z -> (coord = z, x3 = x3 + drift * (z - coord))`` through the point.

    Args:
        integrand (ScalarField): the function being integrated.
        coord (str): integration coordinate.
        lower (float): lower limit.
        drift (float): slope of ``x3`` along the path, must be 0 when integrating along ``x3``.
        tol (float): absolute and relative tolerance handed to QUADPACK.
        limit (int): maximum number of subintervals.
    """
    type = FieldType.QUADRATURE

    def __init__(self, integrand, coord, lower=0.0, drift=0.0, tol=1e-10, limit=40):
        chart = integrand.chart
        label = chart.label(coord)
        if drift and label == 'x3':
            raise ValueError('a drifting quadrature cannot integrate along x3')
        super(QuadratureField, self).__init__(chart, set(integrand.mask) | {label})
        self.integrand = integrand
        self.coord = label
        self.lower = float(lower)
        self.drift = float(drift)
        self.tol = float(tol)
        self.limit = int(limit)
        self._ic = chart.index(label)
        self._i3 = chart.index('x3')

    def _evaluate(self, p):
        upper = p[self._ic]
        if upper == self.lower:
            return 0.0
        q = p.copy()

        def path(z):
            q[self._ic] = z
            if self.drift:
                q[self._i3] = p[self._i3] + self.drift * (z - upper)
            return self.integrand._evaluate(q)

        result = integrate.quad(
            path, self.lower, upper, epsabs=self.tol, epsrel=self.tol, limit=self.limit, full_output=1
        )
        if len(result) > 3:
            raise QuadratureError(
                'quadrature of [{!r}] along {} from {} to {} did not converge at {}: {}'.format(
                    self.integrand, self.coord, self.lower, upper, list(p), result[3]
                )
            )
        return float(result[0])

    def _sibling(self, integrand):
        if integrand.is_zero():
            return Constant(self.chart, 0)
        return QuadratureField(integrand, self.coord, self.lower, self.drift, self.tol, self.limit)

    def _differentiate(self, label):
        if label == self.coord:
            derivative = self.integrand
            if self.drift:
                derivative = derivative - self.drift * self._sibling(self.integrand.differentiate('x3'))
            return derivative
        return self._sibling(self.integrand.differentiate(label))

    def uses_quadrature(self):
        return True

    def __repr__(self):
        return 'QuadratureField({!r}, d{}, lower={}, drift={})'.format(self.integrand, self.coord, self.lower,
                                                                       self.drift)


def symbolic(chart, expr):
    r"""Field of a sympy expression, a :class:`Constant` when it has no free symbols."""
    expr = sympy.sympify(expr)
    if not expr.free_symbols:
        return Constant(chart, expr)
    return SymbolicTree(chart, expr)


def as_field(chart, value):
    r"""Lift a number or sympy expression to a field of ``chart``; fields pass through."""
    if isinstance(value, ScalarField):
        if value.chart != chart:
            raise ValueError('cannot combine fields of {} and {}'.format(value.chart, chart))
        return value
    if isinstance(value, (numbers.Number, np.number)):
        return Constant(chart, exact_number(value))
    return symbolic(chart, value)


def _term(field):
    if isinstance(field, SymbolicTree):
        return field.expr, dict()
    if isinstance(field, Compound):
        return field.expr, dict(field.children)
    placeholder = field._placeholder()
    return placeholder, {placeholder: field}


def _build(chart, expr, children):
    used = expr.free_symbols
    children = {placeholder: child for placeholder, child in children.items() if placeholder in used}
    if not children:
        return symbolic(chart, expr)
    if len(children) == 1 and expr in children:
        return children[expr]
    return Compound(chart, expr, children)


def combine(op, a, b):
    r"""Apply a binary sympy operation to two fields (or a field and a number)."""
    chart = a.chart if isinstance(a, ScalarField) else b.chart
    a, b = as_field(chart, a), as_field(chart, b)
    if isinstance(a, SymbolicTree) and isinstance(b, SymbolicTree):
        return symbolic(chart, op(a.expr, b.expr))
    expr_a, children = _term(a)
    expr_b, children_b = _term(b)
    children.update(children_b)
    return _build(chart, op(expr_a, expr_b), children)


def apply(function, field):
    r"""Apply a unary sympy function (``sympy.exp``, ``sympy.log``, ...) to a field."""
    expr, children = _term(field)
    return _build(field.chart, function(expr), children)


def exp(field):
    return apply(sympy.exp, field)


def log(field):
    return apply(sympy.log, field)


def sin(field):
    return apply(sympy.sin, field)


def cos(field):
    return apply(sympy.cos, field)


def sqrt(field):
    return apply(sympy.sqrt, field)


def _shifted(base, eps):
    if isinstance(base, Constant):
        return base
    return ShiftedComposite(base, eps)


def shift(field, eps):
    r"""``field`` with ``x3`` replaced by ``x3 - eps * u``.

    Symbolic fields are substituted exactly and stay symbolic; anything else becomes a
    :class:`ShiftedComposite`.
    """
    if isinstance(field, Constant):
        return field
    if isinstance(field, SymbolicTree):
        chart = field.chart
        x3, u = chart.symbol('x3'), chart.symbol('u')
        return symbolic(chart, field.expr.subs(x3, x3 - exact_number(eps) * u))
    return ShiftedComposite(field, eps)


def antiderivative(field, coord, lower=0.0, drift=0.0, tol=1e-10, limit=40):
    r"""Quadrature field whose derivative along ``coord`` is ``field``.

    Integration constants are never folded in; callers add them as separate fields.

    Args:
        field (ScalarField): the integrand.
        coord (str): integration coordinate.
        lower (float): lower limit.
        drift (float): see :class:`QuadratureField`.
        tol (float): quadrature tolerance.
        limit (int): subdivision limit.

    Returns:
        ScalarField: ``Constant(0)`` for a zero integrand, a :class:`QuadratureField` otherwise
    """
    if field.is_zero():
        return Constant(field.chart, 0)
    return QuadratureField(field, coord, lower, drift, tol, limit)


def require_mask(field, slot, allowed):
    r"""Check that ``field`` only depends on coordinates in ``allowed``.

    Raises:
        MaskError: naming ``slot`` and the first offending coordinate in chart order.
    """
    allowed = set(allowed)
    for label in field.chart.labels:
        if label in field.mask and label not in allowed:
            raise MaskError(slot, label, [c for c in field.chart.labels if c in allowed])
    return field


def integral(field, coord, lower=0.0, tol=1e-10, limit=40):
    r"""Definite integral of ``field`` along ``coord`` from ``lower``.

    Symbolic integrands are integrated exactly when sympy finds a closed form free of ``Piecewise``;
    everything else becomes a :class:`QuadratureField`.
    """
    if field.is_zero():
        return Constant(field.chart, 0)
    if isinstance(field, SymbolicTree):
        chart = field.chart
        symbol = chart.symbol(coord)
        dummy = sympy.Dummy('z', real=True)
        closed = sympy.integrate(field.expr.subs(symbol, dummy), (dummy, exact_number(lower), symbol))
        if not closed.has(sympy.Integral, sympy.Piecewise):
            return symbolic(chart, sympy.simplify(closed))
    return QuadratureField(field, coord, lower, 0.0, tol, limit)
