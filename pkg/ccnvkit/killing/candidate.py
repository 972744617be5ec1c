# -*- coding: utf-8 -*-
# @Time   : 2026/9/18
# @Author : ccnvkit developers

"""
ccnvkit.killing.candidate
#########################
"""

import numpy as np

from ccnvkit.scalarfield import as_field, parse_field, require_mask, Constant, SymbolicTree
from ccnvkit.scalarfield.jet import field_jet
from ccnvkit.utils import KillingForm
from ccnvkit.utils.exceptions import CandidateError


class KillingCandidate(object):
    r"""A candidate Killing vector in structured form.

    Its frame components are ``X_1 = F_1``, ``X_2 = -D_2(X_1) v + F_2``, ``X_3 = -D_3(X_1) v + F_3`` and
    ``X_m = 0`` for ``m >= 4``, i.e. ``X = X_1 n + X_2 l + X_3 e_3``.

    Args:
        chart (Chart): the chart.
        F1, F2, F3 (ScalarField or number): functions of ``(u, x^e)``.
        form (KillingForm or str, optional): declared form, inferred from ``F1`` when omitted.
        name (str, optional): label used in reports.
    """

    def __init__(self, chart, F1, F2, F3, form=None, name=None):
        self.chart = chart
        allowed = [label for label in chart.labels if label != 'v']
        self.F1 = require_mask(as_field(chart, F1), 'F1', allowed)
        self.F2 = require_mask(as_field(chart, F2), 'F2', allowed)
        self.F3 = require_mask(as_field(chart, F3), 'F3', allowed)
        self.name = name or 'X'
        inferred = self.infer_form(self.F1)
        if form is None:
            form = inferred
        form = KillingForm(form)
        if form != KillingForm.GENERAL and not self._admits(form):
            raise CandidateError('candidate [{}] declared as form {} but X_1 = {}'.format(
                self.name, form.value, self.F1))
        self.form = form

    @classmethod
    def ell(cls, chart):
        r"""The null vector ``l = d/dv``."""
        return cls(chart, 0, 1, 0, name='ell')

    @classmethod
    def n(cls, chart):
        r"""The frame vector ``n = d/du - H d/dv``."""
        return cls(chart, 1, 0, 0, name='n')

    @staticmethod
    def infer_form(F1):
        if isinstance(F1, Constant):
            return KillingForm.A
        if isinstance(F1, SymbolicTree) and F1.expr == F1.chart.symbol('u'):
            return KillingForm.B
        if F1.mask <= {'u', 'x3'}:
            return KillingForm.C
        return KillingForm.GENERAL

    def _admits(self, form):
        if form == KillingForm.A:
            return isinstance(self.F1, Constant)
        if form == KillingForm.B:
            return isinstance(self.F1, SymbolicTree) and self.F1.expr == self.chart.symbol('u')
        return self.F1.mask <= {'u', 'x3'}

    def replace(self, F1=None, F2=None, F3=None, form=None, name=None):
        return KillingCandidate(
            self.chart,
            self.F1 if F1 is None else F1,
            self.F2 if F2 is None else F2,
            self.F3 if F3 is None else F3,
            form=form,
            name=name or self.name,
        )

    def scale(self, c):
        r"""``c X``; ``c`` must be a nonzero number."""
        if c == 0:
            raise CandidateError('cannot scale candidate [{}] by 0'.format(self.name))
        return KillingCandidate(self.chart, c * self.F1, c * self.F2, c * self.F3, name=self.name)

    def d2_x1(self, metric):
        r"""``D_2 X_1 = d_u F_1`` as a field."""
        return self.F1.differentiate('u')

    def d3_x1(self, metric):
        r"""``D_3 X_1 = m_3^e d_e F_1`` as a field."""
        inverse = metric.frame.inverse
        result = Constant(self.chart, 0)
        for e, label in enumerate(self.chart.transverse):
            if inverse[0][e].is_zero() or not self.F1.depends_on(label):
                continue
            result = result + inverse[0][e] * self.F1.differentiate(label)
        return result

    def frame_components(self, metric):
        r"""Exact frame components ``[X_1, X_2, X_3]`` for ``metric``."""
        v = self.chart.symbol('v')
        X2 = self.F2 - self.d2_x1(metric) * v if not self.d2_x1(metric).is_zero() else self.F2
        d3 = self.d3_x1(metric)
        X3 = self.F3 - d3 * v if not d3.is_zero() else self.F3
        return [self.F1, as_field(self.chart, X2), as_field(self.chart, X3)]

    def __repr__(self):
        return 'KillingCandidate({}: F1={}, F2={}, F3={}, form={})'.format(self.name, self.F1, self.F2, self.F3,
                                                                        self.form.value)


class CoordinateVector(object):
    r"""A vector field given by one scalar field per coordinate; components may depend on ``v``.

    Args:
        chart (Chart): the chart.
        components (list): ``D`` fields or numbers, in chart order.
        name (str, optional): label used in reports.
    """

    def __init__(self, chart, components, name=None):
        if len(components) != chart.dimension:
            raise ValueError('a vector of {} needs {} components, got {}'.format(chart, chart.dimension,
                                                                                 len(components)))
        self.chart = chart
        self.components = [as_field(chart, component) for component in components]
        self.name = name or 'X'

    def evaluate(self, p):
        p = self.chart.point(p)
        return np.array([component._evaluate(p) for component in self.components])

    def jacobian(self, p):
        r"""Values and first derivatives at ``p``.

        Returns:
            tuple: ``(X[D], J[D, D])`` with ``J[b, a] = d_b X^a``
        """
        p = self.chart.point(p)
        dimension = self.chart.dimension
        values = np.zeros(dimension)
        jacobian = np.zeros((dimension, dimension))
        for a, component in enumerate(self.components):
            value, gradient, _ = field_jet(component, p, 1)
            values[a] = value
            jacobian[:, a] = gradient
        return values, jacobian

    def __getitem__(self, coord):
        return self.components[self.chart.index(coord)]

    def __repr__(self):
        return 'CoordinateVector({}: {})'.format(self.name, ', '.join(str(c) for c in self.components))


def to_coordinate_vector(X, m):
    r"""Coordinate components of a candidate on a metric.

    ``X^u = X_1``, ``X^e = X_3 m_3^e`` and ``X^v = X_2 - X_1 H - X_3 m_3^e W_e``, as exact fields.

    Args:
        X (KillingCandidate): the candidate.
        m (CCNVMetric): the metric.

    Returns:
        CoordinateVector: the same vector in coordinates
    """
    if isinstance(X, CoordinateVector):
        return X
    if X.chart != m.chart:
        raise CandidateError('candidate [{}] lives on {}, metric [{}] on {}'.format(X.name, X.chart, m.name, m.chart))
    X1, X2, X3 = X.frame_components(m)
    inverse = m.frame.inverse
    transverse = [X3 * inverse[0][e] if not inverse[0][e].is_zero() else Constant(m.chart, 0)
                  for e in range(m.chart.dimension - 2)]
    Xv = X2 - X1 * m.H if not (X1.is_zero() or m.H.is_zero()) else X2
    for e, component in enumerate(transverse):
        if not component.is_zero() and not m.W_hat[e].is_zero():
            Xv = Xv - component * m.W_hat[e]
    return CoordinateVector(m.chart, [X1, Xv] + transverse, name=X.name)


def coordinate_vector(chart, expressions, name=None):
    r"""A :class:`CoordinateVector` from DSL strings, sympy expressions or numbers."""
    return CoordinateVector(chart, [parse_field(e, chart) if isinstance(e, str) else e for e in expressions], name)
