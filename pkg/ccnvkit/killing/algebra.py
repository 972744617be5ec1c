# -*- coding: utf-8 -*-
# @Time   : 2026/9/18
# @Author : ccnvkit developers

"""
ccnvkit.killing.algebra
#######################
"""

import numpy as np

from ccnvkit.evaluator.report import ResidualReport
from ccnvkit.killing.candidate import CoordinateVector, KillingCandidate, to_coordinate_vector
from ccnvkit.killing.equations import lie_residual_at
from ccnvkit.scalarfield.jet import field_jet
from ccnvkit.utils import KillingForm


def commutator_at(X, Y, p):
    r"""``[X, Y]^a = X^b d_b Y^a - Y^b d_b X^a`` at ``p`` by exact differentiation.

    Args:
        X (CoordinateVector): first vector.
        Y (CoordinateVector): second vector.
        p (array-like): the point.

    Returns:
        numpy.ndarray: the commutator's coordinate components
    """
    x, jx = X.jacobian(p)
    y, jy = Y.jacobian(p)
    return x @ jy - y @ jx


def ell_vector(chart):
    return CoordinateVector(chart, [1 if label == 'v' else 0 for label in chart.labels], name='ell')


def bracket_vector(X, m):
    r"""``Y = [X, l]`` with exact components ``Y^a = -d_v X^a``.

    Args:
        X (KillingCandidate or CoordinateVector): the vector.
        m (CCNVMetric): the metric.

    Returns:
        CoordinateVector: the bracket as a vector field
    """
    coordinate = to_coordinate_vector(X, m)
    components = [-component.differentiate('v') for component in coordinate.components]
    return CoordinateVector(m.chart, components, name='[{}, ell]'.format(coordinate.name))


class BracketSummary(object):
    r"""``[X, l]`` over a sample.

    For forms A and B the bracket must be ``sigma l`` with a constant ``sigma`` (0 for A, ``|sigma| = 1`` for B).
    For form C it is decomposed as ``a l + b e_3`` and compared with ``a = D_2 F_1``, ``b = D_3 F_1``, its norm
    with ``(D_3 F_1)^2``. The bracket ``Y = [X, l]`` of form C must commute with ``l`` and, when ``X`` is a
    Killing vector, be one too (group ``Y``).

    Attributes:
        form (KillingForm): form of the candidate.
        sigma (list of float): the ``v`` component per sample point (forms A and B).
        coefficients (list of tuple): ``(a, b)`` per sample point (form C).
        norms (list of float): ``g([X, l], [X, l])`` per sample point.
        y_brackets (list of float): largest component of ``[Y, X]`` per sample point (form C).
        residuals (ResidualReport): the checks.
    """

    def __init__(self, X, form):
        self.name = X.name
        self.form = form
        self.sigma = []
        self.coefficients = []
        self.norms = []
        self.y_brackets = []
        self.residuals = ResidualReport('bracket {}'.format(X.name))

    @property
    def sigma_value(self):
        return float(np.mean(self.sigma)) if self.sigma else None

    @property
    def sigma_spread(self):
        return float(np.ptp(self.sigma)) if self.sigma else 0.0

    @property
    def passed(self):
        return self.residuals.passed

    def to_dict(self):
        result = {'form': self.form.value, 'passed': self.passed}
        if self.sigma:
            result.update({'sigma': self.sigma_value, 'sigma_spread': self.sigma_spread, 'stated_sigma': -1.0})
        if self.norms:
            result['max_norm'] = float(np.max(self.norms))
            result['min_norm'] = float(np.min(self.norms))
        if self.y_brackets:
            result['max_Y_X_bracket'] = float(np.max(self.y_brackets))
        return result


def bracket_with_ell(X, m, sample, tolerance=1e-10, norm_tolerance=1e-8, killing=True):
    r"""Check the bracket of a candidate with ``l`` over a sample.

    Args:
        X (KillingCandidate): the candidate.
        m (CCNVMetric): the metric.
        sample (numpy.ndarray): ``[N, D]`` points.
        tolerance (float): proportionality threshold.
        norm_tolerance (float): threshold of the form-C norm check and of the Lie derivative along ``Y``.
        killing (bool): check that ``Y = [X, l]`` is a Killing vector (form C).

    Returns:
        BracketSummary: the summary
    """
    if not isinstance(X, KillingCandidate):
        raise TypeError('`X` must be a KillingCandidate, got {}'.format(type(X).__name__))
    chart = m.chart
    coordinate = to_coordinate_vector(X, m)
    ell = ell_vector(chart)
    iv, i3 = chart.index('v'), chart.index('x3')
    others = [a for a in range(chart.dimension) if a != iv]
    form = X.form
    summary = BracketSummary(X, form)
    d2, d3 = X.d2_x1(m), X.d3_x1(m)
    residuals = summary.residuals
    y_vector = bracket_vector(coordinate, m) if form not in (KillingForm.A, KillingForm.B) else None

    for p in np.atleast_2d(np.asarray(sample, dtype=float)):
        bracket = commutator_at(coordinate, ell, p)
        g = m.jet(p, order=0)[0]
        norm = float(bracket @ g @ bracket)
        summary.norms.append(norm)
        if form in (KillingForm.A, KillingForm.B):
            summary.sigma.append(float(bracket[iv]))
            residuals.collect('proportional_to_ell', bracket[others], p, tolerance, group='bracket')
            if form == KillingForm.A:
                residuals.collect('sigma', bracket[iv], p, tolerance, group='bracket')
            else:
                residuals.collect('sigma', abs(bracket[iv]) - 1.0, p, tolerance, group='bracket')
            continue
        m33, _, _ = field_jet(m.frame.entries[0][0], p, 0)
        w3, _, _ = field_jet(m.W_hat[0], p, 0)
        b = bracket[i3] * m33
        a = bracket[iv] + b * w3 / m33
        expected_a, expected_b = field_jet(d2, p, 0)[0], field_jet(d3, p, 0)[0]
        summary.coefficients.append((float(a), float(b)))
        residuals.collect('u_component', bracket[chart.index('u')], p, tolerance, group='bracket')
        residuals.collect('ell_coefficient', a - expected_a, p, norm_tolerance, group='bracket')
        residuals.collect('e3_coefficient', b - expected_b, p, norm_tolerance, group='bracket')
        residuals.collect('norm', norm - expected_b**2, p, norm_tolerance, group='bracket')
        residuals.collect('Y_ell', commutator_at(y_vector, ell, p), p, tolerance, group='Y')
        if killing:
            residuals.collect('Y_killing', lie_residual_at(y_vector, m, p), p, norm_tolerance, group='Y')
        summary.y_brackets.append(float(np.max(np.abs(commutator_at(y_vector, coordinate, p)))))
    return summary
