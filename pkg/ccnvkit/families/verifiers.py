# -*- coding: utf-8 -*-
# @Time   : 2026/9/19
# @Author : ccnvkit developers

"""
ccnvkit.families.verifiers
##########################

Residual checks for the families whose metric functions are only constrained by differential equations.
"""

import numpy as np

from ccnvkit.evaluator.report import ResidualReport
from ccnvkit.geometry.frame_scalars import frame_scalars_at
from ccnvkit.killing.equations import killing_report
from ccnvkit.scalarfield import integral, Constant
from ccnvkit.scalarfield.jet import field_jet
from ccnvkit.utils import FamilyCase
from ccnvkit.utils.exceptions import FamilyError


class _Jets(object):
    r"""Values and gradients of the fields a verifier needs, at one point."""

    def __init__(self, fields, p):
        self.p = p
        self.values = dict()
        self.gradients = dict()
        for name, field in fields.items():
            value, gradient, _ = field_jet(field, p, 1)
            self.values[name] = value
            self.gradients[name] = gradient

    def __getitem__(self, name):
        return self.values[name]

    def d(self, name, index):
        return self.gradients[name][index]


def _frame_d_n(metric, field, n):
    r"""``D_n f = m_n^e d_e f`` as a field, for ``v``-independent ``f``."""
    inverse = metric.frame.inverse
    result = Constant(metric.chart, 0)
    for e, label in enumerate(metric.chart.transverse):
        if not inverse[n][e].is_zero() and field.depends_on(label):
            result = result + inverse[n][e] * field.differentiate(label)
    return result


def _check_candidate(spec, metric, candidate):
    if candidate.chart != spec.chart or metric.chart != spec.chart:
        raise FamilyError('the candidate, the metric and the family spec must share one chart')


def _frame_block_residuals(report, metric, jets, scalars, x1, f3, tolerance):
    r"""Transport of the transverse frame along the Killing vector (``X_1 != 0``)."""
    size = metric.chart.dimension - 2
    M, dM = scalars.M, scalars.dM
    iu, i3 = 0, 2
    m33 = M[0, 0]
    report.collect('m33_u', dM[iu][0, 0] + jets.d('F3', i3) / x1, jets.p, tolerance, group='frame')
    for n in range(1, size):
        for r in range(n, size):
            value = dM[iu][n, r] + dM[i3][n, r] * f3 / (m33 * x1)
            report.collect('mnr_u', value, jets.p, tolerance, group='frame')
    for r in range(1, size):
        value = dM[iu][0, r] + jets.d('F3', 2 + r) / x1 + (dM[i3][0, r] - dM[2 + r][0, 0]) * f3 / (m33 * x1)
        report.collect('m3r_u', value, jets.p, tolerance, group='frame')


def _wn_residual(metric, jets, scalars, x1, x1_u, f3, n):
    r"""Completed transport equation of ``W_n`` along ``X_T = X_1 d_u + F_3 m_3^f d_f``."""
    N, dN = scalars.N, scalars.dN
    frame_w = scalars.derive(scalars.dW[:, n])
    gradient = jets.gradients['F2'] - x1 * jets.gradients['H'] - jets['H'] * jets.gradients['F1']
    d_n = scalars.derive(gradient)[2 + n]
    along = x1 * dN[0][n] + f3 * np.einsum('e,ef->f', N[0], dN[2:, n])
    d_xt = np.outer(jets.gradients['F3'][2:], N[0]) + f3 * dN[2:, 0]
    lie = along - N[n] @ d_xt
    return (
        x1 * frame_w[1] + f3 * frame_w[2] + x1_u * scalars.W[n] + d_n - f3 * scalars.B[n, 0] -
        scalars.w_hat @ lie
    )


def verify_case_1_2(spec, metric, candidate, sample, tolerance=None, killing=True):
    r"""Residuals of the Case 1.2 equations (``D_3 X_1 = 0``, ``F_3 != 0``) for a candidate metric and vector.

    Subcases ``C12i`` (``X_1 = u``) and ``C12ii`` (``X_1 = 1``) check the frame transport along the Killing
    vector (group ``frame``), the equation for ``H`` (group ``H``, with ``F2_F3`` and ``H0`` for ``C12ii``)
    and the transport of ``W_n`` (group ``W``). Subcase ``C12iii`` (``X_1 = 0``) checks ``F_3,3``, ``m_nr,3``,
    the logarithmic equation for ``m_33`` and the integrated forms of ``W_n`` and ``H`` (slots ``E_n``, ``A3``).

    Args:
        spec (FamilySpec): case ``C12i``, ``C12ii`` or ``C12iii`` with the integration slots.
        metric (CCNVMetric): the candidate metric.
        candidate (KillingCandidate): the candidate vector.
        sample (numpy.ndarray): ``[N, D]`` points.
        tolerance (float, optional): defaults to ``1e-8`` (``1e-7`` with quadrature).
        killing (bool): also cross-check with both Killing verifiers (group ``killing``).

    Returns:
        ResidualReport: the residuals

    Raises:
        FamilyError: wrong case, a candidate with the wrong ``X_1``, or ``F_3 = 0`` where subcase ``C12iii``
            divides by it.
    """
    if spec.case not in (FamilyCase.C12i, FamilyCase.C12ii, FamilyCase.C12iii):
        raise FamilyError('expected a Case 1.2 family, got {}'.format(spec.case.value))
    _check_candidate(spec, metric, candidate)
    if tolerance is None:
        tolerance = 1e-7 if metric.uses_quadrature() else 1e-8
    chart = metric.chart
    u = chart.symbol('u')
    expected = {FamilyCase.C12i: u, FamilyCase.C12ii: 1, FamilyCase.C12iii: 0}[spec.case]
    if getattr(candidate.F1, 'expr', None) != expected:
        raise FamilyError('subcase {} needs X_1 = {}, the candidate has X_1 = {}'.format(
            spec.case.value, expected, candidate.F1))
    sample = np.atleast_2d(np.asarray(sample, dtype=float))
    report = ResidualReport('case {}'.format(spec.case.value))
    if spec.case == FamilyCase.C12iii:
        _transport_residuals(report, spec, metric, candidate, sample, tolerance)
    else:
        _case_1_2_residuals(report, spec, metric, candidate, sample, tolerance)
    if killing:
        report.merge(killing_report(candidate, metric, sample, tolerance), prefix='killing')
        for name in report.records:
            if name.startswith('killing.'):
                report.records[name].group = 'killing'
    return report


def _case_1_2_residuals(report, spec, metric, candidate, sample, tolerance):
    chart = metric.chart
    size = chart.dimension - 2
    F1, F2, F3, H = candidate.F1, candidate.F2, candidate.F3, metric.H
    m33 = metric.frame.entries[0][0]
    fields = {'F1': F1, 'F2': F2, 'F3': F3, 'H': H}
    d3 = lambda f: f.differentiate('x3') / m33
    d2 = lambda f: f.differentiate('u')
    square = F3 * F3
    if spec.case == FamilyCase.C12i:
        u = chart.symbol('u')
        fields['H_eq'] = H + d2(F2) + d2(square) / (2 * u) + F3 * d3(F2) / u + F3 * d3(square) / (2 * u**2)
    else:
        fields['F2_F3'] = d2(F2) + F3 * d3(F2) + d2(square) / 2 + F3 * d3(square) / 2
        fields['H0'] = H - (integral(m33 * F3.differentiate('u'), 'x3') + F2 + square / 2 + spec['A2'])

    for p in sample:
        jets = _Jets(fields, p)
        scalars = frame_scalars_at(metric, p)
        x1, x1_u, f3 = jets['F1'], jets.d('F1', 0), jets['F3']
        _frame_block_residuals(report, metric, jets, scalars, x1, f3, tolerance)
        if spec.case == FamilyCase.C12i:
            report.collect('H', jets['H_eq'], p, tolerance, group='H')
        else:
            report.collect('F2_F3', jets['F2_F3'], p, tolerance, group='H')
            report.collect('H0', jets['H0'], p, tolerance, group='H')
        for n in range(1, size):
            report.collect('W{}'.format(n + 3), _wn_residual(metric, jets, scalars, x1, x1_u, f3, n), p, tolerance,
                           group='W')


def _transport_residuals(report, spec, metric, candidate, sample, tolerance, group='transport'):
    r"""Equations of the ``X_1 = 0`` subcases: ``F_3,3``, ``m_nr,3``, the ``m_33`` equation, ``W_n`` and ``H``."""
    chart = metric.chart
    size = chart.dimension - 2
    F2, F3 = candidate.F2, candidate.F3
    if F3.is_zero():
        raise FamilyError('F3 vanishes identically, the X_1 = 0 equations divide by it')
    m33 = metric.frame.entries[0][0]
    fields = {'F2': F2, 'F3': F3, 'm33': m33}
    fields['H_eq'] = metric.H + integral(m33 * F2.differentiate('u') / F3, 'x3') - spec['A3']
    for n in range(1, size):
        label = chart.transverse[n]
        fields['W{}'.format(label[1:])] = (
            integral(m33 * _frame_d_n(metric, F2, n) / F3, 'x3') - spec['E{}'.format(label[1:])]
        )

    for p in sample:
        f3 = F3._evaluate(p)
        if abs(f3) < 1e-12:
            raise FamilyError('F3 vanishes at {}, the X_1 = 0 equations divide by it'.format(p.tolist()))
        jets = _Jets(fields, p)
        scalars = frame_scalars_at(metric, p)
        dM = scalars.dM
        report.collect('F3_3', jets.d('F3', 2), p, tolerance, group=group)
        for n in range(1, size):
            for r in range(n, size):
                report.collect('mnr_3', dM[2][n, r], p, tolerance, group=group)
        value = jets.d('m33', 0) / jets['m33'] - jets.d('F3', 0) / f3 - jets.d('F2', 2) / jets['m33'] / f3
        report.collect('m33_log', value, p, tolerance, group=group)
        for n in range(1, size):
            name = 'W{}'.format(chart.transverse[n][1:])
            report.collect(name, scalars.W[n] + jets[name], p, tolerance, group=group)
        report.collect('H', jets['H_eq'], p, tolerance, group=group)


def verify_case_2_1(spec, metric, candidate, sample, tolerance=None, killing=True):
    r"""Residuals of Case 2.1 (``X_1 = 0`` with vanishing transverse connection components).

    Group ``structure``: ``m_3r``, ``D_3 W_n``, ``Gamma_3n2``, ``Gamma_3n3``, ``Gamma_3nm``, ``F_2,r`` and
    ``F_3,e``. Group ``transport``: the ``X_1 = 0`` equations for ``m_nr``, ``m_33``, ``W_n`` and ``H``.

    Args:
        spec (FamilySpec): case ``C21`` with slots ``A3`` and ``E_n``.
        metric (CCNVMetric): the candidate metric.
        candidate (KillingCandidate): the candidate vector, ``X_1 = 0``.
        sample (numpy.ndarray): ``[N, D]`` points.
        tolerance (float, optional): defaults to ``1e-8`` (``1e-7`` with quadrature).
        killing (bool): also cross-check with both Killing verifiers (group ``killing``).

    Returns:
        ResidualReport: the residuals
    """
    if spec.case != FamilyCase.C21:
        raise FamilyError('expected a C21 family, got {}'.format(spec.case.value))
    _check_candidate(spec, metric, candidate)
    if not candidate.F1.is_zero():
        raise FamilyError('Case 2.1 needs X_1 = 0, the candidate has X_1 = {}'.format(candidate.F1))
    if tolerance is None:
        tolerance = 1e-7 if metric.uses_quadrature() else 1e-8
    chart = metric.chart
    size = chart.dimension - 2
    sample = np.atleast_2d(np.asarray(sample, dtype=float))
    report = ResidualReport('case C21')
    for p in sample:
        scalars = frame_scalars_at(metric, p)
        for r in range(1, size):
            report.collect('m3r', scalars.M[0, r], p, tolerance, group='structure')
        for n in range(4, chart.dimension + 1):
            report.collect('D3_Wn', scalars.derive(scalars.dW[:, n - 3])[2], p, tolerance, group='structure')
            report.collect('gamma_3n2', scalars.gamma_3n2(n), p, tolerance, group='structure')
            report.collect('gamma_3n3', scalars.gamma_3n3(n), p, tolerance, group='structure')
            for m in range(4, chart.dimension + 1):
                report.collect('gamma_3nm', scalars.gamma_3nm(n, m), p, tolerance, group='structure')
        _, f2_gradient, _ = field_jet(candidate.F2, p, 1)
        _, f3_gradient, _ = field_jet(candidate.F3, p, 1)
        report.collect('F2_r', f2_gradient[3:], p, tolerance, group='structure')
        report.collect('F3_e', f3_gradient[2:], p, tolerance, group='structure')
    _transport_residuals(report, spec, metric, candidate, sample, tolerance)
    if killing:
        report.merge(killing_report(candidate, metric, sample, tolerance), prefix='killing')
        for name in report.records:
            if name.startswith('killing.'):
                report.records[name].group = 'killing'
    return report
