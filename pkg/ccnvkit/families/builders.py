# -*- coding: utf-8 -*-
# @Time   : 2026/9/19
# @Author : ccnvkit developers

"""
ccnvkit.families.builders
#########################

Closed-form families of CCNV metrics with an additional Killing vector. Every builder returns the metric
together with the Killing vector in structured ``(F_1, F_2, F_3)`` form.
"""

from logging import getLogger

import numpy as np

from ccnvkit.geometry.frame import TransverseFrame
from ccnvkit.geometry.metric import CCNVMetric
from ccnvkit.killing.candidate import KillingCandidate
from ccnvkit.killing.equations import lie_residual_at
from ccnvkit.sampler import RegionSampler
from ccnvkit.scalarfield import antiderivative, integral, shift, symbolic, Constant
from ccnvkit.utils import FamilyCase
from ccnvkit.utils.exceptions import FamilyError, MaskError


def _expect(spec, case):
    if spec.case != case:
        raise FamilyError('expected a {} family, got {}'.format(case.value, spec.case.value))


def _sampler(spec, seed=2026):
    return RegionSampler(spec.chart, spec.region, seed)


def _u_independent_frame(spec):
    frame = spec.transverse_frame()
    for i, row in enumerate(frame.entries):
        for e, entry in enumerate(row):
            if entry.depends_on('u'):
                raise MaskError('m{}{}'.format(i + 3, e + 3), 'u', spec.chart.transverse)
    return frame


def _lowered(frame, components):
    r"""``W_e = sum_i m_ie W_i`` for the frame components ``W_i``."""
    size = frame.size
    result = []
    for e in range(size):
        total = Constant(frame.chart, 0)
        for i in range(e + 1):
            if not frame.entries[i][e].is_zero() and not components[i].is_zero():
                total = total + frame.entries[i][e] * components[i]
        result.append(total)
    return result


def _integrated_w(spec, frame, A0):
    r"""``W_e = int_0^u d_e A_0 du + m_ie C_i`` for a ``u``-independent frame."""
    chart = spec.chart
    C = _lowered(frame, spec.indexed('C', chart.transverse))
    return [antiderivative(A0.differentiate(label), 'u', 0.0) + c for label, c in zip(chart.transverse, C)]


def _block_frame(spec, m33):
    r"""Frame with the given ``m_33``, ``m_3r = 0`` and the family's block ``m_nr`` (identity when omitted)."""
    chart = spec.chart
    size = chart.dimension - 2
    entries = [[Constant(chart, 0) for _ in range(size)] for _ in range(size)]
    entries[0][0] = m33
    rest = spec.frame_entries
    for n in range(1, size):
        for r in range(1, size):
            entries[n][r] = rest[n - 1][r - 1] if rest is not None else Constant(chart, 1 if n == r else 0)
    return TransverseFrame(chart, entries)


def build_case_1_1_i(spec):
    r"""Family with ``X_1 = u`` and ``F_3 = 0``.

    ``H = f_2 / u^2 - g_2' / u + g_2 / u^2``, ``W_i = B_i / u`` and the Killing vector has
    ``F_2 = (f_2 + g_2) / u``. The ``W_3 = 0`` gauge holds iff ``B_3 = 0``.

    Args:
        spec (FamilySpec): slots ``f2(x^e)``, ``g2(u)``, ``B3 .. BD(x^e)`` and a ``u``-independent frame.

    Returns:
        tuple: ``(CCNVMetric, KillingCandidate)``

    Raises:
        FamilyError: the sample region contains ``u = 0``.
        MaskError: a slot or frame entry depends on a forbidden coordinate.
    """
    _expect(spec, FamilyCase.C11i)
    chart = spec.chart
    sampler = _sampler(spec)
    low, high = sampler.bounds[chart.index('u')]
    if low <= 0.0 <= high:
        raise FamilyError('the C11i family is singular at u = 0, which lies in the region [{}, {}]'.format(low, high))
    frame = _u_independent_frame(spec)
    u = symbolic(chart, chart.symbol('u'))
    f2, g2 = spec['f2'], spec['g2']
    H = f2 / u**2 - g2.differentiate('u') / u + g2 / u**2
    W = [b / u for b in spec.indexed('B', chart.transverse)]
    metric = CCNVMetric(chart, H, _lowered(frame, W), frame, name='C11i')
    candidate = KillingCandidate(chart, u, (f2 + g2) / u, 0, name='X')
    return metric, candidate


def build_case_1_1_ii(spec):
    r"""Family with ``X_1 = 1`` and ``F_3 = 0``.

    ``H = F_2 + A_0`` and ``W_i = int_0^u D_i A_0 du + C_i``.

    Args:
        spec (FamilySpec): slots ``F2(x^e)``, ``A0(u, x^r)``, ``C3 .. CD(x^e)`` and a ``u``-independent frame.

    Returns:
        tuple: ``(CCNVMetric, KillingCandidate)``
    """
    _expect(spec, FamilyCase.C11ii)
    chart = spec.chart
    frame = _u_independent_frame(spec)
    F2, A0 = spec['F2'], spec['A0']
    metric = CCNVMetric(chart, F2 + A0, _integrated_w(spec, frame, A0), frame, name='C11ii')
    candidate = KillingCandidate(chart, 1, F2, 0, name='X')
    return metric, candidate


def build_case_2_2(spec, tolerance=1e-8, checks=10, seed=2026):
    r"""Family with ``B_(mn) = 0`` entirely defined by ``F_1(u, x3)``.

    The frame has ``m_33 = F_1,3`` and ``m_3r = 0``; then

    .. math::
        F_3 = -\int_0^{x^3} F_1 F_{1,3u} dx^3 + A_6, \quad
        H = \frac{F_{1,3u}}{F_{1,3}} F_3 - F_{1,uu} F_1 - F_{3,u} - \frac{F_{2,3}}{F_{1,3}}, \quad
        \hat W_r = -F_{3,r}

    The remaining equations constrain ``F_2`` and ``A_6``; they are checked with the Lie derivative on
    ``checks`` points of the region.

    Args:
        spec (FamilySpec): slots ``F1(u, x3)``, ``F2``, ``A6(u, x^r)`` and the block ``m_nr(x^r)``.
        tolerance (float): Lie residual threshold of the compatibility check.
        checks (int): number of region points of the regularity and compatibility checks.
        seed (int): seed of those points.

    Returns:
        tuple: ``(CCNVMetric, KillingCandidate)``

    Raises:
        FamilyError: ``F_1,3`` vanishes on the region, or ``F_2``, ``A_6`` are incompatible with ``F_1``.
    """
    _expect(spec, FamilyCase.C22)
    logger = getLogger()
    chart = spec.chart
    F1, F2, A6 = spec['F1'], spec['F2'], spec['A6']
    m33 = F1.differentiate('x3')
    if m33.is_zero():
        raise FamilyError('F1 = {} does not depend on x3'.format(F1))
    sample = _sampler(spec, seed).sample(checks)
    for p in sample:
        if abs(m33._evaluate(p)) < 1e-12:
            raise FamilyError('F1,3 vanishes at {} in the region'.format(p.tolist()))

    frame = _block_frame(spec, m33)

    F1_3u = m33.differentiate('u')
    F3 = -integral(F1 * F1_3u, 'x3', 0.0) + A6
    H = (F1_3u / m33) * F3 - F1.differentiate('u').differentiate('u') * F1
    H = H - F3.differentiate('u') - F2.differentiate('x3') / m33
    W_hat = [Constant(chart, 0)] + [-F3.differentiate(label) for label in chart.transverse[1:]]
    metric = CCNVMetric(chart, H, W_hat, frame, gauge=True, name='C22')
    candidate = KillingCandidate(chart, F1, F2, F3, name='X')

    worst = max(np.max(np.abs(lie_residual_at(candidate, metric, p))) for p in sample)
    if worst > tolerance:
        raise FamilyError('F2 = {} and A6 = {} are incompatible with F1 = {}: Lie residual {!r}'.format(
            F2, A6, F1, worst))
    logger.debug('C22 compatibility residual {!r}'.format(worst))
    return metric, candidate


def build_null_n(spec):
    r"""Null Killing vector ``X = n`` (``X_1 = 1``, ``F_2 = F_3 = 0``).

    ``H = A_0(u, x^r)`` and ``W_i = int_0^u D_i A_0 du + C_i``; the transverse frame is only required to be
    ``u``-independent.

    Args:
        spec (FamilySpec): slots ``A0(u, x^r)``, ``C3 .. CD(x^e)`` and a ``u``-independent frame.

    Returns:
        tuple: ``(CCNVMetric, KillingCandidate)``
    """
    _expect(spec, FamilyCase.N0)
    chart = spec.chart
    frame = _u_independent_frame(spec)
    A0 = spec['A0']
    metric = CCNVMetric(chart, A0, _integrated_w(spec, frame, A0), frame, name='N0')
    return metric, KillingCandidate(chart, 1, 0, 0, name='X')


def build_null_transport(spec, checks=10, seed=2026):
    r"""Null Killing vector with ``X_1 = 1`` and ``F_3 != 0``, in the ``W_3 = 0`` gauge.

    With ``y = x3 - eps u`` the frame has ``m_33 = P(y, x^r)``, ``m_3r = 0`` and the given block ``m_nr(x^r)``,
    so that ``(log m_33)_,u = D_2 log F_3`` for ``F_3 = eps m_33``. Then

    .. math::
        F_2 = -\frac{F_3^2}{2}, \quad H = F_2 + A_2(u, x^r), \quad
        \hat W_r = \int_0^u A_{2,r} du + E_r(y, x^m)

    and ``W_r`` is transported along ``d_u + eps d_3`` by ``d_r A_2``.

    Args:
        spec (FamilySpec): slots ``eps`` (nonzero constant), ``P(x3, x^r)``, ``A2(u, x^r)``,
            ``E4 .. ED(x3, x^m)`` and the block ``m_nr(x^r)``. ``P`` and ``E_r`` are given at ``u = 0`` and
            shifted by the builder.
        checks (int): number of region points where ``P`` must not vanish.
        seed (int): seed of those points.

    Returns:
        tuple: ``(CCNVMetric, KillingCandidate)``

    Raises:
        FamilyError: ``eps`` is zero or not constant, or ``P`` vanishes on the region.
    """
    _expect(spec, FamilyCase.N1)
    chart = spec.chart
    eps = spec['eps']
    if not isinstance(eps, Constant) or eps.is_zero():
        raise FamilyError('the N1 family needs a nonzero constant `eps`, got {}'.format(eps))
    eps = eps.expr
    m33 = shift(spec['P'], eps)
    if m33.is_zero():
        raise FamilyError('the N1 family needs a nonzero `P`')
    for p in _sampler(spec, seed).sample(checks):
        if abs(m33._evaluate(p)) < 1e-12:
            raise FamilyError('m33 = {} vanishes at {} in the region'.format(m33, p.tolist()))
    frame = _block_frame(spec, m33)

    F3 = eps * m33
    F2 = -(F3 * F3) / 2
    A2 = spec['A2']
    W_hat = [Constant(chart, 0)]
    for label, E in zip(chart.transverse[1:], spec.indexed('E', chart.transverse[1:])):
        W_hat.append(integral(A2.differentiate(label), 'u', 0.0) + shift(E, eps))
    metric = CCNVMetric(chart, F2 + A2, W_hat, frame, gauge=True, name='N1')
    return metric, KillingCandidate(chart, 1, F2, F3, name='X')


builders = {
    FamilyCase.C11i: build_case_1_1_i,
    FamilyCase.C11ii: build_case_1_1_ii,
    FamilyCase.C22: build_case_2_2,
    FamilyCase.N0: build_null_n,
    FamilyCase.N1: build_null_transport,
}


def build_family(spec):
    r"""Dispatch to the builder of ``spec.case``."""
    if spec.case not in builders:
        raise FamilyError('family {} has no builder, only a verifier'.format(spec.case.value))
    return builders[spec.case](spec)
