# -*- coding: utf-8 -*-
# @Time   : 2026/9/20
# @Author : ccnvkit developers

"""
ccnvkit.examples.example_two
############################

Metrics with a Killing vector ``X_1 = 1``, ``F_3 = eps m_33`` whose norm ``2 F_2 + (eps m_33)^2`` only depends
on ``x3 - eps u`` and ``x^n``.
"""

from logging import getLogger

import numpy as np
import sympy

from ccnvkit.examples.example_one import _field
from ccnvkit.geometry.frame import TransverseFrame
from ccnvkit.geometry.metric import CCNVMetric
from ccnvkit.killing.candidate import KillingCandidate
from ccnvkit.sampler import RegionSampler
from ccnvkit.scalarfield import antiderivative, exact_number, shift, symbolic, Constant, QuadratureField, \
    SymbolicTree
from ccnvkit.utils.exceptions import FamilyError


class ExampleIISpec(object):
    r"""Inputs of the ``X_1 = 1`` example.

    Functions of ``y = x3 - eps u`` are given as functions of ``x3`` and shifted by the builder.

    Args:
        chart (Chart): the chart.
        eps (float): the nonzero shift rate.
        profile (list of list, optional): upper-triangular frame profile ``m_is(x3, x^n)``, identity by default.
        H (optional): ``H(u, x^e)``; for the analytic form a function ``H(x3, x^n)`` that gets shifted.
        F2 (optional): ``F_2(x3, x^n)``, shifted.
        f (optional): ``f(x^e)``.
        E (dict, optional): transverse label (``'x4'``, ...) to ``E_n(x3, x^m)``, shifted.
        analytic (bool): use the series form, which needs a symbolic ``f``.
        order (int): last power of ``x3`` kept in the series is ``order + 1``.
        region (dict, optional): sample region used to estimate the truncation error.
    """

    def __init__(self, chart, eps, profile=None, H=0, F2=0, f=0, E=None, analytic=False, order=4, region=None):
        if eps == 0:
            raise FamilyError('`eps` must be nonzero')
        self.chart = chart
        self.eps = exact_number(eps)
        self.region = dict(region or {})
        self.analytic = bool(analytic)
        self.order = int(order)
        if self.order < 0:
            raise FamilyError('the series order must be non-negative, got {}'.format(order))
        transverse = list(chart.transverse)
        rest = transverse[1:]
        size = chart.dimension - 2
        profile = profile or [[1 if i == e else 0 for e in range(size)] for i in range(size)]
        self.profile = [[_field(chart, value, 'm{}{}'.format(i + 3, e + 3), transverse) for e, value in enumerate(r)]
                        for i, r in enumerate(profile)]
        self.H = _field(chart, H, 'H', transverse if self.analytic else ['u'] + transverse)
        self.F2 = _field(chart, F2, 'F2', transverse)
        self.f = _field(chart, f, 'f', transverse)
        E = dict(E or {})
        unknown = set(E) - set(rest)
        if unknown:
            raise FamilyError('E is indexed by {}, got {}'.format(rest, sorted(unknown)))
        self.E = [_field(chart, E.get(label, 0), 'E{}'.format(label[1:]), transverse) for label in rest]

    def frame(self):
        return TransverseFrame(self.chart, [[shift(entry, self.eps) for entry in row] for row in self.profile])


def _candidate_and_norm(spec, frame):
    chart = spec.chart
    m33 = frame.entries[0][0]
    F2 = shift(spec.F2, spec.eps)
    F3 = spec.eps * m33
    candidate = KillingCandidate(chart, 1, F2, F3, name='X')
    return candidate, 2 * F2 + F3 * F3


def build_example_II(spec, tol=1e-10, limit=40):
    r"""Metric, Killing vector and norm of the ``X_1 = 1`` example.

    .. math::
        \hat W_3 = \int_0^u H_{,3} du + \epsilon^{-1}(F_2 + f), \quad
        L_n = H_{,n} + \epsilon \partial_n \int_0^u H_{,3} du + f_{,n}

    and ``W_n`` integrates ``L_n`` along the characteristics ``x3 - eps u = const``, plus ``E_n``.

    Args:
        spec (ExampleIISpec): the inputs.
        tol (float): quadrature tolerance.
        limit (int): quadrature subdivision limit.

    Returns:
        tuple: ``(CCNVMetric, KillingCandidate, norm field)``
    """
    chart, eps = spec.chart, spec.eps
    frame = spec.frame()
    H = spec.H
    F2 = shift(spec.F2, eps)
    I3 = antiderivative(H.differentiate('x3'), 'u', 0.0, 0.0, tol, limit)
    W_hat = [I3 + (F2 + spec.f) / eps]
    for n, label in enumerate(chart.transverse[1:], start=1):
        L = H.differentiate(label) + eps * I3.differentiate(label) + spec.f.differentiate(label)
        integral = QuadratureField(L, 'u', 0.0, eps, tol, limit) if not L.is_zero() else Constant(chart, 0)
        W_hat.append(integral + shift(spec.E[n - 1], eps))
    metric = CCNVMetric(chart, H, W_hat, frame, name='example II')
    candidate, norm = _candidate_and_norm(spec, frame)
    return metric, candidate, norm


def build_example_II_analytic(spec):
    r"""Series form of the ``X_1 = 1`` example for ``H = H(x3 - eps u, x^n)`` and ``f`` analytic at ``x3 = 0``.

    .. math::
        \hat W_3 = -\epsilon^{-1}(H - F_2 - f), \quad
        \hat W_n = \epsilon^{-1} \sum_{p=0}^{N} \partial_n \partial_3^p f(0, x^m) \frac{(x^3)^{p+1}}{(p+1)!} + E_n

    The construction is exact when ``f`` is a polynomial in ``x3`` of degree at most ``N``. Otherwise a warning
    reports the size of the first neglected term on the region.

    Args:
        spec (ExampleIISpec): analytic inputs, ``N = spec.order``.

    Returns:
        tuple: ``(CCNVMetric, KillingCandidate, norm field)``, all symbolic
    """
    if not spec.analytic:
        raise FamilyError('the series form needs an ExampleIISpec built with analytic=True')
    if not isinstance(spec.f, SymbolicTree):
        raise FamilyError('the series form needs a symbolic f, got {!r}'.format(spec.f))
    logger = getLogger()
    chart, eps = spec.chart, spec.eps
    frame = spec.frame()
    H = shift(spec.H, eps)
    F2 = shift(spec.F2, eps)
    x3 = chart.symbol('x3')
    W_hat = [-(H - F2 - spec.f) / eps]
    for n, label in enumerate(chart.transverse[1:], start=1):
        derivative = sympy.diff(spec.f.expr, chart.symbol(label))
        series = sympy.Integer(0)
        for p in range(spec.order + 1):
            coefficient = derivative.subs(x3, 0)
            series += coefficient * x3**(p + 1) / sympy.factorial(p + 1)
            derivative = sympy.diff(derivative, x3)
        if derivative != 0:
            _warn_truncation(spec, label, derivative, logger)
        W_hat.append(symbolic(chart, series / eps) + shift(spec.E[n - 1], eps))
    metric = CCNVMetric(chart, H, W_hat, frame, name='example II analytic')
    candidate, norm = _candidate_and_norm(spec, frame)
    return metric, candidate, norm


def _warn_truncation(spec, label, derivative, logger, samples=50):
    chart, eps = spec.chart, spec.eps
    x3 = chart.symbol('x3')
    N = spec.order
    remainder = symbolic(chart, derivative.subs(x3, 0) * x3**(N + 2) / sympy.factorial(N + 2) / eps)
    points = RegionSampler(chart, spec.region).sample(samples)
    estimate = float(np.max(np.abs(remainder.evaluate_many(points))))
    logger.warning('the series of W_{} is truncated at order {}: first neglected term up to {!r} on the region'.format(
        label[1:], N + 1, estimate))
