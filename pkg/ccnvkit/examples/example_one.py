# -*- coding: utf-8 -*-
# @Time   : 2026/9/20
# @Author : ccnvkit developers

"""
ccnvkit.examples.example_one
############################

Metrics with a Killing vector ``X_1 = u``, ``F_3 = eps u m_33``. The transverse frame only depends on
``y = x3 - eps u`` and ``x^n``.
"""

import sympy

from ccnvkit.geometry.frame import TransverseFrame
from ccnvkit.geometry.metric import CCNVMetric
from ccnvkit.killing.candidate import KillingCandidate
from ccnvkit.sampler import RegionSampler
from ccnvkit.scalarfield import as_field, exact_number, parse_field, require_mask, shift, symbolic, Constant, \
    QuadratureField
from ccnvkit.utils.exceptions import FamilyError


def _field(chart, value, slot, allowed):
    field = parse_field(value, chart) if isinstance(value, str) else as_field(chart, value)
    return require_mask(field, slot, allowed)


class ExampleISpec(object):
    r"""Inputs of the ``X_1 = u`` example.

    Functions of ``y = x3 - eps u`` are given as functions of ``x3`` and shifted by the builder.

    Args:
        chart (Chart): the chart.
        eps (float): the nonzero shift rate.
        profile (list of list, optional): upper-triangular frame profile ``m_is(x3, x^n)``, identity by default.
        F2 (optional): ``F_2(u, x^e)``; for the separable form it defaults to the closed form.
        A (optional): ``A(x3, x^n)``.
        B (dict, optional): transverse label (``'x4'``, ...) to ``B_n(x3, x^m)``.
        p (list, optional): separable exponents ``p_3 .. p_D``.
        h (list, optional): separable factors ``h_3(x^n) .. h_D(x^n)``.
        g (optional): separable ``g(u, x^n)``.
        region (dict, optional): sample region; it must not contain ``u = 0``.
    """

    def __init__(self, chart, eps, profile=None, F2=None, A=0, B=None, p=None, h=None, g=0, region=None):
        if eps == 0:
            raise FamilyError('`eps` must be nonzero')
        self.chart = chart
        self.eps = exact_number(eps)
        self.region = dict(region or {})
        transverse = list(chart.transverse)
        rest = transverse[1:]
        size = chart.dimension - 2
        identity = [[1 if i == e else 0 for e in range(size)] for i in range(size)]
        profile = profile or identity

        self.separable = p is not None or h is not None
        if self.separable:
            p = list(p if p is not None else [0] * size)
            h = list(h if h is not None else [1] + [0] * (size - 1))
            if len(p) != size or len(h) != size:
                raise FamilyError('separable inputs need {} exponents and factors'.format(size))
            self.p = [exact_number(value) for value in p]
            if 2 * self.p[0] + 1 == 0:
                raise FamilyError('the separable form needs 2 p3 + 1 != 0')
            self.h = [_field(chart, value, 'h{}'.format(s + 3), rest) for s, value in enumerate(h)]
            self.g = _field(chart, g, 'g', ['u'] + rest)
            x3 = chart.symbol('x3')
            row = [symbolic(chart, x3**self.p[s]) * self.h[s] for s in range(size)]
            profile = [row] + [list(r) for r in profile[1:]]
        self.profile = [[_field(chart, value, 'm{}{}'.format(i + 3, e + 3), transverse) for e, value in enumerate(r)]
                        for i, r in enumerate(profile)]
        if F2 is None and self.separable:
            F2 = self.separable_F2()
        self.F2 = _field(chart, 0 if F2 is None else F2, 'F2', ['u'] + transverse)
        self.A = _field(chart, A, 'A', transverse)
        B = dict(B or {})
        unknown = set(B) - set(rest)
        if unknown:
            raise FamilyError('B is indexed by {}, got {}'.format(rest, sorted(unknown)))
        self.B = [_field(chart, B.get(label, 0), 'B{}'.format(label[1:]), transverse) for label in rest]

    def y(self):
        chart = self.chart
        return chart.symbol('x3') - self.eps * chart.symbol('u')

    def separable_F2(self):
        r"""``F_2 = -eps y^(2 p3 + 1) h_3^2 / (2 p3 + 1) + g``."""
        p3 = self.p[0]
        return symbolic(self.chart, -self.eps * self.y()**(2 * p3 + 1) / (2 * p3 + 1)) * self.h[0]**2 + self.g

    def frame(self):
        return TransverseFrame(self.chart, [[shift(entry, self.eps) for entry in row] for row in self.profile])

    def check_region(self):
        sampler = RegionSampler(self.chart, self.region)
        low, high = sampler.bounds[self.chart.index('u')]
        if low <= 0.0 <= high:
            raise FamilyError('the example is singular at u = 0, which lies in the region [{}, {}]'.format(low, high))


def _candidate_and_norm(spec, frame):
    chart = spec.chart
    u, v = (symbolic(chart, chart.symbol(label)) for label in ('u', 'v'))
    m33 = frame.entries[0][0]
    F3 = spec.eps * u * m33
    candidate = KillingCandidate(chart, u, spec.F2, F3, name='X')
    norm = -2 * u * v + 2 * u * spec.F2 + F3 * F3
    return candidate, norm


def build_example_I(spec, tol=1e-10, limit=40):
    r"""Metric, Killing vector and norm of the ``X_1 = u`` example.

    ``H`` and ``W_n`` integrate ``S`` and ``T_n`` along the characteristics ``x3 - eps u = const``:

    .. math::
        S = (u F_{2,u})_{,u} + \epsilon u F_{2,3u} + \epsilon^2 u (m_{33}^2)_{,u}, \quad
        T_n = [(u F_2)_{,u} + \epsilon u F_{2,3} + \epsilon^2 u m_{33}^2]_{,n} + \epsilon m_{3n} m_{33}

    and ``W_3 = -(H + F_2,u) / eps - F_2,3 - eps m_33^2``. The norm is
    ``-2 u v + 2 u F_2 + (eps u m_33)^2``.

    Args:
        spec (ExampleISpec): the inputs.
        tol (float): quadrature tolerance.
        limit (int): quadrature subdivision limit.

    Returns:
        tuple: ``(CCNVMetric, KillingCandidate, norm field)``
    """
    spec.check_region()
    chart, eps = spec.chart, spec.eps
    frame = spec.frame()
    u = symbolic(chart, chart.symbol('u'))
    F2, m33 = spec.F2, frame.entries[0][0]
    F2_u = F2.differentiate('u')
    square = m33 * m33
    S = (u * F2_u).differentiate('u') + eps * u * F2_u.differentiate('x3') + eps**2 * u * square.differentiate('u')
    H = (QuadratureField(-S, 'u', 0.0, eps, tol, limit) + shift(spec.A, eps)) / u if not S.is_zero() \
        else shift(spec.A, eps) / u
    W3 = -(H + F2_u) / eps - F2.differentiate('x3') - eps * square

    phi = (u * F2).differentiate('u') + eps * u * F2.differentiate('x3') + eps**2 * u * square
    W_hat = [W3]
    for n, label in enumerate(chart.transverse[1:], start=1):
        T = phi.differentiate(label) + eps * frame.entries[0][n] * m33
        integral = QuadratureField(-T, 'u', 0.0, eps, tol, limit) if not T.is_zero() else Constant(chart, 0)
        W_hat.append((integral + shift(spec.B[n - 1], eps)) / u)

    metric = CCNVMetric(chart, H, W_hat, frame, name='example I')
    candidate, norm = _candidate_and_norm(spec, frame)
    return metric, candidate, norm


def build_example_I_separable(spec):
    r"""Closed form of the ``X_1 = u`` example for ``m_3s = y^(p_s) h_s(x^n)``, ``y = x3 - eps u``.

    .. math::
        H = -\epsilon^2 y^{2p_3-1}[x^3 - \epsilon(p_3+1)u] h_3^2 - g_{,u} + A(y, x^n)/u

        \hat W_3 = -\epsilon^2 p_3 u y^{2p_3-1} h_3^2 - A(y, x^n)/(\epsilon u)

        \hat W_n = \epsilon y^{p_3} h_3 \left\{\frac{2 y^{p_3}}{2p_3+1}[x^3 - \epsilon(p_3+3/2)u] h_{3,n}
        - y^{p_n} h_n\right\} - g_{,n} + B_n(y, x^m)/u

    Args:
        spec (ExampleISpec): separable inputs (``p``, ``h``, ``g``).

    Returns:
        tuple: ``(CCNVMetric, KillingCandidate, norm field)``, all symbolic
    """
    if not spec.separable:
        raise FamilyError('the separable example needs the exponents `p` and factors `h`')
    spec.check_region()
    chart, eps = spec.chart, spec.eps
    x3, u_symbol = chart.symbol('x3'), chart.symbol('u')
    u = symbolic(chart, u_symbol)
    y = spec.y()
    p3 = spec.p[0]
    h3 = shift(spec.h[0], eps)
    A = shift(spec.A, eps)
    g = spec.g

    H = symbolic(chart, -eps**2 * y**(2 * p3 - 1) * (x3 - eps * (p3 + 1) * u_symbol)) * h3**2
    H = H - g.differentiate('u') + A / u
    W3 = symbolic(chart, -eps**2 * p3 * u_symbol * y**(2 * p3 - 1)) * h3**2 - A / (eps * u)
    W_hat = [W3]
    for n, label in enumerate(chart.transverse[1:], start=1):
        pn = spec.p[n]
        hn = shift(spec.h[n], eps)
        bracket = symbolic(chart, 2 * y**p3 / (2 * p3 + 1) * (x3 - eps * (p3 + sympy.Rational(3, 2)) * u_symbol))
        inner = bracket * h3.differentiate(label) - symbolic(chart, y**pn) * hn
        W_hat.append(symbolic(chart, eps * y**p3) * h3 * inner - g.differentiate(label) + shift(spec.B[n - 1], eps) / u)

    frame = spec.frame()
    metric = CCNVMetric(chart, H, W_hat, frame, name='example I separable')
    candidate, norm = _candidate_and_norm(spec, frame)
    return metric, candidate, norm
