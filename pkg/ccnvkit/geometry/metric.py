# -*- coding: utf-8 -*-
# @Time   : 2026/9/16
# @Author : ccnvkit developers

"""
ccnvkit.geometry.metric
#######################
"""

from logging import getLogger

import numpy as np

from ccnvkit.geometry.frame import TransverseFrame
from ccnvkit.scalarfield import as_field, require_mask
from ccnvkit.scalarfield.jet import field_jet, fields_jet


class CCNVMetric(object):
    r"""Frame data of a Kundt metric with a covariantly constant null vector ``l = d/dv``.

    .. math::
        ds^2 = 2 du [dv + H du + \hat W_e dx^e] + g_{ef} dx^e dx^f, \quad g_{ef} = \sum_i m_{ie} m_{if}

    Args:
        chart (Chart): the chart.
        H (ScalarField): ``H(u, x^e)``.
        W_hat (list of ScalarField): ``[W_3, ..., W_D]``.
        frame (TransverseFrame, optional): defaults to the identity frame.
        strict (bool): reject ``v``-dependent slots. Non-strict metrics exist to exercise the checks with
            deliberately broken inputs.
        gauge (bool, optional): assert the ``W_3 = 0`` gauge; by default it is read off ``W_3``.
        name (str, optional): label used in reports.
    """

    def __init__(self, chart, H, W_hat=None, frame=None, strict=True, gauge=None, name=None):
        self.logger = getLogger()
        self.chart = chart
        size = chart.dimension - 2
        self.H = as_field(chart, H)
        W_hat = W_hat if W_hat is not None else [0] * size
        if len(W_hat) != size:
            raise ValueError('expected {} components of W, got {}'.format(size, len(W_hat)))
        self.W_hat = [as_field(chart, w) for w in W_hat]
        self.frame = frame if frame is not None else TransverseFrame.identity(chart)
        if self.frame.chart != chart:
            raise ValueError('the frame lives on {}, the metric on {}'.format(self.frame.chart, chart))
        self.strict = strict
        self.name = name or 'metric'

        allowed = [label for label in chart.labels if label != 'v']
        self.v_dependent = []
        for slot, field in self.slots():
            if strict:
                require_mask(field, slot, allowed)
            elif field.depends_on('v'):
                self.v_dependent.append(slot)
        if self.v_dependent:
            self.logger.warning('metric [{}] depends on v through {}'.format(self.name, ', '.join(self.v_dependent)))

        if gauge is None:
            gauge = self.W_hat[0].is_zero()
        self.w3_gauge = bool(gauge)

    def slots(self):
        r"""``(name, field)`` pairs of the metric functions."""
        yield 'H', self.H
        for e, w in enumerate(self.W_hat):
            yield 'W{}'.format(e + 3), w

    def uses_quadrature(self):
        fields = [self.H] + self.W_hat + [entry for row in self.frame.entries for entry in row]
        return any(field.uses_quadrature() for field in fields)

    def mutated(self, H=None, W_hat=None, frame=None, name=None):
        r"""A non-strict copy with some slots replaced."""
        return CCNVMetric(
            self.chart,
            self.H if H is None else H,
            self.W_hat if W_hat is None else W_hat,
            self.frame if frame is None else frame,
            strict=False,
            gauge=None,
            name=name or self.name + '*',
        )

    def jet(self, p, order=1):
        r"""Metric components and their exact coordinate derivatives at ``p``.

        Returns:
            tuple: ``(g[D, D], dg[D, D, D], ddg[D, D, D, D])`` with ``dg[c, a, b] = d_c g_ab`` and
            ``ddg[c, d, a, b] = d_c d_d g_ab``; ``ddg`` is ``None`` unless ``order == 2``
        """
        dimension = self.chart.dimension
        h, dh, ddh = field_jet(self.H, p, order)
        w, dw, ddw = fields_jet(self.W_hat, p, order)
        m, dm, ddm = self.frame.jet(p, order)

        g = np.zeros((dimension, dimension))
        g[0, 1] = g[1, 0] = 1.0
        g[0, 0] = 2.0 * h
        g[0, 2:] = g[2:, 0] = w
        g[2:, 2:] = m.T @ m
        if order < 1:
            return g, None, None

        dg = np.zeros((dimension, dimension, dimension))
        dg[:, 0, 0] = 2.0 * dh
        dg[:, 0, 2:] = dw
        dg[:, 2:, 0] = dw
        first = np.einsum('cie,if->cef', dm, m)
        dg[:, 2:, 2:] = first + first.transpose(0, 2, 1)
        if order < 2:
            return g, dg, None

        ddg = np.zeros((dimension, dimension, dimension, dimension))
        ddg[:, :, 0, 0] = 2.0 * ddh
        ddg[:, :, 0, 2:] = ddw
        ddg[:, :, 2:, 0] = ddw
        second = np.einsum('cdie,if->cdef', ddm, m) + np.einsum('cie,dif->cdef', dm, dm)
        ddg[:, :, 2:, 2:] = second + second.transpose(0, 1, 3, 2)
        return g, dg, ddg

    def components_grid(self, points):
        r"""Metric matrices at every row of ``points``, shape ``[N, D, D]``."""
        return np.array([self.jet(p, order=0)[0] for p in np.atleast_2d(points)])

    def __repr__(self):
        return 'CCNVMetric({}, {}, gauge={})'.format(self.name, self.chart, self.w3_gauge)


def assemble_metric(metric, p):
    r"""Full metric matrix of ``metric`` at ``p``.

    Args:
        metric (CCNVMetric): the metric.
        p (array-like): the point.

    Returns:
        numpy.ndarray: symmetric ``[D, D]`` matrix

    Raises:
        SingularFrameError: when the frame is not invertible at ``p``.
    """
    return metric.jet(metric.chart.point(p), order=0)[0]
