# -*- coding: utf-8 -*-
# @Time   : 2026/9/17
# @Author : ccnvkit developers

"""
ccnvkit.geometry.connection
###########################
"""

from collections import namedtuple
from logging import getLogger

import numpy as np

from ccnvkit.evaluator.report import ResidualReport
from ccnvkit.utils.exceptions import SingularFrameError

ConnectionTable = namedtuple('ConnectionTable', ['metric', 'inverse', 'gamma'])
ConnectionTable.__doc__ = r"""Levi-Civita connection at a point.

- ``metric``: ``g_ab``.
- ``inverse``: ``g^ab``.
- ``gamma``: ``gamma[a, b, c] = Gamma^a_bc``, symmetric in ``b, c``.
"""


def inverse_metric(g, p=None):
    r"""Inverse of the metric matrix ``g``.

    Raises:
        SingularFrameError: when ``g`` is not invertible.
    """
    try:
        ginv = np.linalg.inv(g)
    except np.linalg.LinAlgError:
        raise SingularFrameError('the metric is singular at {}'.format(None if p is None else list(p)))
    if not np.all(np.isfinite(ginv)):
        raise SingularFrameError('the metric is singular at {}'.format(None if p is None else list(p)))
    return ginv


def lowered_christoffel(dg):
    r"""``low[d, b, c] = (d_b g_dc + d_c g_db - d_d g_bc) / 2`` from ``dg[c, a, b] = d_c g_ab``."""
    return 0.5 * (np.einsum('bdc->dbc', dg) + np.einsum('cdb->dbc', dg) - dg)


def christoffel_from_jet(g, dg, p=None):
    r"""Christoffel symbols of the second kind from the metric and its first derivatives.

    Args:
        g (numpy.ndarray): ``[D, D]`` metric.
        dg (numpy.ndarray): ``[D, D, D]``, ``dg[c, a, b] = d_c g_ab``.
        p (numpy.ndarray, optional): the point, only used in error messages.

    Returns:
        ConnectionTable: metric, inverse metric and ``Gamma^a_bc``
    """
    ginv = inverse_metric(g, p)
    gamma = np.einsum('ad,dbc->abc', ginv, lowered_christoffel(dg))
    return ConnectionTable(g, ginv, gamma)


def christoffel_at(m, p):
    r"""Levi-Civita connection of ``m`` at ``p`` from exact derivatives of the metric functions.

    Args:
        m (CCNVMetric): the metric.
        p (array-like): the point.

    Returns:
        ConnectionTable: see :func:`christoffel_from_jet`

    Raises:
        SingularFrameError: singular frame or metric at ``p``.
        FieldEvaluationError: a field cannot be evaluated at ``p``.
    """
    p = m.chart.point(p)
    g, dg, _ = m.jet(p, order=1)
    return christoffel_from_jet(g, dg, p)


def nabla_ell(m, p):
    r"""``nabla_a l_b`` and ``l_a l^a`` at ``p`` for ``l^a = delta^a_v``, whose lowered form is ``l_b = g_bv``."""
    p = m.chart.point(p)
    g, dg, _ = m.jet(p, order=1)
    table = christoffel_from_jet(g, dg, p)
    v = m.chart.index('v')
    covariant = dg[:, :, v] - np.einsum('cab,c->ab', table.gamma, g[:, v])
    return covariant, g[v, v]


def ccnv_residual(m, sample, tolerance=1e-10):
    r"""Check that ``l = d/dv`` is null and covariantly constant over a sample.

    Args:
        m (CCNVMetric): the metric.
        sample (numpy.ndarray): ``[N, D]`` points, ``N >= 1``.
        tolerance (float): pass threshold of both checks.

    Returns:
        ResidualReport: checks ``nabla_ell`` (max over ``|nabla_a l_b|``) and ``ell_norm`` (``|l_a l^a|``)
    """
    sample = np.atleast_2d(np.asarray(sample, dtype=float))
    if sample.shape[0] == 0:
        raise ValueError('`sample` must contain at least one point')
    logger = getLogger()
    report = ResidualReport('ccnv')
    for p in sample:
        covariant, norm = nabla_ell(m, p)
        report.collect('nabla_ell', covariant, p, tolerance, group='ccnv')
        report.collect('ell_norm', norm, p, tolerance, group='ccnv')
    logger.debug('ccnv residual of [{}] over {} points: {!r}'.format(m.name, sample.shape[0], report.max()))
    return report
