# -*- coding: utf-8 -*-
# @Time   : 2026/9/18
# @Author : ccnvkit developers

"""
ccnvkit.killing.equations
#########################

Two independent ways of checking the Killing equations: the coordinate Lie derivative of the metric and the
frame equations written with the frame scalars ``B``, ``J``, ``A`` and ``D``.
"""

from logging import getLogger

import numpy as np
from tqdm import tqdm

from ccnvkit.evaluator.report import ResidualReport
from ccnvkit.geometry.frame_scalars import frame_scalars_at
from ccnvkit.killing.candidate import CoordinateVector, to_coordinate_vector
from ccnvkit.scalarfield.jet import fields_jet
from ccnvkit.utils.exceptions import GaugeError

frame_groups = ('ell', 'n_n', 'n_transverse', 'transverse')


def lie_residual_at(X, m, p):
    r"""``(L_X g)_ab = X^c d_c g_ab + g_cb d_a X^c + g_ac d_b X^c`` at ``p``.

    Args:
        X (CoordinateVector or KillingCandidate): the vector.
        m (CCNVMetric): the metric.
        p (array-like): the point.

    Returns:
        numpy.ndarray: the symmetric ``[D, D]`` Lie derivative
    """
    X = to_coordinate_vector(X, m)
    p = m.chart.point(p)
    g, dg, _ = m.jet(p, order=1)
    values, jacobian = X.jacobian(p)
    lie = np.einsum('c,cab->ab', values, dg) + np.einsum('cb,ac->ab', g, jacobian)
    return lie + np.einsum('ac,bc->ab', g, jacobian)


def frame_components_jet(X, m, p):
    r"""Lowered frame components ``[X_1, X_2, X_3, 0, ...]`` at ``p`` and their frame derivatives.

    Returns:
        tuple: ``(scalars, x[D], dx[D, D])`` with ``dx[a, b] = D_a`` of the ``b``-th component
    """
    scalars = frame_scalars_at(m, p)
    p = scalars.point
    dimension = m.chart.dimension
    values, gradients, _ = fields_jet(X.frame_components(m), p, 1)
    x = np.zeros(dimension)
    x[:3] = values
    dx = np.zeros((dimension, dimension))
    for b in range(3):
        dx[:, b] = scalars.derive(gradients[:, b])
    return scalars, x, dx


def frame_killing_residuals_at(X, m, p, tolerance=1e-8, allow_ungauged=False):
    r"""Residuals of the frame Killing equations at ``p``, one group per projection.

    - ``ell``: ``X_1,v``, ``X_2,v + D_2 X_1`` and ``X_i,v + D_i X_1``.
    - ``n_n``: ``D_2 X_2 + J_i X_i``.
    - ``n_transverse``: ``D_i X_2 + D_2 X_i - J_i X_1 - (A_ji + B_ij) X_j``.
    - ``transverse``: ``D_i X_j + D_j X_i + 2 B_(ij) X_1 - X_k (D_jki + D_ikj)``.

    Args:
        X (KillingCandidate): the candidate.
        m (CCNVMetric): the metric.
        p (array-like): the point.
        tolerance (float): pass threshold of every group.
        allow_ungauged (bool): accept metrics with ``W_3 != 0``.

    Returns:
        ResidualReport: four checks named after their group

    Raises:
        GaugeError: the metric does not carry the ``W_3 = 0`` gauge and ``allow_ungauged`` is not set.
    """
    if not (m.w3_gauge or allow_ungauged):
        raise GaugeError('metric [{}] is not in the W_3 = 0 gauge required by the frame Killing equations'.format(
            m.name))
    scalars, x, dx = frame_components_jet(X, m, p)
    report = ResidualReport('frame killing')
    for name, value in frame_killing_groups(scalars, x, dx).items():
        report.collect(name, value, scalars.point, tolerance, group=name)
    return report


def frame_killing_groups(scalars, x, dx):
    r"""The four groups of frame Killing equations from precomputed frame data."""
    X1, X2, Xt = x[0], x[1], x[2:]
    D1, D2, Dt = dx[0], dx[1], dx[2:]
    B, J, A, D = scalars.B, scalars.J, scalars.A, scalars.D

    ell = np.concatenate([[D1[0], D1[1] + D2[0]], D1[2:] + Dt[:, 0]])
    n_n = D2[1] + J @ Xt
    n_transverse = Dt[:, 1] + D2[2:] - J * X1 - (A.T + B) @ Xt
    transverse = (
        Dt[:, 2:] + Dt[:, 2:].T + (B + B.T) * X1 - np.einsum('k,jki->ij', Xt, D) - np.einsum('k,ikj->ij', Xt, D)
    )
    return {'ell': ell, 'n_n': n_n, 'n_transverse': n_transverse, 'transverse': transverse}


def frame_killing_matrix(scalars, x, dx):
    r"""``K_ab = (L_X g)(e_a, e_b)`` from the frame structure constants."""
    upper = np.concatenate([[x[1], x[0]], x[2:]])
    C = scalars.C
    return dx + dx.T - np.einsum('c,cab->ab', upper, C) - np.einsum('c,cba->ab', upper, C)


def frame_projection(lie, scalars):
    r"""``(L_X g)(e_a, e_b)`` from the coordinate Lie derivative."""
    E = scalars.vectors()
    return E @ lie @ E.T


def killing_report(X, m, sample, tolerance=None, frame=True, allow_ungauged=True, show_progress=False):
    r"""Both Killing checks of a candidate over a sample.

    Args:
        X (KillingCandidate or CoordinateVector): the vector; coordinate vectors only get the Lie check.
        m (CCNVMetric): the metric.
        sample (numpy.ndarray): ``[N, D]`` points.
        tolerance (float, optional): defaults to ``1e-8``, or ``1e-7`` when the metric uses quadrature.
        frame (bool): also run the frame equations.
        allow_ungauged (bool): see :func:`frame_killing_residuals_at`.
        show_progress (bool): show a progress bar.

    Returns:
        ResidualReport: check ``lie`` (group ``lie``) and, with ``frame``, the four frame groups
    """
    if tolerance is None:
        tolerance = 1e-7 if m.uses_quadrature() else 1e-8
    frame = frame and not isinstance(X, CoordinateVector)
    if frame and not (m.w3_gauge or allow_ungauged):
        raise GaugeError('metric [{}] is not in the W_3 = 0 gauge required by the frame Killing equations'.format(
            m.name))
    coordinate = to_coordinate_vector(X, m)
    report = ResidualReport('killing {}'.format(X.name))
    points = np.atleast_2d(np.asarray(sample, dtype=float))
    if show_progress:
        points = tqdm(points, desc='killing {}'.format(X.name), ncols=100)
    for p in points:
        report.collect('lie', lie_residual_at(coordinate, m, p), p, tolerance, group='lie')
        if frame:
            report.merge(frame_killing_residuals_at(X, m, p, tolerance, allow_ungauged=True))
    getLogger().debug(str(report))
    return report


def dual_path_report(X, m, sample, tolerance=1e-8):
    r"""Agreement of the two Killing paths: the frame matrix :func:`frame_killing_matrix` against the frame
    projection of the coordinate Lie derivative, point by point.

    Args:
        X (KillingCandidate): the candidate.
        m (CCNVMetric): the metric.
        sample (numpy.ndarray): ``[N, D]`` points.
        tolerance (float): pass threshold.

    Returns:
        ResidualReport: check ``agreement`` (group ``agreement``)
    """
    coordinate = to_coordinate_vector(X, m)
    report = ResidualReport('dual path {}'.format(X.name))
    for p in np.atleast_2d(np.asarray(sample, dtype=float)):
        scalars, x, dx = frame_components_jet(X, m, p)
        projected = frame_projection(lie_residual_at(coordinate, m, p), scalars)
        report.collect('agreement', projected - frame_killing_matrix(scalars, x, dx), p, tolerance, group='agreement')
    return report
