# -*- coding: utf-8 -*-
# @Time   : 2026/9/18
# @Author : ccnvkit developers

"""
ccnvkit.killing.causal
######################
"""

import numpy as np
import pandas as pd

from ccnvkit.killing.candidate import KillingCandidate, to_coordinate_vector
from ccnvkit.scalarfield import Constant
from ccnvkit.scalarfield.jet import fields_jet
from ccnvkit.utils import CausalLabel, KillingForm
from ccnvkit.utils.exceptions import CandidateError


def norm_at(X, m, p):
    r"""``g(X, X)`` at ``p`` by full contraction with the coordinate metric."""
    p = m.chart.point(p)
    vector = to_coordinate_vector(X, m).evaluate(p)
    g = m.jet(p, order=0)[0]
    return float(vector @ g @ vector)


def frame_norm_at(X, m, p):
    r"""``2 X_1 X_2 + X_3^2`` at ``p``."""
    p = m.chart.point(p)
    x1, x2, x3 = fields_jet(X.frame_components(m), p, 0)[0]
    return float(2.0 * x1 * x2 + x3 * x3)


def norms_on(X, m, points):
    r""":func:`norm_at` over many points at once.

    Args:
        X (KillingCandidate or CoordinateVector): the vector.
        m (CCNVMetric): the metric.
        points (numpy.ndarray): ``[N, D]`` points.

    Returns:
        numpy.ndarray: ``[N]`` norms
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    vector = np.stack([c.evaluate_many(points) for c in to_coordinate_vector(X, m).components], axis=1)
    h = m.H.evaluate_many(points)
    w = np.stack([field.evaluate_many(points) for field in m.W_hat], axis=1)
    M = np.stack([np.stack([entry.evaluate_many(points) for entry in row], axis=1) for row in m.frame.entries],
                 axis=1)
    xu, xv, xt = vector[:, 0], vector[:, 1], vector[:, 2:]
    transverse = np.einsum('nie,ne->ni', M, xt)
    return 2.0 * xu * xv + 2.0 * h * xu * xu + 2.0 * xu * np.einsum('ne,ne->n', w, xt) + np.einsum(
        'ni,ni->n', transverse, transverse)


def frame_norms_on(X, m, points):
    r""":func:`frame_norm_at` over many points at once."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    x1, x2, x3 = (field.evaluate_many(points) for field in X.frame_components(m))
    return 2.0 * x1 * x2 + x3 * x3


def null_threshold(v_max, tolerance=1e-9):
    return tolerance * (1.0 + v_max**2)


def label_norm(norm, threshold):
    if abs(norm) <= threshold:
        return CausalLabel.NULL
    return CausalLabel.TIMELIKE if norm < 0 else CausalLabel.SPACELIKE


class CausalReport(object):
    r"""Causal character of a candidate over a grid.

    Attributes:
        points (numpy.ndarray): ``[N, D]`` grid.
        norms (numpy.ndarray): ``g(X, X)`` per point.
        labels (list of CausalLabel): label per point.
        d3_x1 (float): largest ``|D_3 X_1|`` over the grid.
        bound_holds (bool): ``g(X, X) <= 0`` for every ``v`` at every ``(u, x)`` node of the grid, from the
            quadratic in ``v`` fitted through the norm at ``v = -1, 0, 1``.
        printed_holds (bool): ``F_3^2 - 2 X_1 F_2 <= 0`` at every node.
    """

    def __init__(self, X, chart, points, norms, threshold, d3_x1, bound_holds, printed_holds, tolerance):
        self.name = X.name
        self.chart = chart
        self.points = points
        self.norms = norms
        self.threshold = threshold
        self.labels = [label_norm(norm, threshold) for norm in norms]
        self.d3_x1 = d3_x1
        self.d3_x1_zero = d3_x1 < tolerance
        self.bound_holds = bound_holds
        self.printed_holds = printed_holds

    @property
    def non_spacelike(self):
        r"""Whether the candidate is timelike or null for every ``v``: ``D_3 X_1`` vanishes and the norm bound
        holds."""
        return self.d3_x1_zero and self.bound_holds

    def counts(self):
        return {label.value: sum(1 for item in self.labels if item == label) for label in CausalLabel}

    def all_labels(self, label):
        return all(item == CausalLabel(label) for item in self.labels)

    def to_frame(self):
        r"""Grid, norms and labels as a ``pandas.DataFrame`` with columns ``kv, u, v, x3, ..., norm, label``."""
        frame = pd.DataFrame(self.points, columns=list(self.chart.labels))
        frame.insert(0, 'kv', self.name)
        frame['norm'] = self.norms
        frame['label'] = [label.value for label in self.labels]
        return frame

    def to_dict(self):
        return {
            'counts': self.counts(),
            'd3_x1_max': float(self.d3_x1),
            'd3_x1_zero': bool(self.d3_x1_zero),
            'norm_bound_holds': bool(self.bound_holds),
            'printed_inequality_holds': bool(self.printed_holds),
            'non_spacelike': bool(self.non_spacelike),
        }


def quadratic_bound(n_minus, n_zero, n_plus, tolerance):
    r"""Whether ``q(v) = a v^2 + b v + c`` through ``(-1, n_minus), (0, n_zero), (1, n_plus)`` is ``<= 0`` for
    all ``v``."""
    c = n_zero
    a = (n_plus + n_minus) / 2.0 - n_zero
    b = (n_plus - n_minus) / 2.0
    if a < -tolerance:
        return c - b * b / (4.0 * a) <= tolerance
    return abs(a) <= tolerance and abs(b) <= tolerance and c <= tolerance


def causal_classify(X, m, grid, tolerance=1e-9):
    r"""Label a candidate timelike, null or spacelike on a grid and test whether it is non-spacelike for all
    ``v``.

    A point is null when ``|g(X, X)| <= tolerance * (1 + v_max^2)``, ``v_max`` being the largest ``|v|`` of the
    grid.

    Args:
        X (KillingCandidate): the candidate.
        m (CCNVMetric): the metric.
        grid (numpy.ndarray): ``[N, D]`` points, ``N >= 1``.
        tolerance (float): null and bound threshold.

    Returns:
        CausalReport: labels and global flags
    """
    grid = np.atleast_2d(np.asarray(grid, dtype=float))
    if grid.shape[0] == 0:
        raise ValueError('`grid` must contain at least one point')
    chart = m.chart
    iv = chart.index('v')
    norms = norms_on(X, m, grid)
    threshold = null_threshold(float(np.max(np.abs(grid[:, iv]))), tolerance)

    nodes = np.unique(np.delete(grid, iv, axis=1), axis=0)
    base = np.insert(nodes, iv, 0.0, axis=1)
    d3_max = float(np.max(np.abs(X.d3_x1(m).evaluate_many(base))))
    profile = []
    for v in (-1.0, 0.0, 1.0):
        shifted = base.copy()
        shifted[:, iv] = v
        profile.append(norms_on(X, m, shifted))
    bound_holds = all(quadratic_bound(a, b, c, tolerance) for a, b, c in zip(*profile))
    x1, f2, f3 = (field.evaluate_many(base) for field in (X.F1, X.F2, X.F3))
    printed_holds = bool(np.all(f3 * f3 - 2.0 * x1 * f2 <= tolerance))
    return CausalReport(X, chart, grid, norms, threshold, d3_max, bound_holds, printed_holds, tolerance)


def null_normalize(X):
    r"""Rescale a candidate with constant ``X_1 = c`` to ``X_1 = 1`` and choose ``F_2 = -F_3^2 / 2`` so that its
    norm ``2 F_2 + F_3^2`` vanishes.

    Args:
        X (KillingCandidate): a candidate with constant nonzero ``F_1``.

    Returns:
        KillingCandidate: the null candidate

    Raises:
        CandidateError: ``F_1`` is not constant, or vanishes (then the vector is a multiple of ``l``).
    """
    if not isinstance(X.F1, Constant):
        raise CandidateError('null normalization needs a constant X_1, candidate [{}] has X_1 = {}'.format(
            X.name, X.F1))
    c = X.F1.value
    if c == 0:
        raise CandidateError('candidate [{}] has X_1 = 0: it is a multiple of ell and is disregarded'.format(X.name))
    F3 = X.F3 / c if c != 1 else X.F3
    F2 = -(F3 * F3) / 2
    return KillingCandidate(X.chart, 1, F2, F3, form=KillingForm.A, name=X.name)
