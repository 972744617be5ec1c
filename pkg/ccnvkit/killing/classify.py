# -*- coding: utf-8 -*-
# @Time   : 2026/9/18
# @Author : ccnvkit developers

"""
ccnvkit.killing.classify
########################
"""

import numpy as np

from ccnvkit.geometry.frame_scalars import frame_scalars_at
from ccnvkit.scalarfield.jet import field_jet
from ccnvkit.utils import CaseTag


def case_evidence(X, m, sample):
    r"""Largest ``|D_3 X_1|`` and largest frame connection component ``Gamma_3n2``, ``Gamma_3n3``,
    ``Gamma_3nm`` (``n, m >= 4``) over a sample.

    Returns:
        dict: ``d3_x1``, ``gamma_3n2``, ``gamma_3n3`` and ``gamma_3nm`` maxima
    """
    sample = np.atleast_2d(np.asarray(sample, dtype=float))
    if sample.shape[0] == 0:
        raise ValueError('`sample` must contain at least one point')
    d3 = X.d3_x1(m)
    transverse = range(4, m.chart.dimension + 1)
    evidence = {'d3_x1': 0.0, 'gamma_3n2': 0.0, 'gamma_3n3': 0.0, 'gamma_3nm': 0.0}
    for p in sample:
        evidence['d3_x1'] = max(evidence['d3_x1'], abs(field_jet(d3, p, 0)[0]))
        scalars = frame_scalars_at(m, p)
        for n in transverse:
            evidence['gamma_3n2'] = max(evidence['gamma_3n2'], abs(scalars.gamma_3n2(n)))
            evidence['gamma_3n3'] = max(evidence['gamma_3n3'], abs(scalars.gamma_3n3(n)))
            for k in transverse:
                evidence['gamma_3nm'] = max(evidence['gamma_3nm'], abs(scalars.gamma_3nm(n, k)))
    return {name: float(value) for name, value in evidence.items()}


def classify_case(X, m, sample, tolerance=1e-9):
    r"""Split a candidate into Case 1 (``D_3 X_1 = 0``) and Case 2 (the transverse connection components
    ``Gamma_3n2``, ``Gamma_3n3`` and ``Gamma_3nm`` vanish).

    Args:
        X (KillingCandidate): the candidate.
        m (CCNVMetric): the metric.
        sample (numpy.ndarray): ``[N, D]`` points, ``N >= 1``.
        tolerance (float): threshold on the maxima over the sample.

    Returns:
        CaseTag: ``Case1``, ``Case2``, ``both`` or ``neither``
    """
    evidence = case_evidence(X, m, sample)
    case1 = evidence['d3_x1'] < tolerance
    case2 = max(evidence['gamma_3n2'], evidence['gamma_3n3'], evidence['gamma_3nm']) < tolerance
    if case1 and case2:
        return CaseTag.BOTH
    if case1:
        return CaseTag.CASE1
    if case2:
        return CaseTag.CASE2
    return CaseTag.NEITHER
